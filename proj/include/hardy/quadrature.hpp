#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hardy {

struct IntegralValue {
    double value = 0.0;
    double abs_error_estimate = 0.0;
};

using RealFn = std::function<double(double)>;

// 10-point Gauss-Legendre rule on [lo, hi]
double gauss_legendre(const RealFn& f, double lo, double hi);

struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    std::size_t max_panels = std::size_t{1} << 16;
};

struct Panel {
    double lo;
    double hi;
    double value;  // sum of the two half-panel rules
    double left;   // rule on [lo, mid]
    double error;
};

struct QuadratureResult {
    IntegralValue integral;
    std::vector<Panel> panels;  // sorted by lo
    bool converged = false;
};

// Composite Gauss-Legendre with global adaptive bisection. Panels are
// refined worst-first until the summed error estimate drops below
// max(rel_tol*|value|, abs_tol) or the panel budget runs out.
QuadratureResult integrate_adaptive(const RealFn& f, double a, double b, const QuadratureOptions& opt = {});

// Same rule on a fixed set of breakpoints (no refinement).
double integrate_on_mesh(const RealFn& f, const std::vector<double>& breaks);

std::vector<double> breakpoints(const std::vector<Panel>& panels);

// Running integral of f from a, tabulated at panel boundaries.
class PanelTable {
public:
    PanelTable() = default;
    PanelTable(RealFn f, std::vector<Panel> panels);

    double lo() const { return breaks_.front(); }
    double hi() const { return breaks_.back(); }
    // integral from lo() to t
    double lower(double t) const;
    // integral from t to hi()
    double upper(double t) const;
    const std::vector<double>& breaks() const { return breaks_; }

private:
    double partial(std::size_t k, double t) const;  // integral over [breaks_[k], t]
    double rest(std::size_t k, double t) const;     // integral over [t, breaks_[k+1]]
    std::size_t panel_of(double t) const;

    RealFn f_;
    std::vector<Panel> panels_;
    std::vector<double> breaks_;
    std::vector<double> prefix_;
    std::vector<double> suffix_;
};

}  // namespace hardy
