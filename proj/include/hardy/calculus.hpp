#pragma once

#include <vector>

#include "hardy/expression.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/scale_function.hpp"
#include "hardy/timescale.hpp"

namespace hardy {

// t^(alpha-1); exactly 1 when alpha == 1
double alpha_weight(double t, double alpha);

double delta_derivative(const ScaleFunction& f, const TimeScale& ts, double t);
double conformable_derivative(const ScaleFunction& f, const TimeScale& ts, double t, double alpha);

IntegralValue delta_alpha_integral(const ScaleFunction& f, const TimeScale& ts, double a, double b, double alpha);

// smallest member >= 2*horizon, capped at the scale maximum
double extend_horizon(const TimeScale& ts, double horizon);

struct TailValue {
    IntegralValue value;
    double sensitivity;
};

TailValue improper_tail(const ScaleFunction& f, const TimeScale& ts, double from, double horizon, double alpha);

enum class Side { lower, upper };

// Tabulated running integral on a scattered window: points are
// points_in(a, horizon) followed by horizon itself.
class ScatteredCumulative final : public ScaleFunction::Impl {
public:
    ScatteredCumulative(std::vector<double> points, std::vector<double> increments, Side side);
    double value(double t) const override;
    std::optional<double> exact_delta(double t, double mu) const override;
    std::string describe() const override;

    const std::vector<double>& points() const { return points_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& increments() const { return increments_; }
    std::size_t index_of(double t) const;

private:
    std::vector<double> points_;
    std::vector<double> increments_;
    std::vector<double> values_;
    Side side_;
};

class DenseCumulative final : public ScaleFunction::Impl {
public:
    DenseCumulative(ScaleFunction integrand, double alpha, PanelTable table, Side side);
    double value(double t) const override;
    std::optional<double> exact_delta(double t, double mu) const override;
    std::string describe() const override;

private:
    ScaleFunction integrand_;
    double alpha_;
    PanelTable table_;
    Side side_;
};

// lower: G(t) = int_a^t g; upper: H(t) = int_t^horizon g. Defined on [a, horizon].
ScaleFunction cumulative(const ScaleFunction& g, const TimeScale& ts, double a, Side side, double horizon,
                         double alpha);

double parts_residual(const ScaleFunction& u, const ScaleFunction& v, const TimeScale& ts, double a, double b,
                      double alpha);
// residual divided by the magnitude of the largest term of the identity
double parts_residual_relative(const ScaleFunction& u, const ScaleFunction& v, const TimeScale& ts, double a,
                               double b, double alpha);

struct HolderGap {
    double lhs;
    double rhs;
};

HolderGap holder_gap(const ScaleFunction& f, const ScaleFunction& g, const TimeScale& ts, double a, double b,
                     double p, double alpha);

struct ChainCheck {
    double lhs;
    double rhs;
    double residual;
    double bracket_lo;
    double bracket_hi;
    bool bracket_ok;
};

ChainCheck chain_rule_check(const Expression& eta, const ScaleFunction& xi, const TimeScale& ts, double t,
                            double alpha);

}  // namespace hardy
