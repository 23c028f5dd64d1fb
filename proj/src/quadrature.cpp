#include "hardy/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "hardy/kernels.hpp"

namespace hardy {

namespace {

constexpr int gl_order = 10;
constexpr double floor_rel_cap = 1e-6;

struct Rule {
    std::array<double, gl_order> x;
    std::array<double, gl_order> w;
};

Rule make_rule() {
    Rule r{};
    const int n = gl_order;
    for (int i = 0; i < n; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        r.x[i] = z;
        r.w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    // make the weights sum to exactly 2 so constants integrate without rounding
    double s = 0.0;
    for (int i = 0; i + 1 < n; ++i) s += r.w[i];
    r.w[n - 1] = 2.0 - s;
    return r;
}

const Rule& rule() {
    static const Rule r = make_rule();
    return r;
}

Panel make_panel(const RealFn& f, double lo, double hi, double whole) {
    double mid = 0.5 * (lo + hi);
    double left = gauss_legendre(f, lo, mid);
    double right = gauss_legendre(f, mid, hi);
    double value = left + right;
    return {lo, hi, value, left, std::abs(whole - value)};
}

struct ByError {
    bool operator()(const Panel& a, const Panel& b) const {
        if (a.error != b.error) return a.error < b.error;
        return a.lo > b.lo;
    }
};

bool splittable(const Panel& p) {
    double scale = std::max(std::abs(p.lo), std::abs(p.hi));
    return (p.hi - p.lo) > 1024.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1e-300);
}

std::vector<double> initial_breaks(double a, double b) {
    std::vector<double> br;
    if (a > 0 && b / a > 16.0) {
        int m = std::min(64, static_cast<int>(std::ceil(std::log2(b / a))));
        for (int i = 0; i <= m; ++i) br.push_back(a * std::pow(b / a, static_cast<double>(i) / m));
    } else {
        for (int i = 0; i <= 4; ++i) br.push_back(a + (b - a) * i / 4.0);
    }
    br.front() = a;
    br.back() = b;
    return br;
}

}  // namespace

double gauss_legendre(const RealFn& f, double lo, double hi) {
    const Rule& r = rule();
    double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double acc = 0.0;
    for (int i = 0; i < gl_order; ++i) {
        double v = f(c + h * r.x[i]);
        if (v != 0.0) acc += r.w[i] * v;
    }
    return acc * h;
}

QuadratureResult integrate_adaptive(const RealFn& f, double a, double b, const QuadratureOptions& opt) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    std::vector<Panel> done;  // panels too narrow to split
    double total = 0.0, err = 0.0, floor_err = 0.0;
    auto br = initial_breaks(a, b);
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
        Panel p = make_panel(f, br[i], br[i + 1], gauss_legendre(f, br[i], br[i + 1]));
        total += p.value;
        err += p.error;
        heap.push(p);
    }
    std::size_t count = heap.size();
    std::size_t iter = 0;
    auto finite = [](double x) { return std::isfinite(x); };
    while (finite(total) && finite(err)) {
        // unsplittable panels only block convergence above the cap
        double tol = std::max(opt.rel_tol * std::abs(total), opt.abs_tol);
        if (err - floor_err <= tol && floor_err <= std::max(floor_rel_cap * std::abs(total), opt.abs_tol)) {
            res.converged = true;
            break;
        }
        if (heap.empty() || count >= opt.max_panels) break;
        Panel p = heap.top();
        heap.pop();
        if (!splittable(p)) {
            floor_err += p.error;
            done.push_back(p);
            continue;
        }
        double mid = 0.5 * (p.lo + p.hi);
        Panel l = make_panel(f, p.lo, mid, p.left);
        Panel r = make_panel(f, mid, p.hi, p.value - p.left);
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
        ++count;
        if (++iter % 1024 == 0) {
            // resum to stop drift in the running totals
            auto copy = heap;
            total = 0.0;
            err = 0.0;
            while (!copy.empty()) {
                total += copy.top().value;
                err += copy.top().error;
                copy.pop();
            }
            floor_err = 0.0;
            for (const auto& d : done) {
                total += d.value;
                err += d.error;
                floor_err += d.error;
            }
        }
    }
    while (!heap.empty()) {
        done.push_back(heap.top());
        heap.pop();
    }
    std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    std::vector<double> vals(done.size()), errs(done.size());
    for (std::size_t i = 0; i < done.size(); ++i) {
        vals[i] = done[i].value;
        errs[i] = done[i].error;
    }
    res.integral.value = kernels::sum_serial(vals);
    res.integral.abs_error_estimate = kernels::sum_serial(errs);
    res.panels = std::move(done);
    if (!std::isfinite(res.integral.value) || !std::isfinite(res.integral.abs_error_estimate)) res.converged = false;
    return res;
}

double integrate_on_mesh(const RealFn& f, const std::vector<double>& breaks) {
    std::vector<double> vals;
    vals.reserve(breaks.size());
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double mid = 0.5 * (breaks[i] + breaks[i + 1]);
        vals.push_back(gauss_legendre(f, breaks[i], mid) + gauss_legendre(f, mid, breaks[i + 1]));
    }
    return kernels::sum_serial(vals);
}

std::vector<double> breakpoints(const std::vector<Panel>& panels) {
    std::vector<double> br;
    br.reserve(panels.size() + 1);
    for (const auto& p : panels) br.push_back(p.lo);
    if (!panels.empty()) br.push_back(panels.back().hi);
    return br;
}

PanelTable::PanelTable(RealFn f, std::vector<Panel> panels) : f_(std::move(f)), panels_(std::move(panels)) {
    breaks_ = breakpoints(panels_);
    std::vector<double> vals(panels_.size());
    for (std::size_t i = 0; i < panels_.size(); ++i) vals[i] = panels_[i].value;
    prefix_.resize(vals.size() + 1);
    suffix_.resize(vals.size() + 1);
    kernels::prefix_sum(vals, prefix_);
    kernels::suffix_sum(vals, suffix_);
}

std::size_t PanelTable::panel_of(double t) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    std::size_t k = it == breaks_.begin() ? 0 : static_cast<std::size_t>(it - breaks_.begin()) - 1;
    return std::min(k, panels_.size() - 1);
}

double PanelTable::partial(std::size_t k, double t) const {
    const Panel& p = panels_[k];
    double mid = 0.5 * (p.lo + p.hi);
    if (t <= p.lo) return 0.0;
    if (t >= p.hi) return p.value;
    if (t <= mid) return gauss_legendre(f_, p.lo, t);
    return p.left + gauss_legendre(f_, mid, t);
}

double PanelTable::rest(std::size_t k, double t) const {
    const Panel& p = panels_[k];
    double mid = 0.5 * (p.lo + p.hi);
    if (t <= p.lo) return p.value;
    if (t >= p.hi) return 0.0;
    if (t >= mid) return gauss_legendre(f_, t, p.hi);
    return (p.value - p.left) + gauss_legendre(f_, t, mid);
}

double PanelTable::lower(double t) const {
    if (panels_.empty() || t <= lo()) return 0.0;
    if (t >= hi()) return prefix_.back();
    std::size_t k = panel_of(t);
    return prefix_[k] + partial(k, t);
}

double PanelTable::upper(double t) const {
    if (panels_.empty() || t >= hi()) return 0.0;
    if (t <= lo()) return suffix_.front();
    std::size_t k = panel_of(t);
    return suffix_[k + 1] + rest(k, t);
}

}  // namespace hardy
