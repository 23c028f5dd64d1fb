#include "hardy/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"

namespace hardy {

namespace {

const double fd_step = std::cbrt(std::numeric_limits<double>::epsilon());

double dense_fd(const ScaleFunction& f, const RealInterval& r, double t) {
    double h = fd_step * std::max(1.0, std::abs(t));
    if (t - h < r.lo) {
        // second-order forward difference
        return (-3.0 * f(t) + 4.0 * f(t + h) - f(t + 2.0 * h)) / (2.0 * h);
    }
    if (t + h > r.hi) {
        return (3.0 * f(t) - 4.0 * f(t - h) + f(t - 2.0 * h)) / (2.0 * h);
    }
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

void require_positive_window(double first, double alpha) {
    if (alpha < 1.0 && !(first > 0.0)) throw SingularWeight(first);
}

// left endpoints of [a,b) and their graininess
struct Grid {
    std::vector<double> t;
    std::vector<double> mu;
};

Grid scattered_grid(const TimeScale& ts, double a, double b) {
    Grid g;
    g.t = ts.points_in(a, b);
    double end = ts.member(b);
    g.mu.resize(g.t.size());
    for (std::size_t i = 0; i < g.t.size(); ++i) g.mu[i] = (i + 1 < g.t.size() ? g.t[i + 1] : end) - g.t[i];
    return g;
}

std::vector<double> measure(const Grid& g, double alpha) {
    return kernels::fill(g.t.size(), [&](std::size_t i) {
        double w = alpha_weight(g.t[i], alpha);
        return g.mu[i] == 0.0 ? 0.0 : w * g.mu[i];
    });
}

IntegralValue dense_integral(const RealFn& fn, double a, double b, double rel_tol) {
    QuadratureOptions opt;
    opt.rel_tol = rel_tol;
    auto res = integrate_adaptive(fn, a, b, opt);
    if (!res.converged) throw QuadratureNonConvergence(res.integral.value, res.integral.abs_error_estimate);
    return res.integral;
}

struct PartsTerms {
    double lhs;
    double boundary;
    double other;
};

PartsTerms parts_terms(const ScaleFunction& u, const ScaleFunction& v, const TimeScale& ts, double a, double b,
                       double alpha) {
    double lo = ts.member(a), hi = ts.member(b);
    double boundary = u(hi) * v(hi) - u(lo) * v(lo);
    if (ts.is_dense()) {
        // dense: the weights t^(alpha-1) and t^(1-alpha) cancel
        const auto& r = std::get<RealInterval>(ts.kind());
        double lhs = dense_integral([&](double t) { return u(t) * dense_fd(v, r, t); }, lo, hi, 1e-10).value;
        double other = dense_integral([&](double t) { return dense_fd(u, r, t) * v(t); }, lo, hi, 1e-10).value;
        return {lhs, boundary, other};
    }
    Grid g = scattered_grid(ts, lo, hi);
    if (!g.t.empty()) require_positive_window(g.t.front(), alpha);
    std::vector<double> dm = measure(g, alpha);
    auto lhs_terms = kernels::fill(g.t.size(), [&](std::size_t i) {
        double t = g.t[i], s = t + g.mu[i];
        double tv = (v(s) - v(t)) / g.mu[i] / alpha_weight(t, alpha);
        double x = u(t);
        return x == 0.0 ? 0.0 : x * tv;
    });
    auto other_terms = kernels::fill(g.t.size(), [&](std::size_t i) {
        double t = g.t[i], s = t + g.mu[i];
        double tu = (u(s) - u(t)) / g.mu[i] / alpha_weight(t, alpha);
        return tu == 0.0 ? 0.0 : tu * v(s);
    });
    return {kernels::weighted_sum(lhs_terms, dm), boundary, kernels::weighted_sum(other_terms, dm)};
}

}  // namespace

double alpha_weight(double t, double alpha) { return alpha == 1.0 ? 1.0 : std::pow(t, alpha - 1.0); }

double delta_derivative(const ScaleFunction& f, const TimeScale& ts, double t) {
    Jump j = ts.jump(t);
    double x = ts.member(t);
    if (j.cls.right == RightClass::scattered) {
        if (auto d = f.exact_delta(x, j.mu)) return *d;
        return (f(j.sigma) - f(x)) / j.mu;
    }
    auto* r = std::get_if<RealInterval>(&ts.kind());
    if (!r) throw AtMaximum(x);
    if (auto d = f.exact_delta(x, 0.0)) return *d;
    return dense_fd(f, *r, x);
}

double conformable_derivative(const ScaleFunction& f, const TimeScale& ts, double t, double alpha) {
    if (alpha < 1.0 && !(t > 0.0)) throw NonPositivePoint(t);
    double d = delta_derivative(f, ts, t);
    if (alpha == 1.0) return d;
    return d * std::pow(ts.member(t), 1.0 - alpha);
}

IntegralValue delta_alpha_integral(const ScaleFunction& f, const TimeScale& ts, double a, double b, double alpha) {
    double lo = ts.member(a), hi = ts.member(b);
    if (lo == hi) return {};
    if (ts.is_dense()) {
        require_positive_window(lo, alpha);
        return dense_integral([&](double t) {
            double v = f(t);
            return v == 0.0 ? 0.0 : v * alpha_weight(t, alpha);
        }, lo, hi, 1e-9);
    }
    Grid g = scattered_grid(ts, lo, hi);
    if (g.t.empty()) return {};
    require_positive_window(g.t.front(), alpha);
    auto vals = kernels::fill(g.t.size(), [&](std::size_t i) { return f(g.t[i]); });
    auto dm = measure(g, alpha);
    double value = kernels::weighted_sum(vals, dm);
    std::vector<double> mags(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) mags[i] = std::abs(vals[i]);
    double mag = kernels::weighted_sum(mags, dm);
    double err = mag * std::numeric_limits<double>::epsilon() * static_cast<double>(vals.size());
    return {value, err};
}

double extend_horizon(const TimeScale& ts, double horizon) {
    double target = horizon > 0 ? 2.0 * horizon : horizon + 1.0;
    double t = ts.ceil_member(target);
    return std::max(t, horizon);
}

TailValue improper_tail(const ScaleFunction& f, const TimeScale& ts, double from, double horizon, double alpha) {
    IntegralValue v1 = delta_alpha_integral(f, ts, from, horizon, alpha);
    double far = extend_horizon(ts, ts.member(horizon));
    IntegralValue v2 = delta_alpha_integral(f, ts, from, far, alpha);
    return {v1, std::abs(v2.value - v1.value)};
}

ScatteredCumulative::ScatteredCumulative(std::vector<double> points, std::vector<double> increments, Side side)
    : points_(std::move(points)), increments_(std::move(increments)), values_(increments_.size() + 1), side_(side) {
    if (side_ == Side::lower) {
        kernels::prefix_sum(increments_, values_);
    } else {
        kernels::suffix_sum(increments_, values_);
    }
}

std::size_t ScatteredCumulative::index_of(double t) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - points_.begin());
    if (i < points_.size() && std::abs(points_[i] - t) <= snap_tolerance(t)) return i;
    if (i > 0 && std::abs(points_[i - 1] - t) <= snap_tolerance(t)) return i - 1;
    throw NotAMember(t);
}

double ScatteredCumulative::value(double t) const { return values_[index_of(t)]; }

std::optional<double> ScatteredCumulative::exact_delta(double t, double mu) const {
    std::size_t i = index_of(t);
    if (i >= increments_.size() || mu == 0.0) return std::nullopt;
    double d = increments_[i] / mu;
    return side_ == Side::lower ? d : -d;
}

std::string ScatteredCumulative::describe() const {
    return std::string(side_ == Side::lower ? "prefix" : "suffix") + " table(" + std::to_string(points_.size()) +
           " points)";
}

DenseCumulative::DenseCumulative(ScaleFunction integrand, double alpha, PanelTable table, Side side)
    : integrand_(std::move(integrand)), alpha_(alpha), table_(std::move(table)), side_(side) {}

double DenseCumulative::value(double t) const { return side_ == Side::lower ? table_.lower(t) : table_.upper(t); }

std::optional<double> DenseCumulative::exact_delta(double t, double mu) const {
    if (mu != 0.0) return std::nullopt;
    double v = integrand_(t);
    double d = v == 0.0 ? 0.0 : v * alpha_weight(t, alpha_);
    return side_ == Side::lower ? d : -d;
}

std::string DenseCumulative::describe() const {
    return std::string(side_ == Side::lower ? "lower" : "upper") + " integral of " + integrand_.describe();
}

ScaleFunction cumulative(const ScaleFunction& g, const TimeScale& ts, double a, Side side, double horizon,
                         double alpha) {
    double lo = ts.member(a), hi = ts.member(horizon);
    if (ts.is_dense()) {
        require_positive_window(lo, alpha);
        RealFn fn = [g, alpha](double t) {
            double v = g(t);
            return v == 0.0 ? 0.0 : v * alpha_weight(t, alpha);
        };
        QuadratureOptions opt;
        opt.rel_tol = 1e-12;
        auto res = integrate_adaptive(fn, lo, hi, opt);
        if (!res.converged) throw QuadratureNonConvergence(res.integral.value, res.integral.abs_error_estimate);
        return ScaleFunction(
            std::make_shared<DenseCumulative>(g, alpha, PanelTable(fn, std::move(res.panels)), side));
    }
    Grid grid = scattered_grid(ts, lo, hi);
    if (!grid.t.empty()) require_positive_window(grid.t.front(), alpha);
    auto dm = measure(grid, alpha);
    auto inc = kernels::fill(grid.t.size(), [&](std::size_t i) {
        double v = g(grid.t[i]);
        return (v == 0.0 || dm[i] == 0.0) ? 0.0 : v * dm[i];
    });
    std::vector<double> pts = std::move(grid.t);
    pts.push_back(hi);
    return ScaleFunction(std::make_shared<ScatteredCumulative>(std::move(pts), std::move(inc), side));
}

double parts_residual(const ScaleFunction& u, const ScaleFunction& v, const TimeScale& ts, double a, double b,
                      double alpha) {
    PartsTerms p = parts_terms(u, v, ts, a, b, alpha);
    return std::abs(p.lhs - (p.boundary - p.other));
}

double parts_residual_relative(const ScaleFunction& u, const ScaleFunction& v, const TimeScale& ts, double a,
                               double b, double alpha) {
    PartsTerms p = parts_terms(u, v, ts, a, b, alpha);
    double scale = std::max({std::abs(p.lhs), std::abs(p.boundary), std::abs(p.other)});
    double r = std::abs(p.lhs - (p.boundary - p.other));
    return scale == 0.0 ? r : r / scale;
}

HolderGap holder_gap(const ScaleFunction& f, const ScaleFunction& g, const TimeScale& ts, double a, double b,
                     double p, double alpha) {
    double q = p / (p - 1.0);
    auto fg = ScaleFunction::callable([&](double t) { return std::abs(f(t) * g(t)); }, "|fg|");
    auto fp = ScaleFunction::callable([&](double t) { return std::pow(std::abs(f(t)), p); }, "f^p");
    auto gq = ScaleFunction::callable([&](double t) { return std::pow(std::abs(g(t)), q); }, "g^q");
    double lhs = delta_alpha_integral(fg, ts, a, b, alpha).value;
    double rhs = std::pow(delta_alpha_integral(fp, ts, a, b, alpha).value, 1.0 / p) *
                 std::pow(delta_alpha_integral(gq, ts, a, b, alpha).value, 1.0 / q);
    return {lhs, rhs};
}

ChainCheck chain_rule_check(const Expression& eta, const ScaleFunction& xi, const TimeScale& ts, double t,
                            double alpha) {
    double x = ts.member(t);
    Jump j = ts.jump(x);
    auto composite = ScaleFunction::callable([&](double s) { return eta(xi(s)); }, "eta(xi)");
    double lhs = conformable_derivative(composite, ts, x, alpha);
    double txi = conformable_derivative(xi, ts, x, alpha);
    ChainCheck c{};
    c.lhs = lhs;
    if (j.cls.right != RightClass::scattered) {
        c.rhs = eta.derivative(xi(x)) * txi;
        c.residual = std::abs(c.lhs - c.rhs);
        c.bracket_lo = c.bracket_hi = c.rhs;
        c.bracket_ok = c.residual <= 1e-8 * std::max(1.0, std::abs(c.rhs));
        return c;
    }
    double x0 = xi(x);
    double step = j.mu * alpha_weight(x, alpha) * txi;
    QuadratureOptions opt;
    opt.rel_tol = 1e-14;
    opt.abs_tol = 1e-300;
    auto res = integrate_adaptive([&](double h) { return eta.derivative(x0 + h * step); }, 0.0, 1.0, opt);
    c.rhs = res.integral.value * txi;
    c.residual = std::abs(c.lhs - c.rhs);
    // chain1: the mean value is attained somewhere along xi(t) -> xi(sigma(t))
    double x1 = xi(j.sigma);
    c.bracket_lo = std::numeric_limits<double>::infinity();
    c.bracket_hi = -c.bracket_lo;
    const int samples = 257;
    for (int i = 0; i < samples; ++i) {
        double s = static_cast<double>(i) / (samples - 1);
        double v = eta.derivative(x0 + s * (x1 - x0)) * txi;
        c.bracket_lo = std::min(c.bracket_lo, v);
        c.bracket_hi = std::max(c.bracket_hi, v);
    }
    double tol = 1e-12 * std::max({1.0, std::abs(c.bracket_lo), std::abs(c.bracket_hi)});
    c.bracket_ok = c.lhs >= c.bracket_lo - tol && c.lhs <= c.bracket_hi + tol;
    return c;
}

}  // namespace hardy
