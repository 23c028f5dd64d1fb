#include "hardy/sharpness.hpp"

#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy {

double ratio(const TheoremSpec& spec, const Case& c) {
    Case forced = c;
    forced.force = true;
    auto rep = evaluate(spec, forced);
    if (!rep.error.empty()) throw Error(rep.error);
    if (rep.rhs == 0.0) throw ZeroDenominator();
    return rep.lhs / rep.rhs;
}

Case family_member(const ParamFamily& fam, const Case& templ, double lambda) {
    Case c = templ;
    c.roles[fam.role] = ScaleFunction::expression(fam.templ.bind("lambda", lambda));
    return c;
}

TracePoint probe(const TheoremSpec& spec, const ParamFamily& fam, const Case& templ, double lambda) {
    TracePoint tp{lambda, std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(),
                  std::numeric_limits<double>::quiet_NaN(), false};
    try {
        Case c = family_member(fam, templ, lambda);
        c.force = true;
        auto rep = evaluate(spec, c);
        tp.lhs = rep.lhs;
        tp.rhs = rep.rhs;
        if (rep.error.empty() && rep.rhs != 0.0 && std::isfinite(rep.lhs / rep.rhs)) {
            tp.ratio = rep.lhs / rep.rhs;
            tp.ok = true;
        }
    } catch (const Error&) {
    }
    return tp;
}

MaximizeResult maximize(const TheoremSpec& spec, const ParamFamily& fam, const Case& templ) {
    MaximizeResult res{};
    const int n = sharpness_grid;
    const double width = fam.hi - fam.lo;
    std::vector<TracePoint> grid(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) grid[i] = probe(spec, fam, templ, fam.lo + width * i / (n - 1));
    res.trace = grid;

    int best = -1;
    for (int i = 0; i < n; ++i)
        if (grid[i].ok && (best < 0 || grid[i].ratio > grid[best].ratio)) best = i;
    if (best < 0) throw AllDegenerate();

    auto score = [&](double lam) {
        TracePoint tp = probe(spec, fam, templ, lam);
        res.trace.push_back(tp);
        return tp.ok ? tp.ratio : -std::numeric_limits<double>::infinity();
    };
    double lo = grid[std::max(best - 1, 0)].lambda;
    double hi = grid[std::min(best + 1, n - 1)].lambda;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = score(x1), f2 = score(x2);
    while (hi - lo >= 1e-4 * width) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = score(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = score(x2);
        }
    }
    res.best_lambda = grid[best].lambda;
    res.best_ratio = grid[best].ratio;
    for (const auto& tp : res.trace) {
        if (tp.ok && tp.ratio > res.best_ratio) {
            res.best_ratio = tp.ratio;
            res.best_lambda = tp.lambda;
        }
    }
    return res;
}

}  // namespace hardy
