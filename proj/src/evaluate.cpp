#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/calculus.hpp"
#include "hardy/catalogue.hpp"
#include "hardy/errors.hpp"
#include "hardy/format.hpp"
#include "hardy/kernels.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double strict_margin = 1e-9;
constexpr int dense_samples = 256;

std::size_t ix(Role r) { return static_cast<std::size_t>(r); }

// Everything the builders and the hypothesis checks need on [a, T].
struct Window {
    const TimeScale* ts = nullptr;
    bool dense = false;
    double a = 0, T = 0, TH = 0, alpha = 1;
    std::map<Role, ScaleFunction> roles;
    ScaleFunction G, K, F, H;
    // scattered windows: pts = points_in(a, T) followed by T
    std::vector<double> pts, mu;
    std::array<std::vector<double>, 6> val;
    std::vector<double> Gv, Kv, Fv, Hv;
    std::size_t n() const { return mu.size(); }
};

Window make_window(const Case& c, const std::map<Role, ScaleFunction>& roles, double horizon) {
    Window W;
    const TimeScale& ts = c.scale;
    W.ts = &c.scale;
    W.dense = ts.is_dense();
    W.alpha = c.alpha;
    W.a = ts.member(c.a);
    W.T = ts.member(horizon);
    if (W.T < W.a) throw InputError("horizon " + format_double(W.T) + " lies before a = " + format_double(W.a));
    W.TH = extend_horizon(ts, W.T);
    W.roles = roles;
    ScaleFunction rf = ScaleFunction::product(roles.at(Role::r), roles.at(Role::f));
    const ScaleFunction& g = roles.at(Role::g);
    W.G = cumulative(g, ts, W.a, Side::lower, W.T, c.alpha);
    W.K = cumulative(rf, ts, W.a, Side::lower, W.T, c.alpha);
    W.F = cumulative(rf, ts, W.a, Side::upper, W.T, c.alpha);
    W.H = cumulative(g, ts, W.a, Side::upper, W.TH, c.alpha);
    if (W.dense) return W;

    const auto* Gc = W.G.impl_as<ScatteredCumulative>();
    W.pts = Gc->points();
    const std::size_t n = W.pts.size() - 1;
    W.mu.resize(n);
    for (std::size_t i = 0; i < n; ++i) W.mu[i] = W.pts[i + 1] - W.pts[i];
    for (Role r : all_roles) {
        const ScaleFunction& fn = roles.at(r);
        W.val[ix(r)] = kernels::fill(n + 1, [&](std::size_t i) { return fn(W.pts[i]); });
    }
    W.Gv = Gc->values();
    W.Kv = W.K.impl_as<ScatteredCumulative>()->values();
    W.Fv = W.F.impl_as<ScatteredCumulative>()->values();
    const auto& h = W.H.impl_as<ScatteredCumulative>()->values();
    W.Hv.assign(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(n + 1));
    return W;
}

PointView view_at(const Window& W, std::size_t i) {
    PointView x{};
    x.t = W.pts[i];
    x.sigma = W.pts[i + 1];
    x.mu = W.mu[i];
    auto at = [&](Role r, std::size_t j) { return W.val[ix(r)][j]; };
    x.f = at(Role::f, i), x.g = at(Role::g, i), x.k = at(Role::k, i);
    x.r = at(Role::r, i), x.w = at(Role::w, i), x.v = at(Role::v, i);
    x.f_s = at(Role::f, i + 1), x.g_s = at(Role::g, i + 1), x.k_s = at(Role::k, i + 1);
    x.r_s = at(Role::r, i + 1), x.w_s = at(Role::w, i + 1), x.v_s = at(Role::v, i + 1);
    x.G = W.Gv[i], x.K = W.Kv[i], x.H = W.Hv[i], x.F = W.Fv[i];
    x.G_s = W.Gv[i + 1], x.K_s = W.Kv[i + 1], x.H_s = W.Hv[i + 1], x.F_s = W.Fv[i + 1];
    return x;
}

PointView view_dense(const Window& W, double t) {
    PointView x{};
    x.t = x.sigma = t;
    x.mu = 0.0;
    x.f = x.f_s = W.roles.at(Role::f)(t);
    x.g = x.g_s = W.roles.at(Role::g)(t);
    x.k = x.k_s = W.roles.at(Role::k)(t);
    x.r = x.r_s = W.roles.at(Role::r)(t);
    x.w = x.w_s = W.roles.at(Role::w)(t);
    x.v = x.v_s = W.roles.at(Role::v)(t);
    x.G = x.G_s = W.G(t);
    x.K = x.K_s = W.K(t);
    x.H = x.H_s = W.H(t);
    x.F = x.F_s = W.F(t);
    return x;
}

Params params_of(const Case& c) { return {c.p, c.alpha, c.gamma, c.theta, c.beta, c.a, c.as_printed}; }

struct SideCalc {
    double lhs = 0, rhs = 0;
    std::vector<double> lhs_mesh, rhs_mesh;
};

double scaled(double c, double integral) { return integral == 0.0 ? 0.0 : c * integral; }

SideCalc compute_sides(const TheoremSpec& spec, const Window& W, const Params& q, const SideCalc* mesh) {
    SideCalc out;
    double C = spec.constant(q);
    if (!W.dense) {
        const std::size_t n = W.n();
        auto dm = kernels::fill(n, [&](std::size_t i) { return alpha_weight(W.pts[i], W.alpha) * W.mu[i]; });
        auto lt = kernels::fill(n, [&](std::size_t i) { return spec.lhs(view_at(W, i), q); });
        auto rt = kernels::fill(n, [&](std::size_t i) { return spec.rhs(view_at(W, i), q); });
        out.lhs = kernels::weighted_sum(lt, dm);
        out.rhs = scaled(C, kernels::weighted_sum(rt, dm));
        return out;
    }
    if (W.a == W.T) return out;
    auto side = [&](Builder b, const std::vector<double>* br, std::vector<double>& used) {
        RealFn fn = [&W, &q, b](double t) {
            double v = b(view_dense(W, t), q);
            return v == 0.0 ? 0.0 : v * alpha_weight(t, W.alpha);
        };
        if (br) return integrate_on_mesh(fn, *br);
        auto res = integrate_adaptive(fn, W.a, W.T, QuadratureOptions{});
        if (!res.converged) throw QuadratureNonConvergence(res.integral.value, res.integral.abs_error_estimate);
        used = breakpoints(res.panels);
        return res.integral.value;
    };
    out.lhs = side(spec.lhs, mesh ? &mesh->lhs_mesh : nullptr, out.lhs_mesh);
    out.rhs = scaled(C, side(spec.rhs, mesh ? &mesh->rhs_mesh : nullptr, out.rhs_mesh));
    return out;
}

// ---- hypotheses

std::vector<double> dense_sample_points(double a, double T) {
    std::vector<double> s;
    const int half = dense_samples / 2;
    for (int i = 0; i < half; ++i) s.push_back(a + (T - a) * i / (half - 1));
    if (a > 0) {
        for (int i = 0; i < half; ++i) s.push_back(a * std::pow(T / a, static_cast<double>(i) / (half - 1)));
    } else {
        for (int i = 0; i < half; ++i) s.push_back(a + (T - a) * (i + 0.5) / half);
    }
    for (double& x : s) x = std::clamp(x, a, T);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// Running worst normalized margin of one condition.
struct Tally {
    double worst = inf;
    double at = std::numeric_limits<double>::quiet_NaN();
    void add(double lhs_side, double rhs_side, double t) {
        // condition lhs_side <= rhs_side
        double m = rhs_side - lhs_side;
        double s = std::abs(lhs_side) + std::abs(rhs_side);
        double nm = s == 0.0 ? 0.0 : m / s;
        if (std::isnan(nm)) nm = -inf;
        if (nm < worst) {
            worst = nm;
            at = t;
        }
    }
};

class Checker {
public:
    Checker(const Case& c, const TheoremSpec& spec, const Window& W) : c_(c), spec_(spec), W_(W) {
        tol_ = W.dense ? 1e-6 : 1e-12;
        if (W.dense) {
            samples_ = dense_sample_points(W.a, W.T);
        } else {
            samples_.assign(W.pts.begin(), W.pts.end() - 1);
        }
    }

    HypothesisReport run() {
        HypothesisReport rep;
        for (Cond cond : spec_.conditions) {
            rep.conditions.push_back(check(cond, rep));
            rep.conditions.back().margin += 0.0;  // no -0 in reports
        }
        return rep;
    }

private:
    double D(const ScaleFunction& f, double t) const { return conformable_derivative(f, *W_.ts, t, W_.alpha); }
    double sig(double t) const { return W_.dense ? t : W_.ts->sigma(t); }
    const ScaleFunction& role(Role r) const { return W_.roles.at(r); }

    ConditionResult from_tally(Cond cond, const Tally& t, const std::string& what) const {
        ConditionResult r;
        r.id = cond_name(cond);
        r.margin = samples_.empty() ? 0.0 : t.worst;
        r.pass = r.margin >= -tol_;
        r.detail = what;
        if (!r.pass) r.detail += "; worst at t = " + format_double(t.at);
        return r;
    }

    ConditionResult scalar(Cond cond, double margin, bool pass, std::string what) const {
        return {cond_name(cond), pass, margin, std::move(what)};
    }

    // condition T(x) <= rhs(t) or >= along the window
    template <class Fn>
    ConditionResult pointwise(Cond cond, const std::string& what, Fn fn) const {
        Tally tally;
        for (double t : samples_) {
            auto [l, r] = fn(t);
            tally.add(l, r, t);
        }
        return from_tally(cond, tally, what);
    }

    ConditionResult nonnegative() const {
        double worst = inf, at = 0;
        std::string who;
        for (Role r : all_roles) {
            const ScaleFunction& fn = role(r);
            auto check_at = [&](double t) {
                double v = fn(t);
                if (!(v >= worst)) {
                    worst = std::isnan(v) ? -inf : v;
                    at = t;
                    who = role_name(r);
                }
            };
            for (double t : samples_) check_at(t);
            check_at(W_.T);
        }
        ConditionResult res{cond_name(Cond::S2), worst >= 0.0, std::min(worst, 0.0), "roles nonnegative on [a, T]"};
        if (!res.pass) res.detail += "; " + who + "(" + format_double(at) + ") = " + format_double(worst);
        return res;
    }

    ConditionResult is_one(Cond cond, std::vector<Role> which, const std::string& what) const {
        return pointwise(cond, what, [&](double t) {
            double dev = 0;
            for (Role r : which) dev = std::max(dev, std::abs(role(r)(t) - 1.0));
            return std::pair{dev, 0.0};
        });
    }

    ConditionResult check(Cond cond, HypothesisReport& rep) const {
        const double p = c_.p, al = c_.alpha, ga = c_.gamma, th = c_.theta, be = c_.beta;
        switch (cond) {
            case Cond::S1: {
                double m = std::min({p - 1.0, al, 1.0 - al});
                return scalar(cond, m, p >= 1.0 && al > 0.0 && al <= 1.0, "p >= 1 and 0 < alpha <= 1");
            }
            case Cond::S2: return nonnegative();
            case Cond::S3: return scalar(cond, std::min(th, be), th >= 0 && be >= 0, "theta, beta >= 0");
            case Cond::S4: {
                double m = ga - th - 1.0;
                return scalar(cond, m, m >= strict_margin, "gamma > theta + 1");
            }
            case Cond::S5: {
                double m = std::min(ga, al - ga);
                return scalar(cond, m, ga >= 0 && al - ga >= strict_margin, "0 <= gamma < alpha");
            }
            case Cond::S6: {
                double half = std::max(W_.a, W_.ts->floor_member(0.5 * W_.T));
                double gT = W_.G(W_.T), gh = W_.G(half);
                if (gT < c_.growth * gh) {
                    rep.warnings.push_back("G(T) = " + format_double(gT) + " does not dominate G(T/2) = " +
                                           format_double(gh) + " by the growth factor " + format_double(c_.growth));
                }
                return scalar(cond, 0.0, true, "G unbounded (warning only)");
            }
            case Cond::S7: return scalar(cond, 0.0, true, "H taken to the extended horizon");
            case Cond::S8: return scalar(cond, 0.0, true, "K taken from a");
            case Cond::S9: return scalar(cond, 0.0, true, "F taken to the horizon");
            case Cond::S10:
                return pointwise(cond, "Tw G^s <= theta TG w", [&](double t) {
                    return std::pair{D(role(Role::w), t) * W_.G(sig(t)), th * D(W_.G, t) * role(Role::w)(t)};
                });
            case Cond::S11:
                return pointwise(cond, "Tw H^s <= theta TH w", [&](double t) {
                    return std::pair{D(role(Role::w), t) * W_.H(sig(t)), th * D(W_.H, t) * role(Role::w)(t)};
                });
            case Cond::S12:
                return pointwise(cond, "Tw G >= theta TG w^s", [&](double t) {
                    return std::pair{th * D(W_.G, t) * role(Role::w)(sig(t)), D(role(Role::w), t) * W_.G(t)};
                });
            case Cond::S13:
                return pointwise(cond, "Tw H >= theta TH w^s", [&](double t) {
                    return std::pair{th * D(W_.H, t) * role(Role::w)(sig(t)), D(role(Role::w), t) * W_.H(t)};
                });
            case Cond::S14:
                return pointwise(cond, "Tv K <= beta TK v^s", [&](double t) {
                    return std::pair{D(role(Role::v), t) * W_.K(t), be * D(W_.K, t) * role(Role::v)(sig(t))};
                });
            case Cond::S15:
                return pointwise(cond, "Tv F^s >= beta TF v", [&](double t) {
                    return std::pair{be * D(W_.F, t) * role(Role::v)(t), D(role(Role::v), t) * W_.F(sig(t))};
                });
            case Cond::S16: return is_one(cond, {Role::k, Role::v, Role::w}, "k = v = w = 1");
            case Cond::S17:
                return pointwise(cond, "r = g", [&](double t) {
                    return std::pair{std::abs(role(Role::r)(t) - role(Role::g)(t)), 0.0};
                });
            case Cond::S18: return is_one(cond, {Role::r, Role::g}, "r = g = 1");
            case Cond::S19: return scalar(cond, -std::max(th, be), th == 0 && be == 0, "theta = beta = 0");
            case Cond::S20: return scalar(cond, -std::abs(c_.a), c_.a == 0, "a = 0");
            case Cond::S21: return scalar(cond, -std::abs(c_.a - 1), c_.a == 1, "a = 1");
            case Cond::S22: return scalar(cond, -std::abs(ga - p), ga == p, "gamma = p");
            case Cond::k_nonincreasing:
                return pointwise(cond, "T k <= 0", [&](double t) {
                    double d = D(role(Role::k), t);
                    return std::pair{d, 0.0 * d};
                });
            case Cond::k_nondecreasing:
                return pointwise(cond, "T k >= 0", [&](double t) {
                    double d = D(role(Role::k), t);
                    return std::pair{0.0 * d, d};
                });
            case Cond::f_nonincreasing:
                return pointwise(cond, "T f <= 0", [&](double t) {
                    double d = D(role(Role::f), t);
                    return std::pair{d, 0.0 * d};
                });
            case Cond::alpha_one: return scalar(cond, -std::abs(al - 1), al == 1.0, "alpha = 1");
            case Cond::p_gt_1: return scalar(cond, p - 1, p - 1 >= strict_margin, "p > 1");
            case Cond::gamma_gt_1: return scalar(cond, ga - 1, ga - 1 >= strict_margin, "gamma > 1");
            case Cond::gamma_lt_1: return scalar(cond, 1 - ga, 1 - ga >= strict_margin, "gamma < 1");
            case Cond::gamma_le_p: return scalar(cond, p - ga, ga <= p, "gamma <= p");
            case Cond::gamma_ge_0: return scalar(cond, ga, ga >= 0, "gamma >= 0");
            case Cond::scale: {
                const auto& k = c_.scale.kind();
                bool ok = true;
                std::string what;
                switch (spec_.scale) {
                    case ScaleReq::any: what = "any scale"; break;
                    case ScaleReq::dense: ok = c_.scale.is_dense(), what = "real interval"; break;
                    case ScaleReq::scattered: ok = !c_.scale.is_dense(), what = "scattered scale"; break;
                    case ScaleReq::integers: ok = c_.scale.is_integers(), what = "the integers"; break;
                    case ScaleReq::h_lattice:
                        ok = std::holds_alternative<UniformLattice>(k), what = "uniform lattice";
                        break;
                    case ScaleReq::q_lattice: ok = std::holds_alternative<QLattice>(k), what = "q-lattice"; break;
                }
                return scalar(cond, ok ? 0.0 : -1.0, ok, what + " (got " + c_.scale.literal() + ")");
            }
        }
        return scalar(cond, 0.0, true, "");
    }

    const Case& c_;
    const TheoremSpec& spec_;
    const Window& W_;
    std::vector<double> samples_;
    double tol_;
};

Verdict decide(Direction d, double lhs, double rhs, double sl, double sr) {
    if (std::isnan(lhs) || std::isnan(rhs)) return Verdict::inconclusive;
    double big = d == Direction::le ? lhs : rhs;
    double small = d == Direction::le ? rhs : lhs;
    if (!(big > small * (1 + verdict_rel_tol))) return Verdict::verified;
    bool stable = sl <= 0.01 * std::abs(lhs) && sr <= 0.01 * std::abs(rhs);
    return stable ? Verdict::violated : Verdict::inconclusive;
}

double ratio_of(double lhs, double rhs) {
    if (lhs == 0.0 && rhs == 0.0) return 0.0;
    return lhs / rhs;
}

std::map<Role, ScaleFunction> accepted_roles(const TheoremSpec& spec, const std::map<Role, ScaleFunction>& roles) {
    std::map<Role, ScaleFunction> out;
    for (const auto& [r, fn] : roles) {
        auto it = spec.roles.find(r);
        if (it == spec.roles.end()) continue;
        bool ok = it->second == RoleDefault::required ||
                  std::find(spec.optional.begin(), spec.optional.end(), r) != spec.optional.end();
        if (ok) out[r] = fn;
    }
    return out;
}

}  // namespace

bool HypothesisReport::ok() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const ConditionResult& c) { return c.pass; });
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::violated: return "violated";
        case Verdict::hypotheses_unmet: return "hypotheses-unmet";
        case Verdict::inconclusive: return "numerically-inconclusive";
    }
    return "?";
}

HypothesisReport check_hypotheses(const Case& c, const TheoremSpec& spec) {
    auto roles = resolve_roles(spec, c);
    Window W = make_window(c, roles, c.horizon);
    return Checker(c, spec, W).run();
}

VerificationReport evaluate(const TheoremSpec& spec, const Case& c) {
    VerificationReport rep;
    rep.case_id = c.id;
    rep.theorem_id = spec.id;
    rep.direction = spec.direction;
    if (c.as_printed) rep.footnotes = spec.printed_notes;
    auto roles = resolve_roles(spec, c);
    const Params q = params_of(c);
    rep.constant_value = spec.constant(q);
    double T = c.scale.member(c.horizon);
    rep.horizon = T;
    try {
        Window W = make_window(c, roles, T);
        rep.extended_horizon = W.TH;
        rep.hypotheses = Checker(c, spec, W).run();
        if (!rep.hypotheses.ok() && !c.force) {
            rep.verdict = Verdict::hypotheses_unmet;
            return rep;
        }
        SideCalc s1 = compute_sides(spec, W, q, nullptr);
        rep.lhs = s1.lhs;
        rep.rhs = s1.rhs;
        rep.ratio = ratio_of(s1.lhs, s1.rhs);
        double T2 = W.TH;
        if (T2 > T) {
            Window W2 = make_window(c, roles, T2);
            SideCalc s2 = compute_sides(spec, W2, q, nullptr);
            rep.lhs_sensitivity = std::abs(s2.lhs - s1.lhs);
            rep.rhs_sensitivity = std::abs(s2.rhs - s1.rhs);
        } else {
            rep.lhs_sensitivity = rep.rhs_sensitivity = 0.0;
        }
        if (std::isnan(rep.lhs_sensitivity)) rep.lhs_sensitivity = inf;
        if (std::isnan(rep.rhs_sensitivity)) rep.rhs_sensitivity = inf;
        Verdict v = decide(spec.direction, rep.lhs, rep.rhs, rep.lhs_sensitivity, rep.rhs_sensitivity);
        if (!rep.hypotheses.ok()) {
            rep.verdict = Verdict::hypotheses_unmet;
            if (v == Verdict::violated) rep.footnotes.push_back("forced evaluation: the inequality fails on this case");
        } else {
            rep.verdict = v;
        }
    } catch (const InputError&) {
        throw;
    } catch (const NotAMember&) {
        throw;
    } catch (const Error& e) {
        rep.verdict = Verdict::inconclusive;
        rep.error = e.what();
    }
    return rep;
}

VerificationReport evaluate(const Case& c) { return evaluate(find_theorem(c.theorem), c); }

Sides evaluate_sides(const TheoremSpec& spec, const Case& c) {
    auto roles = resolve_roles(spec, c);
    Window W = make_window(c, roles, c.horizon);
    SideCalc s = compute_sides(spec, W, params_of(c), nullptr);
    return {s.lhs, s.rhs};
}

const std::vector<ReductionPair>& reduction_pairs() {
    using C = Cond;
    static const std::vector<ReductionPair> pairs = {
        {"thm1", "eldeeb-eqq1", {}, ScaleReq::any, false},
        {"cor1.1", "saker1", {}, ScaleReq::any, false},
        {"thm2", "saker2", {C::S16, C::S17, C::S19}, ScaleReq::any, false},
        {"thm3", "saker3", {C::S16, C::S17, C::S19}, ScaleReq::any, false},
        {"thm4", "saker4", {C::S16, C::S17, C::S19}, ScaleReq::dense, false},
        {"corR.1", "copson-h24", {C::S16, C::S17, C::S19}, ScaleReq::dense, false},
        {"corR.1", "hardy-a5", {C::S16, C::S18, C::S19}, ScaleReq::dense, false},
        {"corR.1", "hardy-continuous", {C::S16, C::S18, C::S19, C::S22}, ScaleReq::dense, false},
        {"corR.2", "copson-h25", {C::S16, C::S17, C::S19}, ScaleReq::dense, false},
        {"corR.2", "hardy-a6", {C::S16, C::S18, C::S19}, ScaleReq::dense, false},
        {"corR.2", "hardy-a11", {C::S16, C::S18, C::S19}, ScaleReq::dense, true},
        {"corZ.2", "copson-h21", {C::S16, C::S17, C::S19}, ScaleReq::integers, false},
        {"corZ.3", "leindler-h30", {C::S16, C::S17, C::S19}, ScaleReq::integers, false},
        {"corR.4", "bennett-h31", {C::S16, C::S17, C::S19}, ScaleReq::dense, false},
    };
    return pairs;
}

Case specialize(const ReductionPair& pair, const Case& c) {
    Case s = c;
    s.theorem = pair.general;
    auto one = ScaleFunction::constant(1.0);
    for (Cond f : pair.flags) {
        switch (f) {
            case Cond::S16: s.roles[Role::k] = s.roles[Role::v] = s.roles[Role::w] = one; break;
            case Cond::S17: s.roles[Role::r] = s.roles.at(Role::g); break;
            case Cond::S18: s.roles[Role::r] = s.roles[Role::g] = one; break;
            case Cond::S19: s.theta = s.beta = 0.0; break;
            case Cond::S20: s.a = 0.0; break;
            case Cond::S21: s.a = 1.0; break;
            case Cond::S22: s.gamma = s.p; break;
            default: break;
        }
    }
    if (pair.gamma_zero) s.gamma = 0.0;
    s.roles = accepted_roles(find_theorem(pair.general), s.roles);
    return s;
}

double reduction_check(const ReductionPair& pair, const Case& c) {
    if (c.alpha != 1.0) throw InputError("reduction checks need alpha = 1");
    const TheoremSpec& gs = find_theorem(pair.general);
    const TheoremSpec& ts = find_theorem(pair.target);
    Case gc = specialize(pair, c);
    Case tc = gc;
    tc.theorem = pair.target;
    tc.roles = accepted_roles(ts, gc.roles);
    double T = c.scale.member(c.horizon);
    Window Wg = make_window(gc, resolve_roles(gs, gc), T);
    Window Wt = make_window(tc, resolve_roles(ts, tc), T);
    SideCalc sg = compute_sides(gs, Wg, params_of(gc), nullptr);
    SideCalc st = compute_sides(ts, Wt, params_of(tc), &sg);
    return std::max(relative_discrepancy(sg.lhs, st.lhs), relative_discrepancy(sg.rhs, st.rhs));
}

double relative_discrepancy(double x, double y) {
    if (x == y) return 0.0;
    double s = std::max(std::abs(x), std::abs(y));
    if (!std::isfinite(s)) return inf;
    return std::abs(x - y) / s;
}

}  // namespace hardy
