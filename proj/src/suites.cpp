#include "hardy/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hardy/calculus.hpp"
#include "hardy/casefile.hpp"
#include "hardy/errors.hpp"
#include "hardy/format.hpp"
#include "hardy/generate.hpp"
#include "hardy/oracle.hpp"
#include "hardy/sharpness.hpp"

namespace hardy {

namespace {

std::string pad(int i) {
    std::string s = std::to_string(i);
    return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

ScaleFunction fx(const std::string& s) { return ScaleFunction::expression(Expression::parse(s)); }
std::string num(double x) { return "(" + format_double(x) + ")"; }

SuiteRow check_row(std::string id, std::string what, std::string scale, double alpha, double p, double measured,
                   double tol, bool pass) {
    SuiteRow r;
    r.case_id = std::move(id);
    r.theorem_id = std::move(what);
    r.scale = std::move(scale);
    r.alpha = alpha;
    r.p = p;
    r.lhs = measured;
    r.rhs = tol;
    r.ratio = measured / tol;
    r.verdict = pass ? "verified" : "violated";
    return r;
}

SuiteRow error_row(std::string id, std::string what, const std::string& msg) {
    SuiteRow r;
    r.case_id = std::move(id);
    r.theorem_id = std::move(what);
    r.scale = "";
    r.lhs = r.rhs = r.ratio = std::numeric_limits<double>::quiet_NaN();
    r.verdict = "error: " + msg;
    r.hypotheses_ok = false;
    return r;
}

// Jobs are built sequentially (all randomness happens here) and then run in
// parallel; each job only reads its own captured data.
using Job = std::function<SuiteRow()>;

std::vector<SuiteRow> run_jobs(const std::vector<std::pair<std::string, Job>>& jobs) {
    std::vector<SuiteRow> rows(jobs.size());
    const long long n = static_cast<long long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        auto& [id, job] = jobs[static_cast<std::size_t>(i)];
        try {
            rows[static_cast<std::size_t>(i)] = job();
        } catch (const std::exception& e) {
            rows[static_cast<std::size_t>(i)] = error_row(id, "", e.what());
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SuiteRow& a, const SuiteRow& b) { return a.case_id < b.case_id; });
    return rows;
}

std::string random_poly(std::mt19937_64& rng) {
    int deg = static_cast<int>(rng() % 4);
    std::string s = num(uniform(rng, -2, 2));
    for (int d = 1; d <= deg; ++d) s += "+" + num(uniform(rng, -2, 2) / std::pow(10.0, d)) + "*t^" + std::to_string(d);
    return s;
}

std::string random_nonneg(std::mt19937_64& rng) {
    switch (rng() % 4) {
        case 0: return "t^" + num(uniform(rng, -2, 1));
        case 1: return num(uniform(rng, 1.01, 1.5)) + "^(-t)";
        case 2: return "1/(1+" + num(uniform(rng, 0.1, 2)) + "*t)";
        default: return "abs(" + num(uniform(rng, -3, 3)) + "+t)";
    }
}

TimeScale random_finite_set(std::mt19937_64& rng, int n) {
    std::vector<double> pts;
    double t = 1.0;
    for (int i = 0; i < n; ++i) {
        pts.push_back(t);
        t += uniform(rng, 0.05, 3.0);
    }
    return TimeScale::finite_set(std::move(pts));
}

std::vector<SuiteRow> calculus_suite(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, Job>> jobs;
    const double alphas[] = {0.5, 0.8, 1.0};
    for (int i = 0; i < 100; ++i) {
        TimeScale ts = TimeScale::integers();
        double a = 1, b = 40;
        switch (i % 4) {
            case 0: ts = random_finite_set(rng, 60), b = ts.points_in(1, *ts.max())[45]; break;
            case 1: ts = TimeScale::lattice(0.25), b = 20; break;
            case 2: ts = TimeScale::q_lattice(1.5), b = std::pow(1.5, 20); break;
            default: break;
        }
        double al = alphas[rng() % 3];
        std::string u = random_poly(rng), v = random_poly(rng);
        std::string id = "parts-" + pad(i);
        jobs.emplace_back(id, [=] {
            double r = parts_residual_relative(fx(u), fx(v), ts, a, b, al);
            return check_row(id, "parts", ts.literal(), al, 0, r, 1e-10, r <= 1e-10);
        });
    }
    for (int i = 0; i < 20; ++i) {
        TimeScale ts = i % 3 == 0 ? random_finite_set(rng, 200) : i % 3 == 1 ? TimeScale::integers()
                                                                             : TimeScale::q_lattice(2);
        double horizon = i % 3 == 0 ? ts.points_in(1, *ts.max())[150] : i % 3 == 1 ? 300 : 4096;
        double al = alphas[rng() % 3];
        std::string g = random_nonneg(rng);
        std::string id = "ftc-" + pad(i);
        jobs.emplace_back(id, [=] {
            ScaleFunction gf = fx(g);
            ScaleFunction G = cumulative(gf, ts, 1, Side::lower, horizon, al);
            double worst = 0;
            for (double t : ts.points_in(1, horizon)) {
                double d = conformable_derivative(G, ts, t, al);
                double want = gf(t);
                worst = std::max(worst, std::abs(d - want) / std::max(std::abs(want), 1e-300));
            }
            return check_row(id, "ftc", ts.literal(), al, 0, worst, 1e-12, worst <= 1e-12);
        });
    }
    for (int i = 0; i < 100; ++i) {
        TimeScale ts = TimeScale::real_interval(1, 60);
        double b = 50;
        switch (i % 4) {
            case 1: ts = TimeScale::lattice(0.5), b = 50; break;
            case 2: ts = TimeScale::integers(), b = 50; break;
            case 3: ts = TimeScale::q_lattice(1.25), b = std::pow(1.25, 16); break;
            default: break;
        }
        double al = alphas[rng() % 3];
        double p = uniform(rng, 1.2, 4.0);
        std::string f = random_nonneg(rng), g = random_nonneg(rng);
        std::string id = "holder-" + pad(i);
        jobs.emplace_back(id, [=] {
            HolderGap h = holder_gap(fx(f), fx(g), ts, 1, b, p, al);
            double gap = (h.rhs - h.lhs) / std::max(std::abs(h.rhs), 1e-300);
            // measured value is the negated gap so that pass means measured <= tol
            return check_row(id, "holder", ts.literal(), al, p, -gap, 1e-12, gap >= -1e-12);
        });
    }
    jobs.emplace_back("quad-1", [] {
        auto v = delta_alpha_integral(fx("t^(-0.5)"), TimeScale::real_interval(1, 4), 1, 4, 1.0);
        double e = std::abs(v.value - 2.0);
        return check_row("quad-1", "quadrature", "R[1,4]", 1, 0, e, 1e-8, e <= 1e-8);
    });
    jobs.emplace_back("quad-2", [] {
        auto v = improper_tail(fx("t^(-3)"), TimeScale::real_interval(1, INFINITY), 1, 1e3, 1.0);
        double e = std::abs(v.value.value - 0.5);
        return check_row("quad-2", "quadrature", "R[1,inf]", 1, 0, e, 1e-6, e <= 1e-6);
    });
    return run_jobs(jobs);
}

std::vector<SuiteRow> theorem_suite(std::uint64_t seed, double factor) {
    std::vector<std::pair<std::string, Job>> jobs;
    for (const Case& c : soundness_cases(seed, 50, factor)) {
        jobs.emplace_back(c.id, [c] { return row_from_report(c, evaluate(c)); });
    }
    return run_jobs(jobs);
}

std::vector<SuiteRow> reduction_suite(std::uint64_t seed, double factor) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, Job>> jobs;
    int pair_no = 0;
    for (const ReductionPair& pr : reduction_pairs()) {
        ++pair_no;
        const bool dense = pr.scale == ScaleReq::dense;
        TimeScale ts = dense ? TimeScale::real_interval(1, INFINITY) : TimeScale::integers();
        for (int i = 0; i < 10; ++i) {
            double horizon = dense ? std::round(uniform(rng, 10, 100)) : std::round(uniform(rng, 20, 300));
            horizon = scaled_horizon(ts, horizon, factor);
            Case c = random_case(pr.general, ts, 1, horizon, rng);
            c.alpha = 1.0;
            const auto& conds = find_theorem(pr.general).conditions;
            if (std::find(conds.begin(), conds.end(), Cond::S5) != conds.end()) {
                // (t-a)^(-gamma) below the split floor must stay under the quadrature cap
                c.gamma = dense ? c.gamma * 0.4 / 0.9 : std::min(c.gamma, 0.9);
            } else if (dense) {
                // gamma <= p keeps (t-a)^(p-gamma) integrable at a
                c.gamma = 1.0 + uniform(rng, 0.05, 1.0) * std::max(c.p - 1.0, 0.05);
            }
            // zero f near a keeps the dense integrands bounded where G vanishes
            c.roles[Role::f] = ScaleFunction::product(fx("min(1, max(0, (t-1)*1e6))"), c.roles.at(Role::f));
            std::string id = "red-" + pad(pair_no) + "-" + pr.general + "-" + pr.target + "-" + pad(i);
            c.id = id;
            jobs.emplace_back(id, [pr, c, id] {
                double d = reduction_check(pr, c);
                Case s = specialize(pr, c);
                SuiteRow r = check_row(id, pr.general + "->" + pr.target, c.scale.literal(), 1.0, s.p, d, 1e-12,
                                       d <= 1e-12);
                r.gamma = s.gamma;
                return r;
            });
        }
    }
    return run_jobs(jobs);
}

std::vector<SuiteRow> oracle_suite(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, Job>> jobs;
    for (const char* thm : {"thm1", "thm2", "thm3", "thm4"}) {
        for (int i = 0; i < 50; ++i) {
            TimeScale ts = TimeScale::integers();
            double horizon = 0;
            switch (i % 4) {
                case 0: {
                    int n = 20 + static_cast<int>(rng() % 400);
                    ts = random_finite_set(rng, n);
                    horizon = ts.points_in(1, *ts.max())[static_cast<std::size_t>(n / 3)];
                    break;
                }
                case 1: horizon = std::round(uniform(rng, 10, 300)); break;
                case 2: ts = TimeScale::lattice(0.5), horizon = std::round(uniform(rng, 5, 150)); break;
                default: ts = TimeScale::q_lattice(1.5), horizon = std::pow(1.5, 5 + static_cast<int>(rng() % 12));
            }
            Case c = random_case(thm, ts, 1, horizon, rng);
            std::string id = std::string("oracle-") + thm + "-" + pad(i);
            c.id = id;
            jobs.emplace_back(id, [c, id] {
                Sides e = evaluate_sides(find_theorem(c.theorem), c);
                OracleSides o = brute_force_oracle(c);
                double d = std::max(relative_discrepancy(e.lhs, o.lhs), relative_discrepancy(e.rhs, o.rhs));
                SuiteRow r = check_row(id, c.theorem, c.scale.literal(), c.alpha, c.p, d, 1e-10, d <= 1e-10);
                r.gamma = c.gamma, r.theta = c.theta, r.beta = c.beta;
                return r;
            });
        }
    }
    return run_jobs(jobs);
}

std::vector<SuiteRow> sharpness_suite(double factor) {
    std::vector<SuiteRow> rows;
    struct Probe {
        std::string id;
        std::string theorem;
        TimeScale scale;
        double horizon;
        std::string templ;
        double lo, hi;
    };
    const std::vector<Probe> probes = {
        {"sharp-continuous", "hardy-continuous", TimeScale::real_interval(1, INFINITY), 1e6, "t^(-0.5-lambda)", 0.01,
         0.5},
        {"sharp-discrete", "hardy-discrete", TimeScale::integers(), 1e4, "t^(-0.5-lambda)", 0.05, 0.5},
        {"sharp-constant", "hardy-discrete", TimeScale::integers(), 11, "lambda", 0.5, 8},
    };
    for (const auto& pb : probes) {
        Case c;
        c.theorem = pb.theorem;
        c.scale = pb.scale;
        c.a = 1;
        c.horizon = scaled_horizon(pb.scale, pb.horizon, factor);
        c.p = 2;
        ParamFamily fam;
        fam.templ = Expression::parse(pb.templ);
        fam.lo = pb.lo;
        fam.hi = pb.hi;
        const TheoremSpec& spec = find_theorem(pb.theorem);
        MaximizeResult m = maximize(spec, fam, c);
        int k = 0;
        for (const auto& tp : m.trace) {
            SuiteRow r;
            r.case_id = pb.id + "-" + pad(k++);
            r.theorem_id = pb.theorem;
            r.alpha = 1, r.p = 2;
            r.scale = pb.scale.literal();
            r.lhs = tp.lhs, r.rhs = tp.rhs, r.ratio = tp.ratio;
            r.lhs_sensitivity = r.rhs_sensitivity = std::numeric_limits<double>::quiet_NaN();
            r.verdict = tp.ok && tp.ratio <= 1 + verdict_rel_tol ? "verified" : tp.ok ? "violated" : "degenerate";
            rows.push_back(r);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SuiteRow& a, const SuiteRow& b) { return a.case_id < b.case_id; });
    return rows;
}

}  // namespace

std::vector<Case> soundness_cases(std::uint64_t seed, int per_scale, double factor) {
    std::mt19937_64 rng(seed);
    std::vector<Case> out;
    for (const char* thm : {"thm1", "thm2", "thm3", "thm4"}) {
        for (const char* tag : {"Z", "Q"}) {
            const bool q = tag[0] == 'Q';
            TimeScale ts = q ? TimeScale::q_lattice(2) : TimeScale::integers();
            for (int i = 0; i < per_scale; ++i) {
                double horizon = q ? std::pow(2.0, 5 + static_cast<int>(rng() % 8)) : std::round(uniform(rng, 30, 300));
                Case c = random_case(thm, ts, 1, scaled_horizon(ts, horizon, factor), rng);
                c.id = std::string(thm) + "-" + tag + "-" + pad(i);
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

SuiteRow row_from_report(const Case& c, const VerificationReport& rep) {
    SuiteRow r;
    r.case_id = c.id;
    r.theorem_id = rep.theorem_id;
    r.alpha = c.alpha, r.p = c.p, r.gamma = c.gamma, r.theta = c.theta, r.beta = c.beta;
    r.scale = c.scale.literal();
    r.lhs = rep.lhs, r.rhs = rep.rhs, r.ratio = rep.ratio;
    r.lhs_sensitivity = rep.lhs_sensitivity, r.rhs_sensitivity = rep.rhs_sensitivity;
    r.hypotheses_ok = rep.hypotheses.ok();
    r.verdict = verdict_name(rep.verdict);
    return r;
}

std::vector<SuiteRow> run_suite(const std::string& name, std::uint64_t seed, double horizon_factor) {
    if (name == "calculus") return calculus_suite(seed);
    if (name == "theorems") return theorem_suite(seed, horizon_factor);
    if (name == "reductions") return reduction_suite(seed, horizon_factor);
    if (name == "oracle") return oracle_suite(seed);
    if (name == "sharpness") return sharpness_suite(horizon_factor);
    throw InputError("unknown suite '" + name + "'");
}

std::string suite_csv(const std::vector<SuiteRow>& rows) {
    std::ostringstream out;
    out << "case_id,theorem_id,alpha,p,gamma,theta,beta,scale,lhs,rhs,ratio,lhs_sensitivity,rhs_sensitivity,"
           "hypotheses_ok,verdict\n";
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    for (const auto& r : rows) {
        out << quote(r.case_id) << ',' << quote(r.theorem_id) << ',' << format_double(r.alpha) << ','
            << format_double(r.p) << ',' << format_double(r.gamma) << ',' << format_double(r.theta) << ','
            << format_double(r.beta) << ',' << quote(r.scale) << ',' << format_double(r.lhs) << ','
            << format_double(r.rhs) << ',' << format_double(r.ratio) << ',' << format_double(r.lhs_sensitivity)
            << ',' << format_double(r.rhs_sensitivity) << ',' << (r.hypotheses_ok ? "true" : "false") << ','
            << quote(r.verdict) << '\n';
    }
    return out.str();
}

bool all_verified(const std::vector<SuiteRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.verdict == "verified"; });
}

std::string suite_summary(const std::string& name, const std::vector<SuiteRow>& rows) {
    std::map<std::string, int> counts;
    for (const auto& r : rows) counts[r.verdict.rfind("error", 0) == 0 ? "error" : r.verdict]++;
    std::string s = name + ": " + std::to_string(rows.size()) + " rows";
    for (const auto& [k, v] : counts) s += ", " + std::to_string(v) + " " + k;
    return s;
}

}  // namespace hardy
