// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hardy/calculus.hpp"
#include "hardy/casefile.hpp"
#include "hardy/catalogue.hpp"
#include "hardy/format.hpp"
#include "hardy/generate.hpp"
#include "hardy/sharpness.hpp"
#include "hardy/suites.hpp"

using namespace hardy;

namespace {

const std::string data_dir = HARDY_TEST_DATA;
const std::string cli = HARDY_CLI;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) { return format_double(x); }

Outcome hardy_sequences() {
    std::mt19937_64 rng(20240501);
    const double ps[] = {1.5, 2.0, 3.0};
    auto t0 = std::chrono::steady_clock::now();
    int bad = 0;
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        Case c = random_sequence_case(500, ps[i % 3], rng);
        auto s = evaluate_sides(find_theorem("hardy-discrete"), c);
        if (!(s.lhs <= s.rhs * (1 + 1e-12))) ++bad;
        worst = std::max(worst, s.lhs / s.rhs);
    }
    double secs = seconds_since(t0);
    Case c2 = random_sequence_case(10, 2.0, rng);
    double constant = evaluate(c2).constant_value;
    bool ok = bad == 0 && secs < 1.0 && constant == 4.0;
    return {ok, std::to_string(bad) + " of 100 above rhs, max ratio " + fmt(worst) + ", " + fmt(secs) +
                    " s, constant at p=2 " + fmt(constant)};
}

Outcome soundness() {
    auto t0 = std::chrono::steady_clock::now();
    auto cases = soundness_cases(7);
    int violated = 0, unmet = 0, inconclusive = 0;
    double worst = 0;
    for (const Case& c : cases) {
        auto rep = evaluate(c);
        if (rep.verdict == Verdict::violated) ++violated;
        if (rep.verdict == Verdict::hypotheses_unmet) ++unmet;
        if (rep.verdict == Verdict::inconclusive) ++inconclusive;
        if (std::isfinite(rep.ratio)) worst = std::max(worst, rep.ratio);
    }
    double secs = seconds_since(t0);
    bool ok = cases.size() == 400 && violated == 0 && unmet == 0 && secs < 30.0;
    return {ok, std::to_string(cases.size()) + " cases, " + std::to_string(violated) + " violated, " +
                    std::to_string(unmet) + " unmet, " + std::to_string(inconclusive) + " inconclusive, max ratio " +
                    fmt(worst) + ", " + fmt(secs) + " s"};
}

Outcome check_suite(const std::string& name, std::size_t expected_rows) {
    auto rows = run_suite(name, 3);
    double worst = 0;
    for (const auto& r : rows) worst = std::max(worst, std::isfinite(r.lhs) ? r.lhs : INFINITY);
    bool ok = rows.size() == expected_rows && all_verified(rows);
    return {ok, suite_summary(name, rows) + ", max measured " + fmt(worst)};
}

Outcome calculus_identities() {
    auto rows = run_suite("calculus", 3);
    int parts = 0, ftc = 0, holder = 0;
    for (const auto& r : rows) {
        if (r.case_id.rfind("parts-", 0) == 0) ++parts;
        if (r.case_id.rfind("ftc-", 0) == 0) ++ftc;
        if (r.case_id.rfind("holder-", 0) == 0) ++holder;
    }
    bool ok = all_verified(rows) && parts == 100 && holder == 100 && ftc > 0;
    return {ok, suite_summary("calculus", rows) + " (" + std::to_string(parts) + " parts, " + std::to_string(ftc) +
                    " ftc, " + std::to_string(holder) + " holder)"};
}

Outcome quadrature() {
    auto f1 = ScaleFunction::expression(Expression::parse("t^(-1/2)"));
    auto f2 = ScaleFunction::expression(Expression::parse("t^(-3)"));
    auto r = TimeScale::real_interval(0, INFINITY);
    double v1 = delta_alpha_integral(f1, r, 1, 4, 1.0).value;
    double v2 = improper_tail(f2, r, 1, 1e3, 1.0).value.value;
    double e1 = std::abs(v1 - 2.0), e2 = std::abs(v2 - 0.5);
    return {e1 <= 1e-8 && e2 <= 1e-6, "errors " + fmt(e1) + " and " + fmt(e2)};
}

Outcome sharpness() {
    auto t0 = std::chrono::steady_clock::now();
    auto ff = load_family(data_dir + "/hardy_continuous.family");
    const auto& spec = find_theorem(ff.templ.theorem);
    auto res = maximize(spec, ff.family, ff.templ);
    double r1 = probe(spec, ff.family, ff.templ, 0.1).ratio;
    double r2 = probe(spec, ff.family, ff.templ, 0.05).ratio;
    double r3 = probe(spec, ff.family, ff.templ, 0.01).ratio;
    double secs = seconds_since(t0);
    bool increasing = r1 < r2 && r2 < r3;
    bool ok = res.best_ratio >= 0.875 && increasing && secs < 10.0;
    return {ok, "best " + fmt(res.best_ratio) + " at lambda " + fmt(res.best_lambda) + "; lambda 0.1, 0.05, 0.01 -> " +
                    fmt(r1) + ", " + fmt(r2) + ", " + fmt(r3) + (increasing ? "" : " (not increasing)") + ", " +
                    fmt(secs) + " s"};
}

int run(const std::string& cmd) {
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_contract() {
    const std::pair<const char*, int> files[] = {
        {"verified.case", 0}, {"violated.case", 1}, {"unmet.case", 2}, {"input_error.case", 3}, {"inconclusive.case", 4},
    };
    bool ok = true;
    std::string detail = "exit codes";
    for (const auto& [name, want] : files) {
        int got = run(cli + " verify " + data_dir + "/" + name + " > /dev/null 2>&1");
        detail += " " + std::to_string(got);
        if (got != want) ok = false;
    }
    const std::string a = "acceptance_suite_a.csv", b = "acceptance_suite_b.csv";
    bool same = true;
    for (const char* suite : {"theorems", "oracle"}) {
        int ra = run(cli + " suite " + suite + " --seed 5 --out " + a + " > /dev/null 2>&1");
        int rb = run(cli + " suite " + suite + " --seed 5 --out " + b + " > /dev/null 2>&1");
        std::string sa = slurp(a), sb = slurp(b);
        if (ra != 0 || rb != 0 || sa.empty() || sa != sb) same = false;
    }
    std::remove(a.c_str());
    std::remove(b.c_str());
    detail += same ? "; suite CSV byte-identical across runs" : "; suite CSV differs across runs";
    return {ok && same, detail};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"classical Hardy series on random sequences", hardy_sequences},
        {"theorem soundness on Z and 2^Z", soundness},
        {"reduction consistency", [] { return check_suite("reductions", reduction_pairs().size() * 10); }},
        {"oracle equivalence", [] { return check_suite("oracle", 200); }},
        {"calculus identities", calculus_identities},
        {"quadrature closed forms", quadrature},
        {"sharpness probe on the continuous Hardy inequality", sharpness},
        {"CLI exit codes and suite determinism", cli_contract},
    };
    int failed = 0, n = 0;
    for (const auto& [name, fn] : criteria) {
        ++n;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", n - failed, n);
    return failed;
}
