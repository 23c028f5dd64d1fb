#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hardy/casefile.hpp"
#include "hardy/catalogue.hpp"
#include "hardy/cli.hpp"
#include "hardy/errors.hpp"
#include "hardy/generate.hpp"
#include "hardy/oracle.hpp"
#include "hardy/sharpness.hpp"
#include "hardy/suites.hpp"
#include "json.hpp"

using namespace hardy;

namespace {

const std::string data_dir = HARDY_TEST_DATA;

ScaleFunction fx(const char* s) { return ScaleFunction::expression(Expression::parse(s)); }

Case copson_case() {
    Case c;
    c.theorem = "copson-h20";
    c.scale = TimeScale::integers();
    c.a = 1;
    c.horizon = 6;
    c.p = 2;
    c.gamma = 1.5;
    c.roles[Role::f] = fx("1/t");
    c.roles[Role::g] = fx("1");
    return c;
}

Case case_from_text(const std::string& text) {
    auto sections = read_sections(text);
    REQUIRE(sections.size() == 1);
    return case_from_section(sections[0], data_dir);
}

}  // namespace

TEST_CASE("copson series on a short window") {
    // sum_{t=1}^{5} H_t^2 t^-1.5 and 16 sum t^-1.5, computed by hand
    auto c = copson_case();
    auto rep = evaluate(c);
    CHECK(rep.lhs == doctest::Approx(3.4511955400902083).epsilon(1e-14));
    CHECK(rep.rhs == doctest::Approx(28.16713919077025).epsilon(1e-14));
    auto o = brute_force_oracle(c);
    CHECK(o.lhs == doctest::Approx(3.4511955400902083).epsilon(1e-14));
    CHECK(o.rhs == doctest::Approx(28.16713919077025).epsilon(1e-14));
}

TEST_CASE("oracle agrees with the engine on random cases") {
    std::mt19937_64 rng(2024);
    const std::vector<std::pair<TimeScale, double>> scales = {
        {TimeScale::integers(), 1.0},
        {TimeScale::q_lattice(2.0), 1.0},
        {TimeScale::lattice(0.5), 0.5},
        {TimeScale::finite_set({0.5, 1.0, 1.2, 2.0, 2.5, 3.1, 4.0, 5.5, 6.0, 7.25, 9.0, 11.0, 13.0, 20.0}), 1.0},
    };
    for (const char* id : {"thm1", "thm2", "thm3", "thm4"}) {
        for (const auto& [ts, a] : scales) {
            for (int i = 0; i < 5; ++i) {
                Case c = random_case(id, ts, a, ts.is_dense() ? 10 : ts.ceil_member(a + 6), rng);
                auto s = evaluate_sides(find_theorem(c.theorem), c);
                auto o = brute_force_oracle(c);
                CAPTURE(c.theorem);
                CAPTURE(ts.literal());
                CHECK(relative_discrepancy(s.lhs, o.lhs) <= 1e-10);
                CHECK(relative_discrepancy(s.rhs, o.rhs) <= 1e-10);
            }
        }
    }
}

TEST_CASE("oracle limits") {
    Case c = copson_case();
    c.roles[Role::f] = fx("0");
    auto o = brute_force_oracle(c);
    CHECK(o.lhs == 0);
    CHECK(o.rhs == 0);
    c.scale = TimeScale::real_interval(1, 10);
    CHECK_THROWS_AS(brute_force_oracle(c), InputError);
    c.scale = TimeScale::integers();
    c.horizon = 20002;
    CHECK_THROWS_AS(brute_force_oracle(c), InputError);
    CHECK(oracle_supports("corQ.2"));
    CHECK_FALSE(oracle_supports("hardy-continuous"));
}

TEST_CASE("generated cases satisfy their hypotheses") {
    std::mt19937_64 rng(99);
    for (const char* id : {"thm1", "thm2", "thm3", "thm4", "cor1.1", "eldeeb-eqq1"}) {
        for (int i = 0; i < 10; ++i) {
            Case c = random_case(id, TimeScale::integers(), 1, 40, rng);
            CAPTURE(id);
            CHECK(check_hypotheses(c, find_theorem(id)).ok());
        }
    }
    auto s = random_sequence_case(50, 1.5, rng);
    CHECK(s.theorem == "hardy-discrete");
    CHECK(s.horizon == 51);
    CHECK(evaluate(s).verdict == Verdict::verified);
}

TEST_CASE("reduction pairs agree") {
    auto rows = run_suite("reductions", 11);
    CHECK(rows.size() == reduction_pairs().size() * 10);
    for (const auto& r : rows) {
        CAPTURE(r.case_id);
        CHECK(r.lhs <= 1e-12);
        CHECK(r.verdict == "verified");
    }
}

TEST_CASE("suites are deterministic and sorted") {
    auto a = suite_csv(run_suite("oracle", 5));
    auto b = suite_csv(run_suite("oracle", 5));
    CHECK(a == b);
    CHECK(a.rfind("case_id,", 0) == 0);
    auto rows = run_suite("calculus", 1);
    CHECK(all_verified(rows));
    CHECK(std::is_sorted(rows.begin(), rows.end(),
                         [](const SuiteRow& x, const SuiteRow& y) { return x.case_id < y.case_id; }));
    CHECK_THROWS_AS(run_suite("nope", 1), InputError);
}

TEST_CASE("sharpness probe") {
    const auto& spec = find_theorem("hardy-discrete");
    Case templ;
    templ.theorem = "hardy-discrete";
    templ.scale = TimeScale::integers();
    templ.a = 1;
    templ.horizon = 11;
    templ.p = 2;

    ParamFamily constant;
    constant.templ = Expression::parse("lambda");
    constant.lo = 0.5;
    constant.hi = 8;
    auto res = maximize(spec, constant, templ);
    CHECK(res.best_ratio == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(res.trace.size() >= static_cast<std::size_t>(sharpness_grid));

    ParamFamily zero;
    zero.templ = Expression::parse("0*lambda");
    CHECK_THROWS_AS(ratio(spec, family_member(zero, templ, 1.0)), ZeroDenominator);
    CHECK_THROWS_AS(maximize(spec, zero, templ), AllDegenerate);
}

TEST_CASE("scale literals") {
    CHECK(parse_scale("Z").literal() == TimeScale::integers().literal());
    CHECK(parse_scale("R[1,inf]").is_dense());
    CHECK(parse_scale("hZ(0.5)").sigma(1.0) == 1.5);
    CHECK(parse_scale("hZ(1,0.25)").snap(2.25).has_value());
    CHECK(parse_scale("qZ(2)").sigma(4.0) == 8.0);
    CHECK(parse_scale("set[1,2,5]").sigma(2.0) == 5.0);
    for (const char* bad : {"", "Q", "R[2,1]", "hZ(0)", "qZ(1)", "set[1,1]", "set[]", "R[1,nan]"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_scale(bad), InputError);
    }
}

TEST_CASE("case file errors") {
    const std::string head = "[case c]\ntheorem = hardy-discrete\nscale = Z\na = 1\nhorizon = 5\n";
    auto c = case_from_text(head + "p = 3\nf = 1/t\n");
    CHECK(c.id == "c");
    CHECK(c.p == 3);
    CHECK_THROWS_AS(case_from_text(head + "f = 1\nbogus = 2\n"), InputError);
    CHECK_THROWS_AS(case_from_text(head + "f = 1\np = 2\np = 3\n"), InputError);
    CHECK_THROWS_AS(case_from_text("[case c]\ntheorem = thm1\nscale = Z\na = 1\nf = 1\n"), InputError);
    CHECK_THROWS_AS(case_from_text(head + "f = lambda*t\n"), InputError);
    CHECK_THROWS_AS(case_from_text(head + "f = 1\np = nan\n"), InputError);
    CHECK_THROWS_AS(case_from_text(head + "f = 1 +\n"), ParseError);
    CHECK_THROWS_AS(case_from_text(head + "f = table:missing.csv\n"), InputError);
    CHECK_THROWS_AS(read_sections("theorem = thm1\n"), InputError);
    CHECK_THROWS_AS(read_sections("[case]\n"), InputError);
    CHECK_THROWS_AS(read_sections("[case c\n"), InputError);
    CHECK(read_sections("# only a comment\n\n").empty());
    CHECK(scaled_horizon(TimeScale::q_lattice(2), 8, 1.5) == 16);
    CHECK(scaled_horizon(TimeScale::integers(), 7, 1.0) == 7);
}

TEST_CASE("table roles") {
    auto cases = load_cases(data_dir + "/table.case");
    REQUIRE(cases.size() == 1);
    auto rep = evaluate(cases[0]);
    // K = 1, 1.5, 1.75, 1.75 over t = 1..4
    CHECK(rep.lhs == doctest::Approx(1 + 0.5625 + 1.75 * 1.75 / 9 + 1.75 * 1.75 / 16).epsilon(1e-14));
    CHECK(rep.rhs == 5.25);
}

TEST_CASE("verify exit codes") {
    const std::vector<std::pair<const char*, int>> files = {
        {"verified.case", 0}, {"violated.case", 1}, {"unmet.case", 2}, {"input_error.case", 3},
        {"inconclusive.case", 4}, {"no_such_file.case", 3},
    };
    for (const auto& [name, code] : files) {
        std::ostringstream out, err;
        CAPTURE(name);
        CHECK(run_case(data_dir + "/" + name, out, err) == code);
    }
    std::ostringstream out, err;
    CHECK(run_case(data_dir + "/violated.case", out, err, true) == 1);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["verdict"] == "violated");
    CHECK(j["theorem_id"] == "eldeeb-15");
    CHECK(j["lhs"].get<double>() < j["rhs"].get<double>());
}

TEST_CASE("sharpness command on a family file") {
    auto fam = load_family(data_dir + "/hardy_continuous.family");
    CHECK(fam.templ.theorem == "hardy-continuous");
    CHECK(fam.family.lo == 0.01);
    CHECK(fam.family.hi == 0.5);
    CHECK(fam.family.role == Role::f);
    CHECK_THROWS_AS(load_family(data_dir + "/verified.case"), InputError);
}

TEST_CASE("continuous Hardy power family against its closed form") {
    // lhs = int_1^1e6 ((t^c - 1)/(c (t-1)))^2 dt, rhs = 4 (1 - 1e6^(-2 lambda))/(2 lambda), c = 1/2 - lambda,
    // evaluated independently at 30 digits
    auto ff = load_family(data_dir + "/hardy_continuous.family");
    const auto& spec = find_theorem(ff.templ.theorem);
    const std::vector<std::array<double, 4>> expected = {
        {0.1, 16.775587905397502, 18.738085311039614, 0.89526691905464327},
        {0.05, 26.217040656292392, 29.95245427396168, 0.875288562883591},
        {0.01, 40.53202856099809, 48.284484994163246, 0.83944208094790089},
    };
    for (const auto& [lambda, lhs, rhs, r] : expected) {
        auto tp = probe(spec, ff.family, ff.templ, lambda);
        CAPTURE(lambda);
        REQUIRE(tp.ok);
        CHECK(tp.lhs == doctest::Approx(lhs).epsilon(1e-9));
        CHECK(tp.rhs == doctest::Approx(rhs).epsilon(1e-9));
        CHECK(tp.ratio == doctest::Approx(r).epsilon(1e-9));
    }
}
