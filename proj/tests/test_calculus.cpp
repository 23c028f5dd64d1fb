#include <cmath>
#include <random>

#include "doctest.h"
#include "hardy/calculus.hpp"
#include "hardy/errors.hpp"

using namespace hardy;

namespace {

ScaleFunction fx(const char* s) { return ScaleFunction::expression(Expression::parse(s)); }

}  // namespace

TEST_CASE("delta derivatives") {
    CHECK(delta_derivative(fx("t^2"), TimeScale::integers(), 3) == 7);
    CHECK(delta_derivative(fx("t"), TimeScale::q_lattice(2), 4) == 1);
    CHECK(delta_derivative(fx("t^2"), TimeScale::real_interval(0, 10), 3) == doctest::Approx(6).epsilon(1e-8));
    CHECK(delta_derivative(fx("t^2"), TimeScale::real_interval(3, 10), 3) == doctest::Approx(6).epsilon(1e-8));
    CHECK(delta_derivative(fx("t^2"), TimeScale::real_interval(0, 3), 3) == doctest::Approx(6).epsilon(1e-8));
    CHECK(delta_derivative(fx("(t+1)^2"), TimeScale::lattice(0.5), 1) == 4.5);
    CHECK_THROWS_AS(delta_derivative(fx("t"), TimeScale::finite_set({0, 1, 4}), 4), AtMaximum);
}

TEST_CASE("conformable derivatives") {
    auto z = TimeScale::integers();
    CHECK(conformable_derivative(fx("t^2"), z, 3, 1.0) == delta_derivative(fx("t^2"), z, 3));
    CHECK(conformable_derivative(fx("t"), z, 4, 0.5) == 2);
    auto r = TimeScale::real_interval(0, 100);
    for (double t : {0.3, 1.0, 7.5, 42.0})
        CHECK(conformable_derivative(fx("t^0.5"), r, t, 0.5) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK_THROWS_AS(conformable_derivative(fx("t"), z, 0, 0.5), NonPositivePoint);
}

TEST_CASE("delta-alpha integrals") {
    CHECK(delta_alpha_integral(fx("1"), TimeScale::integers(), 0, 5, 1.0).value == 5);
    auto r = TimeScale::real_interval(0, 10);
    CHECK(delta_alpha_integral(fx("1"), r, 1, 4, 0.5).value == doctest::Approx(2).epsilon(1e-9));
    double three = 1 + std::pow(2, -0.5) + std::pow(3, -0.5);
    CHECK(delta_alpha_integral(fx("1"), TimeScale::integers(), 1, 4, 0.5).value == doctest::Approx(three).epsilon(1e-15));
    CHECK(delta_alpha_integral(fx("1"), r, 3, 3, 0.5).value == 0);
    CHECK_THROWS_AS(delta_alpha_integral(fx("1"), r, 0, 1, 0.5), SingularWeight);
    CHECK_THROWS_AS(delta_alpha_integral(fx("1"), TimeScale::integers(), 0, 3, 0.5), SingularWeight);
    // q-lattice: (q-1) sum q^k f(q^k) with f = 1/t gives (q-1) * count
    CHECK(delta_alpha_integral(fx("1/t"), TimeScale::q_lattice(2), 1, 1024, 1.0).value == 10);
}

TEST_CASE("alpha = 1 reduces to plain Delta calculus bit for bit") {
    auto q = TimeScale::q_lattice(1.5);
    auto f = ScaleFunction::callable([](double t) { return std::sin(t) + 2; }, "sin(t)+2");
    auto pts = q.points_in(1, q.ceil_member(500));
    double plain = 0;
    for (double t : pts) plain += f(t) * (q.sigma(t) - t);
    CHECK(delta_alpha_integral(f, q, 1, q.ceil_member(500), 1.0).value == plain);
    for (double t : pts) CHECK(conformable_derivative(f, q, t, 1.0) == delta_derivative(f, q, t));
}

TEST_CASE("closed-form quadrature") {
    auto r = TimeScale::real_interval(0, 1e4);
    CHECK(delta_alpha_integral(fx("t^(-0.5)"), r, 1, 4, 1.0).value == doctest::Approx(2).epsilon(1e-10));
    CHECK(delta_alpha_integral(fx("exp(-t)*t^2"), r, 0, 20, 1.0).value ==
          doctest::Approx(2 - 442 * std::exp(-20.0)).epsilon(1e-10));
    CHECK(delta_alpha_integral(fx("t^1.5"), r, 1, 9, 0.8).value ==
          doctest::Approx((std::pow(9, 2.3) - 1) / 2.3).epsilon(1e-10));
}

TEST_CASE("improper tails") {
    auto zero = improper_tail(fx("0"), TimeScale::integers(), 1, 50, 1.0);
    CHECK(zero.value.value == 0);
    CHECK(zero.sensitivity == 0);
    auto dense = improper_tail(fx("t^(-3)"), TimeScale::real_interval(0, INFINITY), 1, 1e3, 1.0);
    CHECK(std::abs(dense.value.value - 0.5) < 1e-6);
    CHECK(dense.sensitivity < 1e-6);
    auto geo = improper_tail(fx("2^(-t)"), TimeScale::integers(), 1, 60, 1.0);
    CHECK(std::abs(geo.value.value - 1.0) < 1e-12);
    CHECK(geo.sensitivity < 1e-15);
}

TEST_CASE("cumulatives") {
    auto z = TimeScale::integers();
    auto G = cumulative(fx("1"), z, 0, Side::lower, 20, 1.0);
    for (int t = 0; t <= 20; ++t) CHECK(G(t) == t);
    auto F = cumulative(fx("2^(-t)"), z, 1, Side::upper, 60, 1.0);
    CHECK(F(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(F(60) == 0);
    auto q = TimeScale::q_lattice(2);
    auto g = fx("t^(-0.7) + 1/(1+t)");
    auto Gq = cumulative(g, q, 1, Side::lower, std::ldexp(1.0, 30), 0.5);
    for (double t : q.points_in(1, std::ldexp(1.0, 30))) {
        double d = conformable_derivative(Gq, q, t, 0.5);
        CHECK(std::abs(d - g(t)) <= 1e-12 * g(t));
    }
    auto r = TimeScale::real_interval(0, 100);
    auto Gr = cumulative(fx("1/t"), r, 1, Side::lower, 100, 1.0);
    auto Hr = cumulative(fx("1/t"), r, 1, Side::upper, 100, 1.0);
    for (double t : {1.0, 1.5, 2.0, 17.3, 99.9, 100.0}) {
        CHECK(Gr(t) == doctest::Approx(std::log(t)).epsilon(1e-12));
        CHECK(Hr(t) == doctest::Approx(std::log(100 / t)).epsilon(1e-12));
    }
}

TEST_CASE("integration by parts") {
    CHECK(parts_residual(fx("t"), fx("t^2"), TimeScale::integers(), 0, 10, 1.0) <= 1e-10);
    CHECK(parts_residual(fx("0"), fx("t^2"), TimeScale::integers(), 0, 10, 1.0) == 0);
    CHECK(parts_residual_relative(fx("1 + 2*t - t^3/1000"), fx("3 - t^2/7 + t^3/1e4"), TimeScale::q_lattice(2), 1,
                                  1024, 0.5) <= 1e-10);
    CHECK(parts_residual_relative(fx("t^2"), fx("exp(-t)"), TimeScale::real_interval(0, 10), 1, 5, 0.7) <= 1e-7);
}

TEST_CASE("Hoelder") {
    auto z = TimeScale::integers();
    auto eq = holder_gap(fx("1/t"), fx("1/t"), z, 1, 100, 2, 1.0);
    CHECK(eq.lhs == doctest::Approx(eq.rhs).epsilon(1e-14));
    auto f = ScaleFunction::table({0, 1, 2}, {1, 0, 0});
    auto g = ScaleFunction::table({0, 1, 2}, {0, 1, 0});
    auto dis = holder_gap(f, g, z, 0, 2, 2, 1.0);
    CHECK(dis.lhs == 0);
    CHECK(dis.rhs > 0);
    auto h = holder_gap(fx("1/t"), fx("1"), z, 1, 100, 3, 1.0);
    CHECK(h.lhs < h.rhs);
    CHECK(h.lhs == doctest::Approx(5.17737751763962).epsilon(1e-12));
}

TEST_CASE("chain rules") {
    auto z = TimeScale::integers();
    auto id = chain_rule_check(Expression::parse("t"), fx("t^2"), z, 3, 1.0);
    CHECK(id.residual == 0);
    auto sq = chain_rule_check(Expression::parse("t^2"), fx("t"), z, 3, 1.0);
    CHECK(sq.lhs == 7);
    CHECK(sq.rhs == doctest::Approx(7).epsilon(1e-15));
    CHECK(sq.bracket_ok);
    auto q = chain_rule_check(Expression::parse("exp(t/10)"), fx("t^1.5"), TimeScale::q_lattice(1.5), 2.25, 0.6);
    CHECK(q.residual <= 1e-10 * std::abs(q.lhs));
    CHECK(q.bracket_ok);
    auto d = chain_rule_check(Expression::parse("t^3"), fx("1 + t/2"), TimeScale::real_interval(0, 10), 2.0, 0.5);
    CHECK(d.residual <= 1e-8);
}
