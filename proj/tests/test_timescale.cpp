#include <cmath>

#include "doctest.h"
#include "hardy/errors.hpp"
#include "hardy/timescale.hpp"

using namespace hardy;

TEST_CASE("jump on the integers") {
    auto z = TimeScale::integers();
    Jump j = z.jump(5);
    CHECK(j.sigma == 6);
    CHECK(j.rho == 4);
    CHECK(j.mu == 1);
    CHECK(j.cls.right == RightClass::scattered);
}

TEST_CASE("jump on a real interval") {
    auto r = TimeScale::real_interval(0, 10);
    Jump j = r.jump(3.7);
    CHECK(j.sigma == 3.7);
    CHECK(j.mu == 0);
    CHECK(j.cls.right == RightClass::dense);
    CHECK(r.jump(10).cls.right == RightClass::maximum);
    CHECK(r.jump(0).cls.left == LeftClass::minimum);
}

TEST_CASE("jump on the q-lattice") {
    auto q = TimeScale::q_lattice(2);
    Jump j = q.jump(8);
    CHECK(j.sigma == 16);
    CHECK(j.rho == 4);
    CHECK(j.mu == 8);
    for (int k = -30; k <= 60; ++k) {
        double t = std::ldexp(1.0, k);
        CHECK(q.sigma(t) == std::ldexp(1.0, k + 1));
    }
}

TEST_CASE("finite set endpoints") {
    auto s = TimeScale::finite_set({0, 1, 4});
    Jump j = s.jump(4);
    CHECK(j.sigma == 4);
    CHECK(j.mu == 0);
    CHECK(j.cls.right == RightClass::maximum);
    CHECK(s.jump(0).rho == 0);
    CHECK(s.jump(0).cls.left == LeftClass::minimum);
    CHECK(s.jump(1).sigma == 4);
}

TEST_CASE("membership and snapping") {
    auto z = TimeScale::integers();
    CHECK_THROWS_AS(z.jump(2.5), NotAMember);
    CHECK(z.member(3.0000000000001) == 3.0);
    auto q = TimeScale::q_lattice(1.5);
    double x = std::pow(1.5, 40);
    CHECK(q.member(x * (1 + 1e-14)) == x);
    CHECK_THROWS_AS(q.member(-1.0), NotAMember);
    CHECK_THROWS_AS(q.member(x * 1.01), NotAMember);
    CHECK_THROWS(TimeScale::finite_set({1.0}));
    CHECK_THROWS(TimeScale::finite_set({1.0, 1.0}));
    CHECK_THROWS(TimeScale::real_interval(2, 1));
}

TEST_CASE("points_in") {
    auto z = TimeScale::integers();
    CHECK(z.points_in(2, 5) == std::vector<double>{2, 3, 4});
    auto h = TimeScale::lattice(0.5);
    CHECK(h.points_in(0, 1) == std::vector<double>{0, 0.5});
    CHECK_THROWS_AS(TimeScale::real_interval(0, 1).points_in(0, 1), DenseUnsupported);
    auto q = TimeScale::q_lattice(2);
    CHECK(q.points_in(1, 16) == std::vector<double>{1, 2, 4, 8});
    auto s = TimeScale::finite_set({0, 1, 4, 9});
    CHECK(s.points_in(1, 9) == std::vector<double>{1, 4});
}

TEST_CASE("points_in is additive over adjacent windows") {
    for (auto ts : {TimeScale::integers(), TimeScale::lattice(0.25, 0.5), TimeScale::q_lattice(3)}) {
        double a = ts.ceil_member(1), b = ts.ceil_member(7), c = ts.ceil_member(40);
        auto ab = ts.points_in(a, b), bc = ts.points_in(b, c), ac = ts.points_in(a, c);
        ab.insert(ab.end(), bc.begin(), bc.end());
        CHECK(ab == ac);
    }
}

TEST_CASE("rho inverts sigma on lattices") {
    for (auto ts : {TimeScale::integers(), TimeScale::lattice(0.1), TimeScale::q_lattice(2), TimeScale::q_lattice(1.3)}) {
        for (double t : ts.points_in(ts.ceil_member(0.5), ts.ceil_member(50))) {
            Jump j = ts.jump(t);
            CHECK(j.sigma > t);
            CHECK(ts.jump(j.sigma).rho == doctest::Approx(t).epsilon(1e-13));
        }
    }
}

TEST_CASE("ceil and floor members") {
    auto q = TimeScale::q_lattice(2);
    CHECK(q.ceil_member(5) == 8);
    CHECK(q.floor_member(5) == 4);
    CHECK(TimeScale::integers().ceil_member(2.2) == 3);
    CHECK(TimeScale::finite_set({0, 1, 4}).ceil_member(10) == 4);
    CHECK(TimeScale::lattice(0.5).literal() == "hZ(0.5)");
    CHECK(TimeScale::integers().literal() == "Z");
}
