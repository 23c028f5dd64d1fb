#include <cmath>
#include <random>

#include "doctest.h"
#include "hardy/errors.hpp"
#include "hardy/expression.hpp"

using namespace hardy;

namespace {

NodePtr leaf(std::mt19937_64& rng) {
    auto n = std::make_shared<Node>();
    std::uniform_int_distribution<int> pick(0, 3);
    if (pick(rng) == 0) {
        n->kind = NodeKind::variable;
    } else {
        n->kind = NodeKind::number;
        std::uniform_real_distribution<double> u(0.0, 50.0);
        double v = u(rng);
        n->value = pick(rng) == 0 ? std::floor(v) : v * std::pow(10.0, pick(rng) - 2);
    }
    return n;
}

NodePtr random_tree(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    if (depth == 0) return leaf(rng);
    auto n = std::make_shared<Node>();
    int k = pick(rng);
    if (k <= 1) return leaf(rng);
    if (k == 2) {
        n->kind = NodeKind::negate;
        n->args = {random_tree(rng, depth - 1)};
    } else if (k <= 7) {
        n->kind = static_cast<NodeKind>(static_cast<int>(NodeKind::add) + (k - 3));
        n->args = {random_tree(rng, depth - 1), random_tree(rng, depth - 1)};
    } else {
        n->kind = NodeKind::call;
        std::uniform_int_distribution<int> f(0, 6);
        n->fn = static_cast<Builtin>(f(rng));
        n->args = {random_tree(rng, depth - 1)};
        if (n->fn == Builtin::min || n->fn == Builtin::max || n->fn == Builtin::pow) {
            n->args.push_back(random_tree(rng, depth - 1));
        }
    }
    return n;
}

}  // namespace

TEST_CASE("evaluation and precedence") {
    CHECK(Expression::parse("t^2 + 3*t")(2) == 10);
    CHECK(Expression::parse("2*t^2")(3) == 18);
    CHECK(Expression::parse("2^3^2")(0) == 512);
    CHECK(Expression::parse("-t^2")(3) == -9);
    CHECK(Expression::parse("2^-1")(0) == 0.5);
    CHECK(Expression::parse("10 - 4 - 3")(0) == 3);
    CHECK(Expression::parse("12/3/2")(0) == 2);
    CHECK(Expression::parse("max(t, 2) + min(1, t) - abs(-3)")(5) == 3);
    CHECK(Expression::parse("pow(t, 0.5) * sqrt(t)")(4) == doctest::Approx(4));
    CHECK(Expression::parse("exp(log(t))")(7) == doctest::Approx(7));
    CHECK(Expression::parse("1.5e2 + .5 + 2E-1")(0) == doctest::Approx(150.7));
}

TEST_CASE("parse errors carry a position") {
    try {
        Expression::parse("t +");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
        CHECK(!e.expected.empty());
    }
    auto offset_of = [](const char* s) -> long {
        try {
            Expression::parse(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset);
        }
        return -1;
    };
    CHECK(offset_of("(t") == 2);
    CHECK(offset_of("t $ 2") == 2);
    CHECK(offset_of("foo(t)") == 0);
    CHECK(offset_of("exp(t, 2)") >= 0);
    CHECK(offset_of("1e") == 2);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("1e999") == 0);
    CHECK(offset_of(std::string(5000, '(').c_str()) >= 0);
}

TEST_CASE("parser is total on random byte strings") {
    std::mt19937_64 rng(99);
    const std::string alphabet = "t0123456789.+-*/^(),eE lambdaxpqrsmin\t";
    std::uniform_int_distribution<std::size_t> len(0, 24), ch(0, alphabet.size() - 1);
    for (int i = 0; i < 20000; ++i) {
        std::string s;
        std::size_t n = len(rng);
        for (std::size_t k = 0; k < n; ++k) s += alphabet[ch(rng)];
        try {
            auto e = Expression::parse(s);
            CHECK(Expression::parse(e.print()) == e);
        } catch (const ParseError& e) {
            CHECK(e.offset <= s.size());
        }
    }
}

TEST_CASE("print then parse reproduces the tree") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 5000; ++i) {
        auto e = Expression::from_node(random_tree(rng, 6));
        std::string text = e.print();
        auto back = Expression::parse(text);
        INFO(text);
        CHECK(back == e);
    }
}

TEST_CASE("forward-mode derivative") {
    auto e = Expression::parse("t^3 + exp(2*t) + log(t)/t + pow(t, t)");
    double t = 1.3;
    double exact = 3 * t * t + 2 * std::exp(2 * t) + (1 - std::log(t)) / (t * t) + std::pow(t, t) * (std::log(t) + 1);
    CHECK(e.derivative(t) == doctest::Approx(exact).epsilon(1e-14));
    CHECK(Expression::parse("t^2")(0) == 0);
    CHECK(Expression::parse("t^2").derivative(0) == 0);
}

TEST_CASE("lambda binding") {
    auto e = Expression::parse("t^(-0.5 - lambda)");
    CHECK(e.has_params());
    CHECK_THROWS(e(2.0));
    auto b = e.bind("lambda", 0.5);
    CHECK(!b.has_params());
    CHECK(b(4.0) == doctest::Approx(0.25));
}
