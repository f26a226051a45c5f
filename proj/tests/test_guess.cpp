#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motzhank/errors.hpp"
#include "motzhank/guess.hpp"
#include "motzhank/hankel.hpp"
#include "motzhank/motzkin.hpp"

#include <random>

using namespace motzhank;

namespace {

XPoly X(const char* s) { return parse_xpoly(s); }

std::vector<Rational> Q(std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<Rational> motzkin_numbers(int n) {
    std::vector<Rational> out;
    for (int i = 0; i < n; ++i) out.emplace_back(motzkin_poly(i).eval(Var::t, Integer(1)).constant());
    return out;
}

std::vector<MPoly> prefix(const HankelSpec& spec, int n) {
    auto d = det_sequence(spec, n - 1);
    return d;
}

WeightParams split_at(long t, long s) {
    WeightParams w = WeightParams::split();
    w.t = Integer(t);
    w.s = Integer(s);
    return w;
}

} // namespace

TEST_CASE("c-finite recurrences") {
    std::vector<Rational> f;
    for (int n = 0; n < 20; ++n) f.push_back(Rational(std::vector<long>{1, 1, 0, -1, -1, 0}[n % 6]));
    const auto r = find_c_finite(f, 4);
    REQUIRE(r);
    CHECK(r->order() == 2);
    CHECK(r->coeffs == Q({1, -1}));
    const auto ones = find_c_finite(Q(std::vector<long>(12, 1)), 3);
    REQUIRE(ones);
    CHECK(ones->coeffs == Q({1}));
    CHECK_FALSE(find_c_finite(motzkin_numbers(30), 8).has_value());
    CHECK_THROWS_AS(find_c_finite(Q({1, 2, 3}), 4), InsufficientTerms);
}

TEST_CASE("rational fits over Q") {
    std::vector<Rational> f;
    for (int n = 0; n < 20; ++n) f.push_back(Rational(std::vector<long>{1, 1, 0, -1, -1, 0}[n % 6]));
    const auto g = seq_to_ratfun(f, 4, 4);
    REQUIRE(g);
    CHECK(g->gf.num == Q({1}));
    CHECK(g->gf.den == Q({1, -1, 1}));
    const auto one = seq_to_ratfun(Q(std::vector<long>(15, 1)), 2, 2);
    REQUIRE(one);
    CHECK(one->gf.den == Q({1, -1}));
    CHECK_FALSE(seq_to_ratfun(motzkin_numbers(30), 8, 8).has_value());
    CHECK_THROWS_AS(seq_to_ratfun(Q({1, 1}), 3, 3), InsufficientTerms);
    CHECK(g->gf.to_ratfunx() == RatFunX(X("1"), X("1 - x + x^2")));
}

TEST_CASE("symbolic fits of determinant sequences") {
    const auto d1 = prefix({1, 0, WeightParams::uniform()}, 16);
    const auto f1 = symbolic_fit(d1, 2, 4, 4);
    REQUIRE(f1);
    CHECK(f1->gf == RatFunX(X("1"), X("1 - t*x + x^2")));
    const auto d2 = prefix({2, 0, WeightParams::uniform()}, 20);
    const auto f2 = symbolic_fit(d2, 3, 6, 4);
    REQUIRE(f2);
    CHECK(f2->gf == RatFunX(X("1 + x"), X("(1 - x)^2*(1 - (t^2 - 2)*x + x^2)")));
    const auto c1 = prefix({1, 1, WeightParams::uniform()}, 20);
    const auto f3 = symbolic_fit(c1, 3, 6, 4);
    REQUIRE(f3);
    CHECK(f3->gf == RatFunX(X("1 + x"), X("1 + (t^2 - 2)*x^2 + x^4")));
    const auto b1 = prefix({1, 0, WeightParams::split()}, 14);
    const auto f4 = symbolic_fit(b1, 2, 3, 3);
    REQUIRE(f4);
    CHECK(f4->gf == RatFunX(X("1 + (s - t)*x"), X("1 - t*x + x^2")));
}

TEST_CASE("round trip fitting of random rational functions") {
    std::mt19937 g(99);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<MPoly> num, den{MPoly(1)};
        for (int i = 0; i <= 2; ++i) num.push_back(MPoly(c(g)) + MPoly(c(g)) * MPoly::t());
        for (int i = 1; i <= 3; ++i) den.push_back(MPoly(c(g)) * MPoly::t() * MPoly::t() + MPoly(c(g)));
        XPoly nx(num), dx(den);
        if (nx.is_zero()) continue;
        const RatFunX f(nx, dx);
        const auto seq = f.series(20);
        const auto fit = symbolic_fit(seq, 4, 5, 4);
        REQUIRE(fit);
        CHECK(fit->gf == f);
    }
}

TEST_CASE("recurrence comparison") {
    const auto a = to_rationals(det_sequence({0, 1, split_at(1, 0)}, 20));
    const auto b = to_rationals(det_sequence({0, 1, split_at(2, 1)}, 20));
    CHECK(same_recurrence(a, b, 2) == RecurrenceVerdict::identical);
    const auto c = to_rationals(det_sequence({1, 0, split_at(1, 0)}, 20));
    const auto d = to_rationals(det_sequence({1, 0, split_at(2, 1)}, 20));
    CHECK(same_recurrence(c, d, 2) == RecurrenceVerdict::same_order);
    CHECK(same_recurrence(c, c, 2) == RecurrenceVerdict::identical);
    CHECK(same_recurrence(motzkin_numbers(30), c, 4) == RecurrenceVerdict::neither);
    CHECK(to_string(RecurrenceVerdict::same_order) == "same-order");
}
