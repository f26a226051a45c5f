#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motzhank/errors.hpp"
#include "motzhank/interpolate.hpp"
#include "motzhank/mpoly.hpp"
#include "motzhank/quad.hpp"
#include "motzhank/ratfun.hpp"
#include "motzhank/xpoly.hpp"

#include <random>

using namespace motzhank;

namespace {

MPoly P(const char* s) { return parse_mpoly(s); }
XPoly X(const char* s) { return parse_xpoly(s); }

MPoly random_mpoly(std::mt19937& g, int deg, bool with_s, int bits = 40) {
    std::uniform_int_distribution<long> c(-(1L << (bits / 2)), 1L << (bits / 2));
    std::uniform_int_distribution<int> keep(0, 2);
    std::map<MPoly::Exponents, Integer> terms;
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; j <= (with_s ? deg - i : 0); ++j)
            if (keep(g)) terms[{i, j}] = Integer(c(g)) * Integer(c(g));
    return MPoly::from_terms(terms);
}

ZPoly random_zpoly(std::mt19937& g, int deg, int bits) {
    std::vector<Integer> c(deg + 1);
    gmp_randclass r(gmp_randinit_default);
    r.seed(g());
    for (auto& x : c) {
        x = r.get_z_bits(bits);
        if (g() & 1) x = -x;
    }
    return ZPoly(c);
}

} // namespace

TEST_CASE("multiplication") {
    CHECK(P("(t+1)*(t-1)") == P("t^2 - 1"));
    CHECK(X("(1-x)*(1+x+x^2)") == X("1 - x^3"));
    CHECK((QuadElem::alpha() * QuadElem::alpha()) == QuadElem(MPoly(-1), MPoly::t()));
}

TEST_CASE("exact division") {
    CHECK(exact_div(P("t^2 - 1"), P("t - 1")) == P("t + 1"));
    CHECK(exact_div(X("1 - x^3"), X("1 - x")) == X("1 + x + x^2"));
    CHECK_THROWS_AS(exact_div(P("t^2 + 1"), P("t - 1")), NotDivisible);
    CHECK_THROWS_AS(exact_div(P("t"), MPoly()), DivisionByZero);
    CHECK(exact_div(P("(t - s)*(t^2 + s*t + 3)"), P("t^2 + s*t + 3")) == P("t - s"));
    CHECK_FALSE(try_divide(P("t*s + 1"), P("s")).has_value());
}

TEST_CASE("gcd") {
    CHECK(gcd(P("t^2 - 1"), P("t^2 - 2*t + 1")) == P("t - 1"));
    CHECK(gcd(MPoly(), P("2*t")) == P("2*t"));
    const XPoly g = gcd(X("1 - x^3"), X("(1 - x)^2"));
    CHECK((g == X("1 - x") || g == X("x - 1")));
    CHECK(gcd(P("(t + s)*(t - 2)"), P("(t + s)*(s + 3)")) == P("t + s"));
    CHECK(gcd(P("6*t + 4"), P("9*t + 6")) == P("3*t + 2"));
}

TEST_CASE("derivative") {
    CHECK(P("t^4 - 3*t^2 + 1").derivative(Var::t) == P("4*t^3 - 6*t"));
    CHECK(MPoly(5).derivative(Var::t).is_zero());
    CHECK(P("t^2 - 2").derivative(Var::t) == P("2*t"));
    CHECK(P("t*s^2").derivative(Var::s) == P("2*t*s"));
}

TEST_CASE("evaluation") {
    const MPoly m5 = P("t*(10 + 10*t^2 + t^4)");
    CHECK(m5.eval(Var::t, Integer(1)) == MPoly(21));
    CHECK(P("2 + 6*t^2 + t^4").eval(Var::t, Integer(2)) == MPoly(42));
    CHECK(m5.eval(Var::s, Integer(7)) == m5);
    CHECK(P("t + s").eval(Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
    CHECK_THROWS_AS(P("t").eval(Var::t, Rational(1, 2)), NonIntegral);
    CHECK(P("4*t^2 + s").eval(Var::t, Rational(1, 2)) == P("1 + s"));
    CHECK(P("t*s").compose(P("t + s"), P("s")) == P("t*s + s^2"));
}

TEST_CASE("interpolation") {
    auto I = [](std::vector<std::pair<long, long>> pts) {
        std::vector<std::pair<Rational, Rational>> q;
        for (auto [x, y] : pts) q.emplace_back(Rational(x), Rational(y));
        return interpolate(q);
    };
    CHECK(I({{0, 1}, {1, 2}, {2, 5}}).to_zpoly() == ZPoly(std::vector<Integer>{1, 0, 1}));
    CHECK(I({{0, 7}}).to_zpoly() == ZPoly(7L));
    CHECK(I({{0, 0}, {1, 1}, {2, 2}}).to_zpoly() == ZPoly(std::vector<Integer>{0, 1}));
    CHECK_THROWS_AS(I({{1, 1}, {1, 2}}), DuplicateNode);
    CHECK_FALSE(I({{0, 0}, {2, 1}}).integral);
}

TEST_CASE("quadratic extension") {
    const QuadElem a2 = quad_pow(2);
    CHECK(a2 == QuadElem(MPoly(-1), MPoly::t()));
    CHECK(a2.trace() == P("t^2 - 2"));
    const QuadElem a3 = quad_pow(3);
    CHECK(a3 == QuadElem(-MPoly::t(), P("t^2 - 1")));
    CHECK(a3.trace() == P("t^3 - 3*t"));
    CHECK(quad_pow(0).trace() == MPoly(2));
    CHECK((QuadElem::alpha() * QuadElem::beta()) == QuadElem(MPoly(1)));
    CHECK(QuadElem::alpha().norm() == MPoly(1));
    CHECK(exact_div(quad_pow(5), quad_pow(2)) == quad_pow(3));
}

TEST_CASE("canonical rendering and parsing") {
    CHECK(P("t^4 - 3*t^2 + 1").str() == "1 - 3*t^2 + t^4");
    CHECK(MPoly().str() == "0");
    CHECK(P("s*t - t^2").str() == "-t^2 + t*s");
    CHECK(to_string(X("1 - (t^2 - 2)*x + x^2")) == "1 + (2 - t^2)*x + x^2");
    CHECK(to_string(X("-x^3")) == "-x^3");
    CHECK_THROWS_AS(parse_mpoly("t +"), ParseError);
    CHECK_THROWS_AS(parse_mpoly("q"), ParseError);
    CHECK_THROWS_AS(parse_xpoly("(1 + x"), ParseError);
    for (const char* s : {"1 - 3*t^2 + t^4", "-t^2 + t*s", "3 + 2*s^3 - t*s^2"})
        CHECK(parse_mpoly(P(s).str()) == P(s));
}

TEST_CASE("rational functions") {
    const RatFunX f(X("1 - x^2"), X("(1 - x)*(1 - t*x + x^2)"));
    CHECK(f.num() == X("1 + x"));
    CHECK(f.den() == X("1 - t*x + x^2"));
    CHECK(RatFunX(X("-1"), X("-1 + x")) == RatFunX(X("1"), X("1 - x")));
    const auto s = RatFunX(X("1"), X("1 - t*x + x^2")).series(4);
    CHECK(s[3] == P("t^3 - 2*t"));
    CHECK_THROWS_AS(RatFunX(X("1"), XPoly()), DivisionByZero);
    CHECK_THROWS_AS(RatFunX(X("1"), X("2 + x")), Error);
}

TEST_CASE("ring axioms on random bivariate polynomials") {
    std::mt19937 g(7);
    for (int trial = 0; trial < 60; ++trial) {
        const MPoly a = random_mpoly(g, 4, true), b = random_mpoly(g, 3, true),
                    c = random_mpoly(g, 5, trial % 2 == 0);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MPoly());
        if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
        CHECK((a * b).eval(Rational(2), Rational(-3)) ==
              a.eval(Rational(2), Rational(-3)) * b.eval(Rational(2), Rational(-3)));
    }
}

TEST_CASE("fast univariate multiplication agrees with schoolbook") {
    std::mt19937 g(11);
    for (int trial = 0; trial < 20; ++trial) {
        const ZPoly a = random_zpoly(g, 30 + trial * 7, 50 + trial * 20);
        const ZPoly b = random_zpoly(g, 20 + trial * 5, 10 + trial * 30);
        const ZPoly p = a * b;
        std::vector<Integer> ref(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) ref[i + j] += a[i] * b[j];
        CHECK(p == ZPoly(ref));
        CHECK(exact_div(p, b) == a);
        CHECK_FALSE(try_divide(p + ZPoly(1L), b).has_value());
    }
}

TEST_CASE("gcd of products recovers the common factor") {
    std::mt19937 g(5);
    for (int trial = 0; trial < 15; ++trial) {
        MPoly common = random_mpoly(g, 2, true, 8);
        if (common.is_constant()) continue;
        common = exact_div(common, MPoly(int_content(common)));
        if (lead_sign(common) < 0) common = -common;
        const MPoly a = common * random_mpoly(g, 2, true, 8);
        const MPoly b = common * random_mpoly(g, 2, true, 8);
        if (a.is_zero() || b.is_zero()) continue;
        const MPoly d = gcd(a, b);
        CHECK(try_divide(d, common).has_value());
        CHECK(try_divide(a, d).has_value());
        CHECK(try_divide(b, d).has_value());
    }
}
