#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motzhank/errors.hpp"
#include "motzhank/ratfun.hpp"
#include "motzhank/verify.hpp"

using namespace motzhank;

namespace {

XPoly X(const char* s) { return parse_xpoly(s); }

std::vector<MPoly> dets(int m, int k, std::size_t count) {
    return det_sequence({m, k, WeightParams::uniform()}, static_cast<int>(count) - 1);
}

} // namespace

TEST_CASE("numerator check") {
    const auto d1 = dets(1, 0, 20);
    const auto n1 = check_numerator(d1, X("1 - t*x + x^2"), 2, 10);
    REQUIRE(std::holds_alternative<XPoly>(n1));
    CHECK(std::get<XPoly>(n1) == X("1"));

    const auto d2 = dets(2, 0, 24);
    const auto n2 = check_numerator(d2, X("(1 - x)^2*(1 - (t^2 - 2)*x + x^2)"), 3, 10);
    REQUIRE(std::holds_alternative<XPoly>(n2));
    CHECK(std::get<XPoly>(n2) == X("1 + x"));

    const auto bad = check_numerator(d2, X("(1 - x)^3"), 3, 10);
    REQUIRE(std::holds_alternative<Residual>(bad));
    CHECK(std::get<Residual>(bad).index == 4);
    CHECK_FALSE(std::get<Residual>(bad).value.is_zero());

    CHECK_THROWS_AS(check_numerator(d1, X("1 - t*x + x^2"), 12, 10), InsufficientTerms);
}

TEST_CASE("returned numerators reproduce the sequence") {
    for (int m = 1; m <= 3; ++m) {
        const XPoly den = denominator({1, m, ExponentRule::reduced});
        const int bound = 11;
        const auto seq = dets(m, 1, static_cast<std::size_t>(bound + den.degree() + 11));
        const auto got = check_numerator(seq, den, bound, 10);
        REQUIRE(std::holds_alternative<XPoly>(got));
        CHECK(RatFunX(std::get<XPoly>(got), den).series(seq.size()) == seq);
    }
}

TEST_CASE("palindromes") {
    CHECK(palindrome_check(X("1 + 7*x + 7*x^2 + x^3")).is_reciprocal);
    CHECK(palindrome_check(X("1 + 7*x + 7*x^2 + x^3")).sign == 1);
    CHECK(palindrome_check(X("1 - x")).sign == -1);
    CHECK_FALSE(palindrome_check(X("1 + 2*x")).is_reciprocal);
    CHECK_FALSE(palindrome_check(X("t*x")).is_reciprocal);
    CHECK(palindrome_check(X("t*x"), 2).is_reciprocal);
    CHECK(palindrome_check(X("x + x^2"), 3).is_reciprocal);
    CHECK_FALSE(palindrome_check(X("x + x^2"), 4).is_reciprocal);
}

TEST_CASE("sign law at t = 2") {
    CHECK(epsilon(0, 5) == 1);
    CHECK(epsilon(3, 1) == -1);
    CHECK(epsilon(3, 2) == 1);
    CHECK(epsilon(1, 2) == -1);
    CHECK(epsilon(1, 4) == 1);
    CHECK(epsilon(2, 1) == -1);
    CHECK(epsilon(2, 3) == 1);
    CHECK(epsilon(5, 2) == epsilon(1, 2));
}

TEST_CASE("claim selection") {
    VerifyConfig cfg;
    const auto one = run_claims("eq-38", cfg);
    REQUIRE(one.size() == 1);
    CHECK(one[0].status == Status::verified);
    CHECK_THROWS_AS(run_claims("no-such-claim", cfg), Error);
    const auto names = claim_names(cfg);
    CHECK(std::find(names.begin(), names.end(), "known-gfs") != names.end());
    CHECK(std::find(names.begin(), names.end(), "thm-1.1") != names.end());
}

TEST_CASE("odd orders at t = 1 without the prefactor stay open") {
    const auto reps = run_claims("eq-22", VerifyConfig{});
    bool saw_open = false;
    for (const auto& r : reps) {
        CHECK(r.status != Status::refuted);
        if (r.status == Status::inconclusive) {
            saw_open = true;
            CHECK_FALSE(r.witness_of("open_question").empty());
        }
    }
    CHECK(saw_open);
}

TEST_CASE("report order does not depend on the thread count") {
    VerifyConfig a, b;
    b.jobs = 3;
    const auto ra = run_claims("conj-1.4", a);
    const auto rb = run_claims("conj-1.4", b);
    CHECK(render_json(ra, false) == render_json(rb, false));
    CHECK(std::is_sorted(ra.begin(), ra.end(), report_less));
}
