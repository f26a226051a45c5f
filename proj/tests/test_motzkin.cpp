#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motzhank/errors.hpp"
#include "motzhank/motzkin.hpp"

#include <thread>

using namespace motzhank;

namespace {

MPoly P(const char* s) { return parse_mpoly(s); }

std::vector<long> row_values(const MotzkinTable& tb, int n) {
    std::vector<long> out;
    for (int k = 0; k <= n; ++k) out.push_back(tb.at(n, k).constant().get_si());
    return out;
}

WeightParams at(long t, std::optional<long> s = std::nullopt) {
    WeightParams w = s ? WeightParams::split() : WeightParams::uniform();
    w.t = Integer(t);
    if (s) w.s = Integer(*s);
    return w;
}

} // namespace

TEST_CASE("symbolic table matches the displayed rows") {
    const MotzkinTable tb = build_table(5, WeightParams::uniform());
    const char* rows[6][6] = {
        {"1"},
        {"t", "1"},
        {"1 + t^2", "2*t", "1"},
        {"t*(3 + t^2)", "2 + 3*t^2", "3*t", "1"},
        {"2 + 6*t^2 + t^4", "4*t*(2 + t^2)", "3*(1 + 2*t^2)", "4*t", "1"},
        {"t*(10 + 10*t^2 + t^4)", "5*(1 + 4*t^2 + t^4)", "5*t*(3 + 2*t^2)", "2*(2 + 5*t^2)", "5*t", "1"},
    };
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) CHECK(tb.at(n, k) == P(rows[n][k]));
    CHECK(tb.at(4, 1) == P("8*t + 4*t^3"));
    CHECK(tb.at(2, 5).is_zero());
    CHECK_THROWS_AS(tb.at(6, 0), TableTooSmall);
}

TEST_CASE("specialized triangles") {
    const MotzkinTable c2 = build_table(6, at(2));
    CHECK(row_values(c2, 4) == std::vector<long>{42, 48, 27, 8, 1});
    CHECK(row_values(c2, 6) == std::vector<long>{429, 572, 429, 208, 65, 12, 1});
    const MotzkinTable c21 = build_table(6, at(2, 1));
    CHECK(row_values(c21, 4) == std::vector<long>{14, 28, 20, 7, 1});
    CHECK(row_values(c21, 6) == std::vector<long>{132, 297, 275, 154, 54, 11, 1});
    const MotzkinTable m1 = build_table(8, at(1));
    std::vector<long> motzkin;
    for (int n = 0; n <= 8; ++n) motzkin.push_back(m1.at(n, 0).constant().get_si());
    CHECK(motzkin == std::vector<long>{1, 1, 2, 4, 9, 21, 51, 127, 323});
    const MotzkinTable m0 = build_table(7, at(0));
    std::vector<long> aerated;
    for (int n = 0; n <= 7; ++n) aerated.push_back(m0.at(n, 0).constant().get_si());
    CHECK(aerated == std::vector<long>{1, 0, 1, 0, 2, 0, 5, 0});
}

TEST_CASE("split weighting reduces to uniform at s = t") {
    const MotzkinTable sp = build_table(8, WeightParams::split());
    const MotzkinTable un = build_table(8, WeightParams::uniform());
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(sp.at(n, k).compose(MPoly::t(), MPoly::t()) == un.at(n, k));
    CHECK(sp.at(1, 0) == P("s"));
    CHECK(sp.at(2, 0) == P("1 + s^2"));
}

TEST_CASE("closed forms") {
    CHECK(motzkin_poly(4) == P("2 + 6*t^2 + t^4"));
    CHECK(motzkin_poly(0) == MPoly(1));
    CHECK(motzkin_poly(5).eval(Var::t, Integer(1)) == MPoly(21));
    CHECK(ballot(4, 0) == 2);
    CHECK(ballot(4, 2) == 3);
    CHECK(ballot(3, 0) == 0);
    CHECK(column_poly(4, 2) == P("3 + 6*t^2"));
    CHECK(column_poly(5, 1) == P("5*(1 + 4*t^2 + t^4)"));
    CHECK(column_poly(3, 3) == MPoly(1));
    CHECK(catalan(5) == 42);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    const auto tb = shared_table(30, WeightParams::uniform());
    for (int n = 0; n <= 30; ++n) {
        CHECK(tb->at(n, 0) == motzkin_poly(n));
        for (int k = 1; k <= n; ++k) CHECK(tb->at(n, k) == column_poly(n, k));
    }
}

TEST_CASE("shared tables grow and are safe to query concurrently") {
    const WeightParams w = at(3);
    const auto small = shared_table(5, w);
    CHECK(small->rows() >= 5);
    std::vector<std::shared_ptr<const MotzkinTable>> got(4);
    std::vector<std::thread> th;
    for (int i = 0; i < 4; ++i) th.emplace_back([&, i] { got[i] = shared_table(20 + i, w); });
    for (auto& t : th) t.join();
    for (int i = 0; i < 4; ++i) {
        CHECK(got[i]->rows() >= 20 + i);
        CHECK(got[i]->at(5, 0) == small->at(5, 0));
    }
    CHECK(WeightParams::split().key() != WeightParams::uniform().key());
    CHECK(at(2, 1).key() == "split_ts,t=2,s=1");
}
