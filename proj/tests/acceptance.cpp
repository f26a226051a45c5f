#include "motzhank/guess.hpp"
#include "motzhank/hankel.hpp"
#include "motzhank/motzkin.hpp"
#include "motzhank/oeis.hpp"
#include "motzhank/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

using namespace motzhank;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(std::string why) {
        pass = false;
        details.push_back(std::move(why));
    }
    void info(std::string what) { details.push_back(std::move(what)); }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
        std::ostringstream os;
        os << "runtime " << secs << " s exceeds " << limit_s << " s";
        o.fail(os.str());
    }
    if (!o.pass) ++failures;
    std::ostringstream t;
    t.precision(3);
    t << secs;
    std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << " " << name << " (" << t.str()
              << " s)\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    std::cout.flush();
}

std::string witness_line(const VerificationReport& r) {
    std::string s = r.to_text(false);
    while (!s.empty() && s.back() == '\n') s.pop_back();
    std::string out;
    for (char c : s) {
        out += c;
        if (c == '\n') out += "    ";
    }
    return out;
}

/// Every report must be verified, except those for which `allow` returns true.
void require_verified(Outcome& o, const std::vector<VerificationReport>& reps,
                      const std::function<bool(const VerificationReport&)>& allow = {}) {
    std::size_t v = 0;
    for (const auto& r : reps) {
        if (r.status == Status::verified) {
            ++v;
            continue;
        }
        if (allow && allow(r)) {
            o.info("allowed: " + witness_line(r));
            continue;
        }
        o.fail(witness_line(r));
    }
    o.info(std::to_string(v) + " of " + std::to_string(reps.size()) + " reports verified");
}

VerifyConfig config() {
    VerifyConfig c;
    c.k_max = 3;
    c.m_max = 3;
    c.n_max = 20;
    c.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return c;
}

std::vector<long> row(const MotzkinTable& tb, int n) {
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

Outcome triangles() {
    Outcome o;
    const char* sym[6][6] = {
        {"1"},
        {"t", "1"},
        {"1 + t^2", "2*t", "1"},
        {"t*(3 + t^2)", "2 + 3*t^2", "3*t", "1"},
        {"2 + 6*t^2 + t^4", "4*t*(2 + t^2)", "3*(1 + 2*t^2)", "4*t", "1"},
        {"t*(10 + 10*t^2 + t^4)", "5*(1 + 4*t^2 + t^4)", "5*t*(3 + 2*t^2)", "2*(2 + 5*t^2)", "5*t", "1"},
    };
    const auto tb = build_table(5, WeightParams::uniform());
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            if (tb.at(n, k) != parse_mpoly(sym[n][k]))
                o.fail("symbolic M(" + std::to_string(n) + "," + std::to_string(k) + ") = " + tb.at(n, k).str());
    const std::vector<std::vector<long>> cat = {{1},
                                                {2, 1},
                                                {5, 4, 1},
                                                {14, 14, 6, 1},
                                                {42, 48, 27, 8, 1},
                                                {132, 165, 110, 44, 10, 1},
                                                {429, 572, 429, 208, 65, 12, 1}};
    const std::vector<std::vector<long>> cat2 = {{1},
                                                 {1, 1},
                                                 {2, 3, 1},
                                                 {5, 9, 5, 1},
                                                 {14, 28, 20, 7, 1},
                                                 {42, 90, 75, 35, 9, 1},
                                                 {132, 297, 275, 154, 54, 11, 1}};
    const auto t2 = build_table(6, at(2));
    const auto t21 = build_table(6, at(2, 1));
    for (int n = 0; n <= 6; ++n) {
        if (row(t2, n) != cat[n]) o.fail("t=2 row " + std::to_string(n));
        if (row(t21, n) != cat2[n]) o.fail("(t,s)=(2,1) row " + std::to_string(n));
    }
    o.info("rows 0-5 symbolic, rows 0-6 at t=2 and (t,s)=(2,1) compared");
    return o;
}

Outcome group(const std::string& sel, const VerifyConfig& cfg,
              const std::function<bool(const VerificationReport&)>& allow = {}) {
    Outcome o;
    require_verified(o, run_claims(sel, cfg), allow);
    return o;
}

Outcome known_gfs(const VerifyConfig& cfg) {
    Outcome o;
    const auto reps = run_claims("known-gfs", cfg);
    std::vector<VerificationReport> graded;
    for (const auto& r : reps) {
        if (r.claim_id == "eq-40") {
            o.info("not graded: " + witness_line(r));
            continue;
        }
        graded.push_back(r);
    }
    require_verified(o, graded);
    return o;
}

Outcome reduced_degree(const VerifyConfig& cfg) {
    Outcome o;
    require_verified(o, run_claims("conj-1.3", cfg));
    const auto reading = run_claims("eq-29-reading", cfg);
    if (reading.size() != 1) o.fail("missing exponent reading report");
    for (const auto& r : reading) {
        o.info("exponent reading: binomial " + r.witness_of("binomial_reading") + ", reduced " +
               r.witness_of("reduced_reading") + ", differ at m = " + r.witness_of("orders_where_readings_differ"));
        if (r.status != Status::verified) o.fail(witness_line(r));
    }
    return o;
}

Outcome second_shift(const VerifyConfig& cfg) {
    Outcome o = group("conj-1.4", cfg, [](const VerificationReport& r) {
        const auto k = std::find_if(r.params.begin(), r.params.end(), [](auto& p) { return p.first == "k"; });
        return r.status == Status::inconclusive && k != r.params.end() &&
               std::get<long>(k->second) == 0 && r.witness_of("reason").find("not applicable") == 0;
    });
    const auto d = det_sequence({2, 1, WeightParams::uniform()}, 2);
    const MPoly want = parse_mpoly("(t^2 - 2)^2");
    if (-d[2] != want) o.fail("-d(2) for m=2, k=1 is " + (-d[2]).str());
    else o.info("-d(2) for m=2, k=1 equals (t^2 - 2)^2");
    return o;
}

Outcome special_values(const VerifyConfig& cfg) {
    Outcome o;
    std::vector<VerificationReport> reps = run_claims("t1", cfg);
    const auto t2 = run_claims("t2", cfg);
    for (const auto& r : t2)
        if (r.claim_id != "shifted-catalan") reps.push_back(r);
    bool open = false;
    require_verified(o, reps, [&](const VerificationReport& r) {
        const bool ok = r.claim_id == "eq-22" && r.status == Status::inconclusive &&
                        !r.witness_of("open_question").empty();
        open = open || ok;
        return ok;
    });
    if (!open) o.fail("no open-question report for the odd order at m = 0");
    return o;
}

Outcome catalan(const VerifyConfig& cfg) {
    Outcome o;
    std::vector<VerificationReport> reps;
    for (const auto& r : run_claims("t2", cfg))
        if (r.claim_id == "shifted-catalan") reps.push_back(r);
    if (reps.size() != 5) o.fail("expected 5 orders, got " + std::to_string(reps.size()));
    require_verified(o, reps);
    return o;
}

Outcome bivariate(const VerifyConfig& cfg) {
    Outcome o;
    require_verified(o, run_claims("eq-37", cfg));
    const auto rec = run_claims("conj-2.2", cfg);
    std::map<std::string, int> verdicts;
    std::size_t compared = 0;
    for (const auto& r : rec) {
        if (r.claim_id != "conj-2.2") continue;
        ++compared;
        ++verdicts[r.witness_of("verdict")];
        if (r.status == Status::refuted) o.fail(witness_line(r));
    }
    std::string summary;
    for (const auto& [v, n] : verdicts) summary += " " + v + "=" + std::to_string(n);
    o.info("recurrence comparisons: " + std::to_string(compared) + summary);
    if (compared < 45) o.fail("fewer than 3 specializations for some k + m <= 4");
    require_verified(o, run_claims("eq-43", cfg));
    return o;
}

SquareMatrix random_matrix(std::mt19937& g, int n) {
    std::uniform_int_distribution<long> c(-3, 3);
    std::uniform_int_distribution<int> kind(0, 4);
    SquareMatrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            switch (kind(g)) {
            case 0: A(i, j) = MPoly(); break;
            case 1: A(i, j) = MPoly(c(g)); break;
            case 2: A(i, j) = MPoly(c(g)) * MPoly::t() + MPoly(c(g)); break;
            case 3: A(i, j) = MPoly(c(g)) * MPoly::s() + MPoly(c(g)) * MPoly::t() * MPoly::t(); break;
            default: A(i, j) = MPoly(c(g)) * MPoly::t() * MPoly::s() + MPoly(c(g)); break;
            }
        }
    return A;
}

MPoly random_poly(std::mt19937& g) {
    std::uniform_int_distribution<long> c(-50, 50);
    std::map<MPoly::Exponents, Integer> terms;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) terms[{i, j}] = Integer(c(g));
    return MPoly::from_terms(terms);
}

Outcome engines() {
    Outcome o;
    std::mt19937 g(2021);
    int fallbacks = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const SquareMatrix A = random_matrix(g, 1 + trial % 5);
        const MPoly ref = det_cofactor(A);
        if (det_bareiss<MPoly>(A) != ref) o.fail("bareiss differs on matrix " + std::to_string(trial));
        const auto c = det_condensation(A);
        if (const auto* p = std::get_if<MPoly>(&c)) {
            if (*p != ref) o.fail("condensation differs on matrix " + std::to_string(trial));
        } else {
            ++fallbacks;
        }
    }
    o.info("200 matrices, " + std::to_string(fallbacks) + " condensation fallbacks");
    int axioms = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const MPoly a = random_poly(g), b = random_poly(g), c = random_poly(g);
        const bool ok = a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) &&
                        a * (b + c) == a * b + a * c && (b.is_zero() || exact_div(a * b, b) == a);
        if (!ok) o.fail("ring axioms fail at trial " + std::to_string(trial));
        ++axioms;
    }
    o.info(std::to_string(axioms) + " ring axiom trials");
    std::uniform_int_distribution<long> c(-3, 3);
    int fits = 0;
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<MPoly> num, den{MPoly(1)};
        for (int i = 0; i <= 2; ++i) num.push_back(MPoly(c(g)) + MPoly(c(g)) * MPoly::t());
        for (int i = 1; i <= 3; ++i) den.push_back(MPoly(c(g)) * MPoly::t() * MPoly::t() + MPoly(c(g)));
        const XPoly nx(num), dx(den);
        if (nx.is_zero()) continue;
        const RatFunX f(nx, dx);
        const auto fit = symbolic_fit(f.series(20), 4, 5, 4);
        if (!fit || !(fit->gf == f)) o.fail("round trip fails for " + f.str());
        ++fits;
    }
    o.info(std::to_string(fits) + " round-trip fits");
    return o;
}

Outcome oeis() {
    Outcome o;
    OeisConfig c = OeisConfig::from_env();
    c.offline = true;
    c.cache_dir.clear();
    const auto reps = oeis_cross_checks(OeisClient(c), 25);
    if (reps.size() != 8) o.fail("expected 8 cross-checks, got " + std::to_string(reps.size()));
    require_verified(o, reps);
    return o;
}

} // namespace

int main() {
    const VerifyConfig cfg = config();
    criterion(1, "triangle fidelity", 1, triangles);
    criterion(2, "closed forms", 30, [&] { return group("closed-forms", cfg); });
    criterion(3, "known determinants", 0, [&] { return group("identities", cfg); });
    criterion(4, "generating function recovery", 300, [&] { return known_gfs(cfg); });
    criterion(5, "binomial-exponent denominators", 0, [&] { return group("thm-1.1", cfg); });
    criterion(6, "reduced-exponent denominators", 0, [&] { return reduced_degree(cfg); });
    criterion(7, "second shift determinants", 0, [&] { return second_shift(cfg); });
    criterion(8, "structure at t = 1 and t = 2", 0, [&] { return special_values(cfg); });
    criterion(9, "shifted Catalan products", 0, [&] { return catalan(cfg); });
    criterion(10, "bivariate weighting", 0, [&] { return bivariate(cfg); });
    criterion(11, "engine cross-validation", 120, engines);
    criterion(12, "OEIS offline fixtures", 0, oeis);
    std::cout << (12 - failures) << " of 12 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
