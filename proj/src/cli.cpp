#include "motzhank/cli.hpp"

#include "motzhank/errors.hpp"
#include "motzhank/guess.hpp"
#include "motzhank/hankel.hpp"
#include "motzhank/oeis.hpp"
#include "motzhank/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace motzhank {

namespace {

using nlohmann::ordered_json;

struct WeightArgs {
    std::optional<long> t;
    std::optional<long> s;
    bool split = false;

    void add_to(CLI::App* app) {
        app->add_option("--t", t, "Specialize t to this integer");
        app->add_option("--s", s, "Ground-level weight s (implies --split)");
        app->add_flag("--split", split, "Weight s for level steps at height 0");
    }
    WeightParams params() const {
        WeightParams w = split || s ? WeightParams::split() : WeightParams::uniform();
        if (t) w.t = Integer(*t);
        if (s) w.s = Integer(*s);
        return w;
    }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text)) throw std::ios_base::failure("cannot write " + path);
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// triangle -----------------------------------------------------------------

struct TriangleCmd {
    int rows = 5;
    WeightArgs w;
    std::string format = "csv";
    std::string out_path;

    int run(std::ostream& out) const {
        const auto table = shared_table(rows, w.params());
        std::ostringstream os;
        if (format == "json") {
            ordered_json j = ordered_json::array();
            for (int n = 0; n <= rows; ++n) {
                ordered_json row = ordered_json::array();
                for (int k = 0; k <= n; ++k) row.push_back(table->at(n, k).str());
                j.push_back(row);
            }
            os << j.dump(2) << '\n';
        } else {
            for (int n = 0; n <= rows; ++n) {
                for (int k = 0; k <= n; ++k) os << (k ? "," : "") << table->at(n, k).str();
                os << '\n';
            }
        }
        emit(os.str(), out_path, out);
        return exit_ok;
    }
};

// det ----------------------------------------------------------------------

struct DetCmd {
    int m = 0;
    int k = 0;
    int n = 1;
    WeightArgs w;
    std::string method = "bareiss";
    std::string format = "text";
    bool sequence = false;

    MPoly single(int order) const {
        const HankelSpec spec{m, k, w.params()};
        if (method == "minors") return det_sequence(spec, order)[static_cast<std::size_t>(order)];
        const SquareMatrix A = hankel_matrix(spec, order);
        if (method == "condensation") {
            auto r = det_condensation(A);
            if (auto* p = std::get_if<MPoly>(&r)) return *p;
            return det_bareiss<MPoly>(A);
        }
        if (method == "cofactor") return det_cofactor(A);
        return det_bareiss<MPoly>(A);
    }

    int run(std::ostream& out) const {
        std::vector<MPoly> values;
        if (sequence) {
            for (int i = 0; i <= n; ++i) values.push_back(single(i));
        } else {
            values.push_back(single(n));
        }
        if (format == "json") {
            ordered_json j;
            j["m"] = m;
            j["k"] = k;
            j["weights"] = w.params().key();
            if (sequence) {
                j["n_max"] = n;
                ordered_json a = ordered_json::array();
                for (const auto& v : values) a.push_back(v.str());
                j["values"] = a;
            } else {
                j["n"] = n;
                j["value"] = values[0].str();
            }
            out << j.dump(2) << '\n';
        } else {
            for (const auto& v : values) out << v.str() << '\n';
        }
        return exit_ok;
    }
};

// guess --------------------------------------------------------------------

struct GuessCmd {
    std::string input = "-";
    std::optional<int> num_deg, den_deg, t_deg;
    int guard = kDefaultGuard;

    int run(std::ostream& out) const {
        ordered_json in;
        try {
            in = ordered_json::parse(read_input(input));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("guess input: ") + e.what());
        }
        const auto& terms = in.is_array() ? in : in.at("terms");
        std::vector<MPoly> seq;
        for (const auto& t : terms) {
            if (t.is_number_integer()) seq.emplace_back(Integer(t.get<long>()));
            else seq.push_back(parse_mpoly(t.get<std::string>()));
        }
        auto bound = [&](const std::optional<int>& flag, const char* key, int dflt) {
            if (flag) return *flag;
            if (in.is_object() && in.contains(key)) return in.at(key).get<int>();
            return dflt;
        };
        const int total = static_cast<int>(seq.size()) - 2 - guard;
        const int P = bound(num_deg, "num_deg_max", std::max(0, total / 2));
        const int Q = bound(den_deg, "den_deg_max", std::max(0, total - P));
        const int T = bound(t_deg, "t_deg_max", 8);
        ordered_json res;
        res["terms"] = seq.size();
        auto fit = symbolic_fit(seq, P, Q, T, guard);
        if (!fit) {
            res["gf"] = nullptr;
            out << res.dump(2) << '\n';
            return exit_refuted;
        }
        res["gf"] = fit->gf.str();
        res["numerator"] = to_string(fit->gf.num());
        res["denominator"] = to_string(fit->gf.den());
        res["verified_terms"] = fit->verified_terms;
        out << res.dump(2) << '\n';
        return exit_ok;
    }
};

// verify -------------------------------------------------------------------

struct VerifyCmd {
    std::string claim = "all";
    VerifyConfig cfg;
    std::string format = "text";
    std::string out_path;
    bool list = false;

    int run(std::ostream& out, std::ostream& err) const {
        if (list) {
            for (const auto& n : claim_names(cfg)) out << n << '\n';
            return exit_ok;
        }
        std::vector<VerificationReport> reports;
        try {
            reports = run_claims(claim, cfg);
        } catch (const Error& e) {
            err << e.what() << "\nknown claims:";
            for (const auto& n : claim_names(cfg)) err << ' ' << n;
            err << '\n';
            return exit_usage;
        }
        const std::string text =
            format == "json" ? render_json(reports, cfg.timing) + "\n" : render_text(reports, cfg.timing);
        emit(text, out_path, out);
        for (const auto& r : reports)
            if (r.status == Status::refuted) return exit_refuted;
        return exit_ok;
    }
};

// oeis-check ---------------------------------------------------------------

struct OeisCmd {
    bool offline = false;
    std::string cache_dir;
    std::string base_url;
    int rows = 30;
    std::string format = "text";
    std::string out_path;

    int run(std::ostream& out) const {
        OeisConfig c = OeisConfig::from_env();
        c.offline = offline;
        if (!cache_dir.empty()) c.cache_dir = cache_dir;
        if (!base_url.empty()) c.base_url = base_url;
        const OeisClient client(c);
        const auto reports = oeis_cross_checks(client, rows);
        const std::string text =
            format == "json" ? render_json(reports, false) + "\n" : render_text(reports, false);
        emit(text, out_path, out);
        for (const auto& r : reports)
            if (r.status == Status::refuted) return exit_refuted;
        return exit_ok;
    }
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hankel determinants of weighted Motzkin paths"};
    app.name("motzhank");
    app.require_subcommand(1);

    TriangleCmd tri;
    auto* c_tri = app.add_subcommand("triangle", "Print rows of the weighted Motzkin triangle");
    c_tri->add_option("--rows", tri.rows, "Last row index")->check(CLI::NonNegativeNumber);
    tri.w.add_to(c_tri);
    c_tri->add_option("--format", tri.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    c_tri->add_option("--out", tri.out_path, "Output file (default stdout)");

    DetCmd det;
    auto* c_det = app.add_subcommand("det", "Hankel determinant d_m^(k)(n)");
    c_det->add_option("--m", det.m, "Row shift m")->check(CLI::NonNegativeNumber);
    c_det->add_option("--k", det.k, "Column k")->check(CLI::NonNegativeNumber);
    c_det->add_option("--n", det.n, "Matrix order n")->check(CLI::NonNegativeNumber);
    det.w.add_to(c_det);
    c_det->add_option("--method", det.method, "bareiss, condensation, cofactor or minors")
        ->check(CLI::IsMember({"bareiss", "condensation", "cofactor", "minors"}));
    c_det->add_flag("--sequence", det.sequence, "Print d(0..n)");
    c_det->add_option("--format", det.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    GuessCmd guess;
    auto* c_guess = app.add_subcommand("guess", "Fit a rational generating function to sequence terms");
    c_guess->add_option("--input", guess.input,
                        "JSON file with {\"terms\": [...]} or an array; '-' reads stdin");
    c_guess->add_option("--num-deg", guess.num_deg, "Numerator degree bound")->check(CLI::NonNegativeNumber);
    c_guess->add_option("--den-deg", guess.den_deg, "Denominator degree bound")->check(CLI::NonNegativeNumber);
    c_guess->add_option("--t-deg", guess.t_deg, "Coefficient degree bound in t and s")
        ->check(CLI::NonNegativeNumber);
    c_guess->add_option("--guard", guess.guard, "Surplus terms checked")->check(CLI::NonNegativeNumber);

    VerifyCmd ver;
    auto* c_ver = app.add_subcommand("verify", "Check identities and conjectures against determinant data");
    c_ver->add_option("claim", ver.claim, "'all', a claim id or a group (see --list)");
    c_ver->add_option("--k-max", ver.cfg.k_max, "Largest column k")->check(CLI::NonNegativeNumber);
    c_ver->add_option("--m-max", ver.cfg.m_max, "Largest shift m")->check(CLI::PositiveNumber);
    c_ver->add_option("--n-max", ver.cfg.n_max, "Largest order n for identities")->check(CLI::Range(2, 1000));
    c_ver->add_option("--jobs", ver.cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    c_ver->add_option("--tail", ver.cfg.tail, "Trailing zero checks")->check(CLI::PositiveNumber);
    c_ver->add_option("--guard", ver.cfg.guard, "Surplus terms for guessing")->check(CLI::NonNegativeNumber);
    c_ver->add_option("--format", ver.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c_ver->add_option("--out", ver.out_path, "Output file (default stdout)");
    c_ver->add_flag("--timing", ver.cfg.timing, "Record elapsed time per report");
    c_ver->add_flag("--list", ver.list, "List claim ids and groups");

    OeisCmd oeis;
    auto* c_oeis = app.add_subcommand("oeis-check", "Cross-check specializations against OEIS b-files");
    c_oeis->add_flag("--offline", oeis.offline, "Use bundled fixtures only");
    c_oeis->add_option("--cache-dir", oeis.cache_dir, "Cache directory (default OEIS_CACHE_DIR)");
    c_oeis->add_option("--base-url", oeis.base_url, "Server (default OEIS_BASE_URL or https://oeis.org)");
    c_oeis->add_option("--rows", oeis.rows, "Rows or terms compared")->check(CLI::PositiveNumber);
    c_oeis->add_option("--format", oeis.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c_oeis->add_option("--out", oeis.out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (c_tri->parsed()) return tri.run(out);
        if (c_det->parsed()) return det.run(out);
        if (c_guess->parsed()) return guess.run(out);
        if (c_ver->parsed()) return ver.run(out, err);
        if (c_oeis->parsed()) return oeis.run(out);
    } catch (const NetworkUnavailable& e) {
        err << "error: " << e.what() << '\n';
        return exit_environment;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return exit_environment;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_environment;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

} // namespace motzhank
