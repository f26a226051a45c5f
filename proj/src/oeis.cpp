#include "motzhank/oeis.hpp"

#include "motzhank/errors.hpp"
#include "motzhank/motzkin.hpp"

#include <httplib.h>

#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace motzhank {

namespace fs = std::filesystem;

bool valid_oeis_id(std::string_view id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

BFile parse_bfile(const std::string& id, std::string_view text) {
    BFile b;
    b.id = id;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    long expected = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        std::string n_text, a_text, rest;
        if (!(ls >> n_text >> a_text) || (ls >> rest))
            throw ParseError(id + " line " + std::to_string(lineno) + ": expected \"n a(n)\"");
        long n = 0;
        Integer a;
        try {
            std::size_t used = 0;
            n = std::stol(n_text, &used);
            if (used != n_text.size()) throw std::invalid_argument(n_text);
            if (a.set_str(a_text, 10) != 0) throw std::invalid_argument(a_text);
        } catch (const std::exception&) {
            throw ParseError(id + " line " + std::to_string(lineno) + ": malformed number");
        }
        if (first) {
            b.offset = n;
            expected = n;
            first = false;
        }
        if (n != expected)
            throw ParseError(id + " line " + std::to_string(lineno) + ": index " +
                             std::to_string(n) + " breaks contiguity");
        ++expected;
        b.terms.push_back(a);
    }
    return b;
}

OeisConfig OeisConfig::from_env() {
    OeisConfig c;
    if (const char* u = std::getenv("OEIS_BASE_URL"); u && *u) c.base_url = u;
    if (const char* d = std::getenv("OEIS_CACHE_DIR"); d && *d) c.cache_dir = d;
    else c.cache_dir = ".oeis-cache";
    c.fixture_dir = MOTZHANK_FIXTURE_DIR;
    return c;
}

OeisClient::OeisClient(OeisConfig cfg) : cfg_(std::move(cfg)) {}

namespace {

std::string file_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

std::optional<std::string> read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomic(const fs::path& target, const std::string& bytes) {
    static std::atomic<unsigned> counter{0};
    fs::create_directories(target.parent_path());
    const auto tag = std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
                     std::to_string(counter.fetch_add(1));
    const fs::path tmp = target.string() + ".tmp." + tag;
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw NetworkUnavailable("cannot write cache file " + tmp.string());
        out << bytes;
        if (!out.flush()) throw NetworkUnavailable("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace

std::string OeisClient::cache_path(const std::string& id) const {
    return (fs::path(cfg_.cache_dir) / file_name(id)).string();
}

std::string OeisClient::download(const std::string& id) const {
    std::string base = cfg_.base_url;
    std::string prefix;
    const auto scheme = base.find("://");
    const auto slash = base.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    if (slash != std::string::npos) {
        prefix = base.substr(slash);
        base = base.substr(0, slash);
    }
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    httplib::Client cli(base);
    if (!cli.is_valid()) throw NetworkUnavailable("invalid OEIS base URL: " + cfg_.base_url);
    cli.set_connection_timeout(std::chrono::seconds(10));
    cli.set_read_timeout(std::chrono::seconds(30));
    cli.set_follow_location(true);
    auto res = cli.Get(prefix + "/" + file_name(id));
    if (!res) throw NetworkUnavailable(cfg_.base_url + ": " + httplib::to_string(res.error()));
    if (res->status == 404) throw UnknownSequence(id);
    if (res->status != 200)
        throw NetworkUnavailable(cfg_.base_url + ": HTTP status " + std::to_string(res->status));
    return res->body;
}

BFile OeisClient::fetch(const std::string& id) const {
    if (!valid_oeis_id(id)) throw UnknownSequence(id);
    if (!cfg_.cache_dir.empty())
        if (auto text = read_file(cache_path(id))) return parse_bfile(id, *text);
    if (cfg_.offline) {
        auto text = read_file(fs::path(cfg_.fixture_dir) / file_name(id));
        if (!text) throw UnknownSequence(id);
        return parse_bfile(id, *text);
    }
    const std::string body = download(id);
    BFile b = parse_bfile(id, body);
    if (b.terms.empty()) throw UnknownSequence(id);
    if (!cfg_.cache_dir.empty()) {
        try {
            write_atomic(cache_path(id), body);
        } catch (const fs::filesystem_error& e) {
            throw NetworkUnavailable(std::string("cache: ") + e.what());
        }
    }
    return b;
}

CrossCheck cross_check(const std::vector<Integer>& computed, const BFile& bfile, long shift) {
    CrossCheck c;
    const long first = bfile.offset;
    const long last = bfile.offset + static_cast<long>(bfile.terms.size());
    for (std::size_t i = 0; i < computed.size(); ++i) {
        const long idx = bfile.offset + shift + static_cast<long>(i);
        if (idx < first || idx >= last) continue;
        ++c.compared;
        if (computed[i] != bfile.terms[static_cast<std::size_t>(idx - first)]) {
            c.first_mismatch = i;
            return c;
        }
    }
    if (c.compared == 0) throw NoOverlap();
    return c;
}

std::vector<Integer> flattened_triangle(int rows, long t, std::optional<long> s) {
    WeightParams w = s ? WeightParams::split() : WeightParams::uniform();
    w.t = Integer(t);
    if (s) w.s = Integer(*s);
    const auto table = shared_table(rows, w);
    std::vector<Integer> out;
    for (int n = 0; n <= rows; ++n)
        for (int k = 0; k <= n; ++k) out.push_back(table->at(n, k).constant());
    return out;
}

namespace {

std::vector<Integer> column0(int count, long t) {
    const auto table = shared_table(count, {Weighting::uniform_t, Integer(t), std::nullopt});
    std::vector<Integer> out;
    for (int n = 0; n < count; ++n) out.push_back(table->at(n, 0).constant());
    return out;
}

struct Target {
    const char* id;
    const char* what;
    bool triangle;
    long t;
    std::optional<long> s;
    long shift;
};

} // namespace

std::vector<VerificationReport> oeis_cross_checks(const OeisClient& client, int rows) {
    static const Target targets[] = {
        {"A053121", "triangle t=0", true, 0, std::nullopt, 0},
        {"A064189", "triangle t=1", true, 1, std::nullopt, 0},
        {"A039598", "triangle t=2", true, 2, std::nullopt, 0},
        {"A091965", "triangle t=3", true, 3, std::nullopt, 0},
        {"A039599", "triangle (t,s)=(2,1)", true, 2, 1, 0},
        {"A001006", "M_n(1)", false, 1, std::nullopt, 0},
        {"A126120", "M_n(0)", false, 0, std::nullopt, 0},
        {"A000108", "M_n(2)", false, 2, std::nullopt, 1},
    };
    std::vector<VerificationReport> out;
    for (const auto& tg : targets) {
        VerificationReport r;
        r.claim_id = std::string("oeis-") + tg.id;
        r.param("rows", rows).param("shift", tg.shift);
        r.note("computed", tg.what);
        const BFile b = client.fetch(tg.id);
        const auto computed = tg.triangle ? flattened_triangle(rows - 1, tg.t, tg.s)
                                          : column0(rows, tg.t);
        const CrossCheck c = cross_check(computed, b, tg.shift);
        r.note("compared", std::to_string(c.compared));
        if (c.matched()) {
            r.status = c.compared == computed.size() ? Status::verified : Status::inconclusive;
            if (r.status == Status::inconclusive) r.note("reason", "b-file shorter than the request");
        } else {
            r.status = Status::refuted;
            r.note("first_mismatch", std::to_string(*c.first_mismatch));
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace motzhank
