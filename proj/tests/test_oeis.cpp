#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motzhank/errors.hpp"
#include "motzhank/oeis.hpp"

#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

using namespace motzhank;
namespace fs = std::filesystem;

namespace {

std::vector<Integer> Z(std::vector<long> v) { return {v.begin(), v.end()}; }

OeisClient offline_client() {
    OeisConfig c = OeisConfig::from_env();
    c.offline = true;
    c.cache_dir.clear();
    return OeisClient(c);
}

std::string fixture(const std::string& name) {
    std::ifstream in(fs::path(OeisConfig::from_env().fixture_dir) / name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("motzhank-oeis-" + tag);
    fs::remove_all(p);
    return p;
}

} // namespace

TEST_CASE("b-file parsing") {
    const BFile b = parse_bfile("A000045", "# Fibonacci\n\n0 0\n1 1\n2 1\n3 2\n\n4 3\n");
    CHECK(b.offset == 0);
    CHECK(b.terms == Z({0, 1, 1, 2, 3}));
    CHECK(parse_bfile("A000001", "1 5\r\n2 -7\r\n").terms == Z({5, -7}));
    CHECK(parse_bfile("A000001", "1 5\n").offset == 1);
    CHECK_THROWS_AS(parse_bfile("A000001", "0 1\n2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile("A000001", "0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile("A000001", "0\n"), ParseError);
    CHECK(valid_oeis_id("A001006"));
    CHECK_FALSE(valid_oeis_id("X123"));
    CHECK_FALSE(valid_oeis_id("A1006"));
}

TEST_CASE("offline fixtures") {
    const auto client = offline_client();
    const BFile m = client.fetch("A001006");
    REQUIRE(m.terms.size() >= 9);
    CHECK(std::vector<Integer>(m.terms.begin(), m.terms.begin() + 9) ==
          Z({1, 1, 2, 4, 9, 21, 51, 127, 323}));
    const BFile c = client.fetch("A000108");
    CHECK(cross_check(Z({1, 2, 5, 14, 42}), c, 1).matched());
    CHECK_THROWS_AS(client.fetch("X123"), UnknownSequence);
    CHECK_THROWS_AS(client.fetch("A999999"), UnknownSequence);
}

TEST_CASE("cross checks") {
    const BFile b{"A001006", 0, Z({1, 1, 2, 4, 9, 21, 51, 127, 323})};
    const auto ok = cross_check(Z({1, 1, 2, 4, 9, 21, 51, 127, 323, 835}), b, 0);
    CHECK(ok.matched());
    CHECK(ok.compared == 9);
    const auto bad = cross_check(Z({2, 4, 9, 22}), b, 2);
    CHECK(bad.first_mismatch == std::optional<std::size_t>(3));
    CHECK_THROWS_AS(cross_check(Z({1}), b, 20), NoOverlap);
    CHECK(flattened_triangle(2, 1, std::nullopt) == Z({1, 1, 1, 2, 2, 1}));
}

TEST_CASE("download, cache and failure modes against a local server") {
    httplib::Server srv;
    const std::string body = fixture("b001006.txt");
    srv.Get("/oeis/b001006.txt",
            [&](const httplib::Request&, httplib::Response& res) { res.set_content(body, "text/plain"); });
    srv.Get("/oeis/b000002.txt", [](const httplib::Request&, httplib::Response& res) { res.status = 404; });
    const int port = srv.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread th([&] { srv.listen_after_bind(); });
    srv.wait_until_ready();

    const fs::path cache = fresh_dir("cache");
    OeisConfig c;
    c.base_url = "http://127.0.0.1:" + std::to_string(port) + "/oeis";
    c.cache_dir = cache.string();
    const OeisClient client(c);
    const BFile first = client.fetch("A001006");
    CHECK(fs::exists(cache / "b001006.txt"));
    srv.stop();
    th.join();
    const BFile second = client.fetch("A001006");
    CHECK(first == second);
    CHECK(first == offline_client().fetch("A001006"));
    CHECK_THROWS_AS(client.fetch("A000003"), NetworkUnavailable);
    for (const auto& e : fs::directory_iterator(cache))
        CHECK(e.path().filename().string().find(".tmp") == std::string::npos);
    fs::remove_all(cache);
}

TEST_CASE("missing sequences on the server") {
    httplib::Server srv;
    srv.Get("/b000002.txt", [](const httplib::Request&, httplib::Response& res) { res.status = 404; });
    srv.Get("/b000004.txt", [](const httplib::Request&, httplib::Response& res) { res.status = 500; });
    const int port = srv.bind_to_any_port("127.0.0.1");
    std::thread th([&] { srv.listen_after_bind(); });
    srv.wait_until_ready();
    OeisConfig c;
    c.base_url = "http://127.0.0.1:" + std::to_string(port);
    c.cache_dir = fresh_dir("missing").string();
    const OeisClient client(c);
    CHECK_THROWS_AS(client.fetch("A000002"), UnknownSequence);
    CHECK_THROWS_AS(client.fetch("A000004"), NetworkUnavailable);
    srv.stop();
    th.join();
}

TEST_CASE("all named sequences match offline") {
    const auto reps = oeis_cross_checks(offline_client(), 30);
    CHECK(reps.size() == 8);
    for (const auto& r : reps) {
        CAPTURE(r.claim_id);
        CHECK(r.status == Status::verified);
    }
}
