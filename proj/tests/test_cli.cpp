#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"

using telescope::cli::CliHooks;
using telescope::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const CliHooks& hooks = {}) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err, hooks);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("term") {
    CHECK(run({"term", "--seq", "fibonacci", "--n", "10"}).out == "55\n");
    CHECK(run({"term", "--seq", "qfib", "--n", "3"}).out == "1 + A*q\n");
    CHECK(run({"term", "--seq", "qfib", "--n", "3"}).code == 0);
    const auto j = nlohmann::json::parse(run({"term", "--seq", "pell", "--n", "5", "--format", "json"}).out);
    CHECK(j["value"] == "29");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"term", "--seq", "fibonacci"}).code == 2);
    CHECK(run({"term", "--seq", "nope", "--n", "3"}).code == 2);
    CHECK(run({"term", "--seq", "fibonacci", "--n", "-3"}).code == 2);
    CHECK(run({"term", "--seq", "fibonacci", "--n", "x"}).code == 2);
    CHECK(run({"verify", "--identity", "id_nope"}).code == 2);
    CHECK(run({"verify", "--identity", "id_sury_236", "--n-max", "-1"}).code == 2);
    CHECK(run({"list", "--format", "xml"}).code == 2);
    const auto r = run({"verify", "--identity", "id_nope"});
    CHECK(r.err.find("id_nope") != std::string::npos);
}

TEST_CASE("help exits with 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("list") {
    const auto text = run({"list"});
    CHECK(text.code == 0);
    CHECK(count_lines(text.out) == 21);
    const auto j = nlohmann::json::parse(run({"list", "--format", "json"}).out);
    CHECK(j.size() == 21);
    const auto csv = run({"list", "--format", "csv"}).out;
    CHECK(count_lines(csv) == 22);
    CHECK(csv.rfind("name,eq,", 0) == 0);
}

TEST_CASE("verify one identity") {
    const auto r = run({"verify", "--identity", "id_sury_236", "--n-max", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS  id_sury_236", 0) == 0);
    CHECK(r.err.empty());
}

TEST_CASE("a corrupted identity fails and is named") {
    CliHooks hooks;
    hooks.corrupt_identity = "id_pell_sum";
    const auto r = run({"verify", "--identity", "id_pell_sum", "--n-max", "10"}, hooks);
    CHECK(r.code == 1);
    CHECK(r.err.find("id_pell_sum") != std::string::npos);
    CHECK(r.out.rfind("FAIL  id_pell_sum", 0) == 0);
    // Other identities are untouched.
    CHECK(run({"verify", "--identity", "id_sury_236", "--n-max", "10"}, hooks).code == 0);
}

TEST_CASE("report records") {
    const auto r = run({"report", "--n-max", "12", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 21 + 9 + 2);
    for (const auto& record : j) {
        CHECK(record["status"] == "pass");
        CHECK(record["first_failure"].is_null());
        CHECK(record["n_max"] == 12);
    }
    // Byte-identical round trip.
    CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("report as CSV") {
    const auto r = run({"report", "--n-max", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("name,eq,status,n_max,elapsed_ms\n", 0) == 0);
    CHECK(count_lines(r.out) == 1 + 21 + 9 + 2);
}

TEST_CASE("report with a seed adds the property suites") {
    const auto r = run({"report", "--n-max", "3", "--seed", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 1 + 21 + 9 + 2 + 2);
    CHECK(r.out.find("property:scheme_modes(seed=5)") != std::string::npos);
}

TEST_CASE("a failing report names the failure on stderr") {
    CliHooks hooks;
    hooks.corrupt_identity = "id_q_martinjak";
    const auto r = run({"report", "--n-max", "6", "--format", "json"}, hooks);
    CHECK(r.code == 1);
    CHECK(r.err.find("id_q_martinjak") != std::string::npos);
    const auto j = nlohmann::ordered_json::parse(r.out);
    bool found = false;
    for (const auto& record : j) {
        if (record["name"] != "id_q_martinjak") continue;
        found = true;
        CHECK(record["status"] == "fail");
        CHECK(record["first_failure"]["n"] == 0);
        CHECK(record["first_failure"]["lhs"]["numerator"] == "-1");
    }
    CHECK(found);
    CHECK(j.dump(2) + "\n" == r.out);
}
