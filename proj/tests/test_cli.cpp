#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QJS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r{};
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_CASE("table json") {
    auto r = run_cli("table qstirling-second --n 3 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["family"] == "qstirling-second");
    bool found = false;
    for (const auto& row : j["rows"])
        if (row["n"] == 3 && row["k"] == 2) {
            found = true;
            CHECK(row["value"]["var"] == "q");
            CHECK(row["value"]["terms"] ==
                  nlohmann::json::parse(R"([[0,"2"],[1,"1"]])"));
        }
    CHECK(found);
}

TEST_CASE("table csv and latex") {
    auto r = run_cli("table central-U --n 3 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("3,2,\"q^-1+3+q\"") != std::string::npos);
    auto l = run_cli("table qjs-second --n 4 --format latex");
    REQUIRE(l.exit_code == 0);
    // the published JS_4^2 row, in LaTeX form
    CHECK(l.out.find("(q^{-2}+5q^{-1}+9+5q+q^{2})+(3q^{-1}+11+8q+2q^{2})z+(3+3q+q^{2})z^{2}") !=
          std::string::npos);
}

TEST_CASE("output determinism") {
    auto a = run_cli("table qjs-second --n 4 --format json");
    auto b = run_cli("table qjs-second --n 4 --format json");
    CHECK(a.out == b.out);
    auto c = run_cli("enumerate js-partitions 3 2");
    auto d = run_cli("enumerate js-partitions 3 2");
    CHECK(c.out == d.out);
}

TEST_CASE("exit code contract") {
    CHECK(run_cli("table no-such-family --n 3").exit_code == 2);
    CHECK(run_cli("table qjs-second --n 99").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("enumerate js-partitions 9 2").exit_code == 2);
    CHECK(run_cli("verify stirling --n 4").exit_code == 0);
}

TEST_CASE("enumerate streams") {
    auto r = run_cli("enumerate js-partitions 3 2");
    REQUIRE(r.exit_code == 0);
    int objects = 0;
    std::string summary;
    std::stringstream ss(r.out);
    std::string line;
    while (std::getline(ss, line)) {
        auto j = nlohmann::json::parse(line);
        if (j.contains("object")) ++objects;
        if (j.contains("summary")) summary = j["summary"];
    }
    CHECK(objects == 8);
    CHECK(summary == "q^-1+3+q | 2+q");

    auto one = run_cli("enumerate js-partitions 2 2");
    int n1 = 0;
    std::stringstream s1(one.out);
    while (std::getline(s1, line)) {
        auto j = nlohmann::json::parse(line);
        if (j.contains("object")) ++n1;
        if (j.contains("summary")) CHECK(j["summary"] == "1");
    }
    CHECK(n1 == 1);

    auto ds = run_cli("enumerate double-signed 2 1");
    int n2 = 0;
    std::stringstream s2(ds.out);
    while (std::getline(s2, line)) {
        auto j = nlohmann::json::parse(line);
        if (j.contains("object")) ++n2;
    }
    CHECK(n2 == 5);
}

TEST_CASE("verify json report") {
    auto r = run_cli("verify combinatorics --n 4 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    REQUIRE(j["reports"].size() == 1);
    for (const auto& cell : j["reports"][0]["cells"]) CHECK(cell["pass"] == true);
    auto ops = run_cli("verify operators --family asc:a=-1 --k 2 --deg 5");
    CHECK(ops.exit_code == 0);
}

TEST_CASE("family descriptor") {
    auto r = run_cli("family dqh --n 3");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["name"] == "discrete-q-hermite");
    CHECK(j["substitution_exponent"] == 1);
    CHECK(j["rows"].size() == 4);
    CHECK(run_cli("family nope").exit_code == 2);
}
