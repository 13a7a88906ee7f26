#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "cli_stdout.txt";
    const std::string err_path = "cli_stderr.txt";
    std::string cmd = std::string(FD2P_BIN) + " " + args + " > " + out_path + " 2> " + err_path;
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

std::string normalized_report(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(slurp(path));
    for (auto& rec : j["checks"]) rec["elapsed_ms"] = 0;
    return j.dump(2);
}

} // namespace

TEST_CASE("verify exits 0 at p=3") {
    RunResult r = run("verify --p 3 --n 1");
    INFO(r.out << r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("summary:") != std::string::npos);
    CHECK(r.out.find(" 0 fail") != std::string::npos);
}

TEST_CASE("verify rejects invalid characteristics with exit 2") {
    for (const char* bad : {"4", "2", "9", "1"}) {
        RunResult r = run(std::string("verify --p ") + bad + " --n 1");
        INFO("p = " << bad << ": " << r.err);
        CHECK(r.code == 2);
        CHECK(r.err.find("characteristic p > 2") != std::string::npos);
    }
}

TEST_CASE("verify accepts an explicit modulus") {
    RunResult r = run("verify --p 3 --n 2 --poly 1,0,1");
    CHECK(r.code == 0);
    RunResult bad = run("verify --p 3 --n 2 --poly 0,0,1"); // x^2 is reducible
    CHECK(bad.code == 2);
}

TEST_CASE("verify writes a reproducible report") {
    RunResult r1 = run("verify --p 7 --n 1 --seed 5 --report report_a.json");
    RunResult r2 = run("verify --p 7 --n 1 --seed 5 --report report_b.json");
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    std::string a = normalized_report("report_a.json");
    std::string b = normalized_report("report_b.json");
    CHECK(a == b);
    CHECK(a.find("\"paper_ref\"") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(a);
    CHECK(j["tool"] == "fd2p");
    CHECK(j["seed"] == 5);
    size_t pass = 0;
    for (const auto& rec : j["checks"]) {
        if (rec["status"] == "pass") ++pass;
        CHECK(rec.contains("paper_ref"));
        CHECK(rec["params"]["p"] == 7);
    }
    CHECK(j["summary"]["pass"] == pass);
    CHECK(pass >= 20);
    std::remove("report_a.json");
    std::remove("report_b.json");
}

TEST_CASE("basis families") {
    RunResult unitary = run("basis --family unitary --p 3 --n 1");
    CHECK(unitary.code == 0);
    CHECK(unitary.out == "[[0],[1],[0],[0],[0],[0]]\ta\n");

    RunResult center = run("basis --family center --p 3 --n 1");
    CHECK(center.code == 0);
    CHECK(count_lines(center.out) == 2);

    RunResult gamma = run("basis --family gamma --p 5 --n 1");
    CHECK(gamma.code == 0);
    CHECK(count_lines(gamma.out) == 8);

    RunResult omega = run("basis --family omega --p 5 --n 1");
    CHECK(omega.code == 0);
    CHECK(count_lines(omega.out) == 4);

    for (const char* fam : {"symmetric", "d_block"}) {
        RunResult r = run(std::string("basis --family ") + fam + " --p 5 --n 2");
        CHECK(r.code == 0);
        CHECK(count_lines(r.out) > 0);
    }

    RunResult bogus = run("basis --family bogus --p 3 --n 1");
    CHECK(bogus.code == 2);
}

TEST_CASE("basis output is deterministic") {
    RunResult a = run("basis --family d_block --p 7 --n 2");
    RunResult b = run("basis --family d_block --p 7 --n 2");
    CHECK(a.out == b.out);
    CHECK(a.out.find("\t") != std::string::npos);
}

TEST_CASE("factorize") {
    RunResult r = run("factorize --p 5 --n 1 --count 100 --seed 7");
    CHECK(r.code == 0);
    CHECK(r.out == "100/100 exact\n");

    RunResult ex = run("factorize --p 3 --n 1 --exhaustive");
    CHECK(ex.code == 0);
    CHECK(ex.out == "81/81 exact\n");

    RunResult zero = run("factorize --p 5 --n 1 --count 0");
    CHECK(zero.code == 0);
    CHECK(zero.out == "0/0 exact\n");

    RunResult too_big = run("factorize --p 13 --n 2 --exhaustive");
    CHECK(too_big.code == 2);

    RunResult bad = run("factorize --p 6 --n 1");
    CHECK(bad.code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("verify").code == 2);            // missing --p
    CHECK(run("basis --p 3 --n 1").code == 2); // missing --family
    CHECK(run("frobnicate --p 3").code == 2);
}
