#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " MAGNON_CLI " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    for (size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("profile examples") {
    auto r = run("profile --n 6 --lambdas 1,3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "C1,C2,C3\n4.511535397e-01,0.000000000e+00,0.000000000e+00\n"));
    r = run("profile --n 6 --singular");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "0.000000000e+00,3.333333333e-01,0.000000000e+00\n"));
    r = run("profile --n 10 --goldstone 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "1.138998252e-01,1.138998252e-01,1.138998252e-01,1.138998252e-01,1.138998252e-01\n"));
}

TEST_CASE("solve examples") {
    auto r = run("solve --n 10 --class cosh --all");
    CHECK(r.code == 0);
    CHECK(contains(r.out, ",2.583388426e-01,"));
    CHECK(contains(r.out, ",1.174434167e+00,"));
    r = run("solve --n 6 --lambdas 0,3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "# class: goldstone_mixed"));
    CHECK(contains(r.out, "2,3,3.141592654e+00,0.000000000e+00"));
    r = run("solve --n 6 --lambdas 1,1 --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["meta"]["class"] == "cosh_bound");
    const auto& rows = j["tables"][0]["rows"];
    CHECK(rows[0][3].get<double>() == doctest::Approx(-rows[1][3].get<double>()));
}

TEST_CASE("exit codes") {
    CHECK(run("solve --n 6 --lambdas 1,9").code == 1);
    CHECK(run("solve --n 6").code == 1);
    CHECK(run("profile --n 6").code == 1);
    CHECK(run("bogus").code != 0);
    CHECK(run("figure fig9").code != 0);
    CHECK(run("profile --n 6 --lambdas 1,3 --singular").code != 0);
    // N = 4 and 5 have no (1,1,1) state: reported per item, exit 2
    const auto r = run("survey length --lambdas 1,1,1 --n-min 4 --n-max 7");
    CHECK(r.code == 2);
    CHECK(contains(r.out, "# error: "));
}

TEST_CASE("output is deterministic across runs and thread counts") {
    const std::string a = "cli_det_a.csv", b = "cli_det_b.csv";
    REQUIRE(run("figure fig3 --points 31 --out " + a, "MAGNON_THREADS=1").code == 0);
    REQUIRE(run("figure fig3 --points 31 --out " + b, "MAGNON_THREADS=7").code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).size() > 1000);
    REQUIRE(run("table1 --format json --out " + a).code == 0);
    REQUIRE(run("table1 --format json --out " + b).code == 0);
    CHECK(slurp(a) == slurp(b));
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("figure CSV schema") {
    const auto r = run("figure fig1 --points 7");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "param,C1,C2,C3,eigenstate_marker\n"));
    const auto f2 = run("figure fig2 --n-max 8");
    CHECK(contains(f2.out, "\n8,1,2.500000000e-01,2.500000000e-01,1\n"));
}
