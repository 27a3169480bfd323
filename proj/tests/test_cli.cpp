#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string cli_path() {
    const char* p = std::getenv("SPHI_CLI");
    REQUIRE(p != nullptr);
    return p;
}

struct RunOut {
    int code = -1;
    std::string out;
};

RunOut run_cli(const std::string& args) {
    RunOut r;
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), f)) > 0) r.out.append(buf, n);
    const int st = pclose(f);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> ls;
    std::stringstream ss(s);
    std::string l;
    while (std::getline(ss, l))
        if (!l.empty()) ls.push_back(l);
    return ls;
}

} // namespace

TEST_CASE("s-eval produces the closed-form row") {
    const auto r = run_cli("s-eval --a 1");
    CHECK(r.code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "a,value,abs_err,route");
    CHECK(ls[1].find("0.130330700754") != std::string::npos);
    CHECK(ls[1].find("Series") != std::string::npos);
}

TEST_CASE("determinism: identical argv gives byte-identical output") {
    const auto a = run_cli("s-table --amin 0 --amax 0.5 --step 0.05");
    const auto b = run_cli("s-table --amin 0 --amax 0.5 --step 0.05");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lines_of(a.out).size() == 12);  // header + 11 grid rows
}

TEST_CASE("json output parses and mirrors the csv fields") {
    const auto r = run_cli("s-eval --a 0.5 --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("rows"));
    REQUIRE(j["rows"].size() == 1);
    const auto& row = j["rows"][0];
    CHECK(row["route"] == "Series");
    CHECK(std::fabs(row["value"].get<double>() - 0.03375711047393) < 1e-10);
    CHECK(row["abs_err"].get<double>() >= 0.0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("s-eval --a -2").code == 2);
    CHECK(run_cli("nonsense").code == 2);
    CHECK(run_cli("s-eval --a 1 --tol 1e-20").code == 2);
    CHECK(run_cli("s-table --amin 2 --amax 1 --step 0.1").code == 2);
}

TEST_CASE("phi-table covers the default grid") {
    const auto r = run_cli("phi-table --tmin -1 --tmax 1 --step 0.5");
    CHECK(r.code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "t,phi,phi0,phi1,g");
}

TEST_CASE("ft-eval and zeros emit well-formed rows") {
    const auto r = run_cli("ft-eval --kre 5");
    CHECK(r.code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "re_k,im_k,re_value,im_value,scaled_abs");

    const auto z = run_cli("zeros --kmin 2 --kmax 6 --step 0.5");
    CHECK(z.code == 0);
    const auto zl = lines_of(z.out);
    CHECK(zl.size() == 1);  // header only: no zeros in this window
    CHECK(zl[0] == "k_lo,k_hi,root,residual");
}

TEST_CASE("selftest row count matches exit code semantics") {
    const auto r = run_cli("selftest");
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 13);  // header + one row per criterion
    CHECK(ls[0] == "id,name,status,detail");
    bool any_fail = false;
    for (size_t i = 1; i < ls.size(); ++i)
        if (ls[i].find("FAIL") != std::string::npos) any_fail = true;
    CHECK(r.code == (any_fail ? 1 : 0));
}
