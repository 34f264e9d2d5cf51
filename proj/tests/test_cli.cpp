#include <json.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(SMAE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("invariants of a distribution")
{
    const Run r = run("invariants --dist '0,x*y+1,1,p*q ; 1,1,0,x*y' --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["input"]["kind"] == "dist");
    CHECK(j["invariants"]["I"][3] == "-2");
    CHECK(j["meta"]["extra"]["seed"] == "1");
    const Run t = run("invariants --dist '0,x*y+1,1,p*q ; 1,1,0,x*y'");
    CHECK(t.code == 0);
    CHECK(t.out.find("I[4] = -2") != std::string::npos);
}

TEST_CASE("invariants of an equation and of an operator")
{
    const Run m = run("invariants --mae '0;0;1;0;p*q' --format json");
    REQUIRE(m.code == 0);
    const auto j = nlohmann::json::parse(m.out);
    CHECK(j["meta"]["extra"].contains("mae_type"));
    const Run o = run("invariants --operator-a '0,0,-1,0; 0,0,0,1; 1,0,0,0; 0,-1,0,0' --format json");
    REQUIRE(o.code == 0);
    CHECK(nlohmann::json::parse(o.out)["meta"]["extra"]["operator_kind"] == "elliptic");
}

TEST_CASE("exit codes")
{
    CHECK(run("invariants --dist '1,0,0,0 ; 0,1,0,(' ").code == 2);
    CHECK(run("invariants").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("invariants --dist '1,0,0,0 ; 0,0,1,0' --mae '1;0;0;0;1'").code == 2);
    // Lagrangian plane.
    CHECK(run("invariants --dist '1,0,0,0 ; 0,0,1,0'").code == 3);
    CHECK(run("invariants --dist '1,0,0,0 ; 0,1,0,0' --scale 0").code == 3);
    // Parabolic equation.
    CHECK(run("invariants --mae '0;1;0;0;0'").code == 4);
    CHECK(run("--help").code == 0);
}

TEST_CASE("verify table1")
{
    const Run r = run("verify table1");
    CHECK(r.code == 0);
    CHECK(r.out.find("table1: 9/9 passed") != std::string::npos);
}
