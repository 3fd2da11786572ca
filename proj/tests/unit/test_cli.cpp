#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "legproj/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "legproj");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = legproj::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("emit-poly examples")
{
    auto r = run({"emit-poly", "psi", "--i", "1", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\t-1/3\n2\t1/3\n");
    r = run({"emit-poly", "q", "--p", "2", "--nu", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\t3/5\n2\t5/7\n3\t-1/10\n4\t-3/14\n");
    CHECK(run({"emit-poly", "psi", "--i", "0", "--n", "1"}).code == 2);
    CHECK(run({"emit-poly", "q", "--p", "1", "--nu", "2"}).code == 2);
    CHECK(run({"emit-poly", "r", "--p", "1", "--nu", "0"}).code == 2);
    CHECK(run({"emit-poly", "q", "--p", "3", "--nu", "2"}).out == run({"emit-poly", "q", "--p", "3", "--nu", "2"}).out);
}

TEST_CASE("verify-identities")
{
    auto r = run({"verify-identities", "--p-max", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("identity,p,k,n,lhs,rhs,holds\n", 0) == 0);
    for (const char* branch : {"psi_inner/k>n", "psi_inner/k=n,", "psi_inner/k=n-1", "psi_inner/k<=n-2"})
        CHECK(r.out.find(branch) != std::string::npos);
    r = run({"verify-identities", "--p-max", "5", "--inject-fault"});
    CHECK(r.code == 1);
    CHECK(r.err.find("FAIL psi_inner") != std::string::npos);
    CHECK(run({"verify-identities", "--p-max", "0"}).code == 2);
}

TEST_CASE("verify-identities output is deterministic for a fixed seed")
{
    const auto a = run({"verify-identities", "--p-max", "4", "--seed", "99"});
    const auto b = run({"verify-identities", "--p-max", "4", "--seed", "99"});
    CHECK(a.out == b.out);
    const auto c = run({"verify-identities", "--p-max", "4", "--seed", "100"});
    CHECK(a.out != c.out);
}

TEST_CASE("verify-bounds gating and usage errors")
{
    auto r = run({"verify-bounds", "--functions", "exp", "--p-max", "12", "--kinds", "L2_PROJ,TRACE_HOUSTON,TRACE_MAIN_AS_PROVED", "--gate", "as-proved"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("kind,function,p,s,nu,lhs,rhs,ratio,pass\n", 0) == 0);
    r = run({"verify-bounds", "--functions", "exp", "--p-max", "6", "--kinds", "TRACE_MAIN"});
    CHECK(r.code == 1);
    CHECK(r.err.find("FAIL TRACE_MAIN") != std::string::npos);
    // generic-constant kinds only report
    r = run({"verify-bounds", "--functions", "exp", "--p-max", "8", "--kinds", "TRACE_COROLLARY,DERIV_SEMINORM"});
    CHECK(r.code == 0);
    CHECK(run({"verify-bounds", "--s-max", "-1"}).code == 2);
    CHECK(run({"verify-bounds", "--functions", "tan"}).code == 2);
    CHECK(run({"verify-bounds", "--kinds", "NOPE"}).code == 2);
    CHECK(run({"verify-bounds", "--p-min", "9", "--p-max", "3"}).code == 2);
    CHECK(run({"verify-bounds", "--p-max", "abc"}).code == 2);
}

TEST_CASE("verify-bounds honours --s-max and --out")
{
    const std::string path = "cli_test_bounds.csv";
    auto r = run({"verify-bounds", "--functions", "sin3x", "--p-max", "5", "--s-max", "1", "--kinds", "L2_PROJ", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream body;
    body << f.rdbuf();
    CHECK(lines(body.str()) == 1 + 5 * 2);
    std::remove(path.c_str());
}

TEST_CASE("sweep-growth")
{
    auto r = run({"sweep-growth", "--nu-min", "1", "--nu-max", "1", "--p-min", "1", "--p-max", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "p,nu,norm_sq,ratio\n1,1,26/35,26/35\n2,1,16/35,8/35\n3,1,100/231,100/693\n");
    CHECK(run({"sweep-growth", "--p-min", "10", "--p-max", "5"}).code == 2);
    r = run({"sweep-growth", "--p-max", "30"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == 1 + 3 * 29 + 28);
}

TEST_CASE("no or unknown subcommand is a usage error")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
