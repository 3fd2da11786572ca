#include <doctest.h>

#include <random>
#include <sstream>

#include "legproj/certify.hpp"
#include "legproj/integrated_legendre.hpp"
#include "legproj/report_io.hpp"

using legproj::LegendreSeries;
using legproj::Rational;

TEST_CASE("series serialization format")
{
    CHECK(legproj::series_to_string(legproj::psi(legproj::PsiIndex(1, 1))) == "0\t-1/3\n2\t1/3\n");
    CHECK(legproj::series_to_string(LegendreSeries{}).empty());
    CHECK(legproj::series_to_string(LegendreSeries::basis(0, Rational(4))) == "0\t4/1\n");
}

TEST_CASE("series serialization round-trips")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
        const auto a = legproj::random_series(25, rng);
        CHECK(legproj::series_from_string(legproj::series_to_string(a)) == a);
    }
}

TEST_CASE("malformed series input is rejected")
{
    CHECK_THROWS_AS(legproj::series_from_string("0 1/2\n"), std::invalid_argument);
    CHECK_THROWS_AS(legproj::series_from_string("2\t1/2\n1\t1/3\n"), std::invalid_argument);
    CHECK_THROWS_AS(legproj::series_from_string("a\t1/2\n"), std::invalid_argument);
    CHECK_THROWS_AS(legproj::series_from_string("0\tz\n"), std::invalid_argument);
}

TEST_CASE("reals print with 17 significant digits")
{
    CHECK(legproj::format_real(0.1) == "0.10000000000000001");
    CHECK(legproj::format_real(1.0) == "1");
    CHECK(legproj::format_real(legproj::Real("1e-60")) == "9.9999999999999997e-61");
    CHECK(legproj::format_real(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("bound CSV layout")
{
    legproj::BoundReport r;
    r.kind = legproj::BoundKind::TraceMain;
    r.function = "exp";
    r.p = 4;
    r.s = 1;
    r.nu = 2;
    r.lhs = legproj::Real(0.5);
    r.rhs = legproj::Real(2);
    r.ratio = legproj::Real(0.25);
    r.pass = true;
    std::ostringstream os;
    legproj::write_bound_csv(os, {r});
    CHECK(os.str() == "kind,function,p,s,nu,lhs,rhs,ratio,pass\nTRACE_MAIN,exp,4,1,2,0.5,2,0.25,true\n");
    r.kind = legproj::BoundKind::InterpBeirao;
    r.k = 2;
    CHECK(legproj::bound_kind_label(r) == "INTERP_BEIRAO_K2");
}

TEST_CASE("identity and growth CSV layouts")
{
    std::ostringstream a, b;
    legproj::write_identity_csv(a, {{"psi_norm", 1, 0, 1, "4/15", "4/15", true}});
    CHECK(a.str() == "identity,p,k,n,lhs,rhs,holds\npsi_norm,1,0,1,4/15,4/15,true\n");
    legproj::write_growth_csv(b, {{2, 1, Rational(16, 35), Rational(8, 35)}});
    CHECK(b.str() == "p,nu,norm_sq,ratio\n2,1,16/35,8/35\n");
}
