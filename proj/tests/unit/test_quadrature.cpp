#include <doctest.h>

#include <cmath>
#include <numeric>

#include "legproj/legendre_series.hpp"
#include "legproj/quadrature.hpp"

using legproj::Real;

TEST_CASE("small rules")
{
    const auto r1 = legproj::gauss_rule<double>(1);
    CHECK(r1.nodes.size() == 1);
    CHECK(std::abs(r1.nodes[0]) < 1e-15);
    CHECK(r1.weights[0] == doctest::Approx(2.0));
    const auto r2 = legproj::gauss_rule<double>(2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(r2.weights[0] == doctest::Approx(1.0));
    CHECK(r2.weights[1] == doctest::Approx(1.0));
    const auto r5 = legproj::gauss_rule<double>(5);
    const auto l4 = legproj::LegendreSeries::basis(4);
    CHECK(r5.integrate([&](double x) { return legproj::evaluate(l4, x) * legproj::evaluate(l4, x); }) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
    CHECK_THROWS_AS(legproj::gauss_rule<double>(0), std::invalid_argument);
}

TEST_CASE("weights are positive and sum to 2; nodes ascend inside (-1, 1)")
{
    for (int n : {1, 2, 3, 7, 20, 64, 150}) {
        const auto r = legproj::gauss_rule<double>(n);
        CHECK(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-13));
        for (std::size_t j = 0; j < r.nodes.size(); ++j) {
            CHECK(r.weights[j] > 0);
            CHECK(std::abs(r.nodes[j]) < 1);
            if (j > 0)
                CHECK(r.nodes[j] > r.nodes[j - 1]);
            CHECK(r.nodes[j] == doctest::Approx(-r.nodes[r.nodes.size() - 1 - j]));
        }
    }
}

TEST_CASE("an n-point rule integrates L_i L_j exactly for i + j <= 2n - 1")
{
    for (int n : {3, 8, 16}) {
        const auto r = legproj::gauss_rule<double>(n);
        for (std::size_t i = 0; i < static_cast<std::size_t>(2 * n); ++i)
            for (std::size_t j = 0; i + j <= static_cast<std::size_t>(2 * n - 1); ++j) {
                const auto li = legproj::LegendreSeries::basis(i), lj = legproj::LegendreSeries::basis(j);
                const double got = r.integrate([&](double x) { return legproj::evaluate(li, x) * legproj::evaluate(lj, x); });
                const double want = i == j ? 2.0 / static_cast<double>(2 * i + 1) : 0.0;
                CHECK(std::abs(got - want) <= 1e-13 * std::max(1.0, want) + 1e-14);
            }
    }
}

TEST_CASE("multiprecision rule reaches its working precision")
{
    const auto r = legproj::gauss_rule<Real>(40);
    Real sum(0);
    for (const auto& w : r.weights)
        sum += w;
    CHECK(abs(sum - Real(2)) < Real("1e-95"));
    const auto l30 = legproj::LegendreSeries::basis(30);
    const Real got = r.integrate([&](const Real& x) {
        const Real v = legproj::evaluate(l30, x);
        return Real(v * v);
    });
    CHECK(abs(got - Real(2) / Real(61)) < Real("1e-95"));
}

TEST_CASE("left-graded rule integrates half-integer powers at -1")
{
    const auto g = legproj::left_graded(legproj::gauss_rule<Real>(30));
    // int_{-1}^{1} (1+x)^{7/2} dx = 2^{9/2} / (9/2)
    const Real got = g.integrate([](const Real& x) { return Real(pow(Real(1) + x, Real(7) / Real(2))); });
    const Real want = pow(Real(2), Real(9) / Real(2)) * Real(2) / Real(9);
    CHECK(abs(got - want) < Real("1e-90"));
}

TEST_CASE("cached rules are shared")
{
    const auto a = legproj::cached_gauss_rule<double>(12);
    const auto b = legproj::cached_gauss_rule<double>(12);
    CHECK(a.get() == b.get());
}
