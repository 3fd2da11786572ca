#include <doctest.h>

#include <cmath>
#include <random>

#include "legproj/certify.hpp"
#include "legproj/projection.hpp"
#include "legproj/qfamily.hpp"
#include "legproj/sample_function.hpp"

using legproj::Endpoint;
using legproj::LegendreSeries;
using legproj::Rational;
using legproj::Real;

namespace {

std::shared_ptr<const legproj::GaussRule<double>> rule_d(int n)
{
    return legproj::cached_gauss_rule<double>(n);
}

LegendreSeries x_squared()
{
    return LegendreSeries(std::vector<Rational>{Rational(1, 3), 0, Rational(2, 3)});
}

} // namespace

TEST_CASE("project examples")
{
    const auto l5 = legproj::polynomial_function<double>("L5", LegendreSeries::basis(5));
    const auto r = legproj::project(l5, 3, *rule_d(20));
    for (const auto& b : r.series.coeffs())
        CHECK(std::abs(b) <= 1e-12);
    const auto x2 = legproj::polynomial_function<double>("x2", x_squared());
    const auto p1 = legproj::project(x2, 1, *rule_d(20));
    CHECK(p1.series.coeff(0) == doctest::Approx(1.0 / 3.0));
    CHECK(std::abs(p1.series.coeff(1)) < 1e-15);
    CHECK(legproj::error_seminorm(x2, 1, 0, *rule_d(20)) == doctest::Approx(std::sqrt(8.0 / 45.0)));
}

TEST_CASE("project_exact truncates")
{
    const auto q31 = legproj::q_poly(3, 1).series;
    const auto t = legproj::project_exact(q31, 3);
    for (std::size_t j = 0; j <= 3; ++j)
        CHECK(t.coeff(j) == q31.coeff(j));
    CHECK(t.size() <= 4);
    CHECK(legproj::project_exact(LegendreSeries::basis(2), 5) == LegendreSeries::basis(2));
    const auto psi42 = legproj::psi(legproj::PsiIndex(4, 2));
    CHECK(legproj::project_exact(psi42, 2) == LegendreSeries::basis(2, psi42.coeff(2)));
    CHECK_THROWS_AS(legproj::project_exact(psi42, -1), std::invalid_argument);
}

TEST_CASE("Parseval consistency for exp")
{
    const auto f = legproj::exp_function<double>();
    const auto r = legproj::project(f, 10, *rule_d(40));
    double parseval = 0;
    for (std::size_t i = 0; i < r.series.size(); ++i)
        parseval += r.series.coeff(i) * r.series.coeff(i) * 2.0 / static_cast<double>(2 * i + 1);
    const double quad = rule_d(40)->integrate([&](double x) {
        const double v = legproj::evaluate(r.series, x);
        return v * v;
    });
    CHECK(std::abs(parseval - quad) <= 1e-10 * quad);
}

TEST_CASE("polynomial reproduction")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        const auto a = legproj::random_series(12, rng);
        const auto f = legproj::polynomial_function<double>("poly", a);
        const auto r = legproj::project(f, 12, *rule_d(30));
        for (std::size_t j = 0; j <= 12; ++j)
            CHECK(std::abs(r.series.coeff(j) - a.coeff(j).to_double()) <= 1e-12 * std::max(1.0, std::abs(a.coeff(j).to_double())));
        CHECK(legproj::error_seminorm(f, 12, 0, *rule_d(30)) <= 1e-11);
        CHECK(legproj::error_trace(f, 12, 1, Endpoint::Right, *rule_d(30)) <= 1e-10);
    }
}

TEST_CASE("best approximation and stability")
{
    std::mt19937_64 rng(29);
    std::normal_distribution<double> normal;
    for (const auto& name : legproj::builtin_function_names()) {
        const auto f = legproj::builtin_function<Real>(name);
        legproj::SampledFunction<Real> sf(f, legproj::rule_for(f, 340));
        for (long p : {2L, 7L, 15L}) {
            const Real best = sf.error_seminorm_sq(p, 0);
            CHECK(best <= sf.seminorm_sq(0));
            const auto proj = sf.projection(p).series;
            for (int t = 0; t < 20; ++t) {
                std::vector<Real> c(proj.coeffs().begin(), proj.coeffs().end());
                for (auto& x : c)
                    x += Real(0.01 * normal(rng));
                CHECK(best <= sf.distance_seminorm_sq(legproj::BasicLegendreSeries<Real>(c), 0) + Real(1e-10));
            }
        }
    }
}

TEST_CASE("sobolev seminorm examples")
{
    const auto e = legproj::exp_function<double>();
    const double want = std::sqrt((std::exp(2.0) - std::exp(-2.0)) / 2.0);
    for (int s : {0, 1, 4})
        CHECK(legproj::sobolev_seminorm(e, s, *rule_d(30)) == doctest::Approx(want).epsilon(1e-13));
    const auto l2 = legproj::polynomial_function<double>("L2", LegendreSeries::basis(2));
    CHECK(legproj::sobolev_seminorm(l2, 0, *rule_d(10)) == doctest::Approx(std::sqrt(0.4)));
    const legproj::SampleFunction<double> sinpi{"sinpi", 4, legproj::QuadratureShape::Standard, 0, [](int d, double x) {
                                                    return std::pow(M_PI, d) * std::sin(M_PI * x + d * M_PI / 2);
                                                }};
    CHECK(legproj::sobolev_seminorm(sinpi, 1, *rule_d(40)) == doctest::Approx(M_PI).epsilon(1e-13));
}

TEST_CASE("error seminorm and trace examples for x^2")
{
    const auto x2 = legproj::polynomial_function<double>("x2", x_squared());
    CHECK(legproj::error_seminorm(x2, 1, 1, *rule_d(10)) == doctest::Approx(std::sqrt(8.0 / 3.0)));
    CHECK(legproj::error_trace(x2, 1, 0, Endpoint::Right, *rule_d(10)) == doctest::Approx(2.0 / 3.0));
    const auto e = legproj::exp_function<double>();
    CHECK(legproj::error_trace(e, 8, 1, Endpoint::Right, *rule_d(40)) > 0);
}

TEST_CASE("interpolant")
{
    const auto e = legproj::exp_function<double>();
    const auto rule = rule_d(40);
    // k = 0 is the projection
    const auto i0 = legproj::interpolant(e, 6, 0, *rule);
    const auto p6 = legproj::project(e, 6, *rule).series;
    for (std::size_t j = 0; j <= 6; ++j)
        CHECK(i0.coeff(j) == doctest::Approx(p6.coeff(j)).epsilon(1e-14));
    // polynomial reproduction
    const LegendreSeries x3(std::vector<Rational>{0, Rational(3, 5), 0, Rational(2, 5)});
    const auto c3 = legproj::polynomial_function<double>("x3", x3);
    const auto i3 = legproj::interpolant(c3, 3, 1, *rule);
    for (std::size_t j = 0; j <= 3; ++j)
        CHECK(std::abs(i3.coeff(j) - x3.coeff(j).to_double()) <= 1e-12);
    // endpoint conditions at both ends
    for (int k : {1, 2, 3}) {
        const auto ik = legproj::interpolant(e, 9, k, *rule);
        for (int i = 0; i < k; ++i) {
            CHECK(std::abs(legproj::endpoint_derivative(ik, i, Endpoint::Left) - std::exp(-1.0)) <= 1e-8);
            CHECK(std::abs(legproj::endpoint_derivative(ik, i, Endpoint::Right) - std::exp(1.0)) <= 1e-8);
        }
        // k-th derivative is the projection of the k-th derivative
        const auto dk = legproj::derivative(ik, k);
        const auto pk = legproj::project(e, 9 - k, *rule).series;
        for (std::size_t j = 0; j <= static_cast<std::size_t>(9 - k); ++j)
            CHECK(std::abs(dk.coeff(j) - pk.coeff(j)) <= 1e-10);
    }
    CHECK_THROWS_AS(legproj::interpolant(e, 1, 2, *rule), std::invalid_argument);
    const auto pw = legproj::pow_seven_halves_function<double>();
    CHECK_THROWS_AS(legproj::interpolant(pw, 9, 4, *rule), std::invalid_argument);
}

TEST_CASE("sample function derivatives are consistent by finite differences")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    const Real h("1e-30");
    for (const auto& name : legproj::builtin_function_names()) {
        const auto f = legproj::builtin_function<Real>(name);
        for (int t = 0; t < 10; ++t) {
            const Real x(u(rng));
            for (int d = 0; d < std::min(f.max_order, 12); ++d) {
                const Real fd = (f(d, x + h) - f(d, x - h)) / (Real(2) * h);
                const Real exact = f(d + 1, x);
                CAPTURE(name);
                CAPTURE(d);
                CHECK(abs(fd - exact) <= Real(1e-6) * (abs(exact) > 1 ? abs(exact) : Real(1)));
            }
        }
    }
    CHECK_THROWS_AS(legproj::pow_seven_halves_function<double>()(4, 0.0), std::out_of_range);
    CHECK_THROWS_AS(legproj::builtin_function<double>("nope"), std::invalid_argument);
}

TEST_CASE("doubling the rule order leaves reported norms unchanged")
{
    for (const auto& name : legproj::builtin_function_names()) {
        const auto f = legproj::builtin_function<Real>(name);
        const int n = legproj::default_rule_order(f, 20);
        legproj::SampledFunction<Real> a(f, legproj::rule_for(f, n)), b(f, legproj::rule_for(f, 2 * n));
        for (int s = 0; s <= std::min(f.max_order, 21); ++s) {
            CAPTURE(name);
            CAPTURE(s);
            CHECK(abs(a.seminorm_sq(s) - b.seminorm_sq(s)) <= Real(1e-10) * b.seminorm_sq(s));
        }
        for (long p : {1L, 10L, 20L})
            for (int nu = 0; nu <= std::min(f.max_order, 3); ++nu) {
                const Real ea = a.error_seminorm_sq(p, nu), eb = b.error_seminorm_sq(p, nu);
                CHECK(abs(ea - eb) <= Real(1e-10) * eb);
            }
    }
}
