#include "legproj/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "legproj/integrated_legendre.hpp"
#include "legproj/parallel.hpp"
#include "legproj/qfamily.hpp"
#include "legproj/quadrature.hpp"

namespace legproj {

namespace {

IdentityCheck exact_check(std::string identity, long p, long k, long n, const Rational& lhs, const Rational& rhs)
{
    return {std::move(identity), p, k, n, lhs.str(), rhs.str(), lhs == rhs};
}

IdentityCheck flag_check(std::string identity, long p, long k, long n, std::string lhs, std::string rhs, bool holds)
{
    return {std::move(identity), p, k, n, std::move(lhs), std::move(rhs), holds};
}

std::string band_string(const LegendreSeries& s)
{
    if (s.is_zero())
        return "[]";
    return "[" + std::to_string(*s.lo()) + "," + std::to_string(*s.hi()) + "]";
}

std::string band_string(long lo, long hi)
{
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

template <class Rows>
std::vector<IdentityCheck> flatten(Rows&& rows)
{
    std::vector<IdentityCheck> out;
    for (auto& r : rows)
        std::move(r.begin(), r.end(), std::back_inserter(out));
    return out;
}

} // namespace

LegendreSeries default_primitive_source(long i, long n)
{
    return i >= n ? psi(PsiIndex(i, n)) : primitive(i, n);
}

std::string inner_product_case(long k, long n)
{
    if (k > n)
        return "k>n";
    if (k == n)
        return "k=n";
    if (k == n - 1)
        return "k=n-1";
    return "k<=n-2";
}

std::vector<IdentityCheck> certify_psi_inner(long p_max, long n_max, const PrimitiveSource& source)
{
    const PrimitiveSource src = source ? source : PrimitiveSource(default_primitive_source);
    auto rows = parallel_map(static_cast<std::size_t>(p_max + 1), [&](std::size_t pi) {
        const long p = static_cast<long>(pi);
        std::vector<IdentityCheck> out;
        for (long n = 0; n <= std::min(p, n_max); ++n)
            for (long k = 0; k <= p; ++k) {
                const Rational lhs = inner_product(src(p + k, n), src(p - k, n));
                out.push_back(exact_check("psi_inner/" + inner_product_case(k, n), p, k, n, lhs, psi_inner_closed(p, k, n)));
            }
        return out;
    });
    return flatten(rows);
}

std::vector<IdentityCheck> certify_psi_norm(long p_max, long n_max)
{
    std::vector<IdentityCheck> out;
    for (long p = 0; p <= p_max; ++p)
        for (long n = 0; n <= std::min(p, n_max); ++n)
            out.push_back(exact_check("psi_norm", p, 0, n, norm_sq(psi(PsiIndex(p, n))), psi_norm_sq_closed(p, n)));
    return out;
}

std::vector<IdentityCheck> certify_psi_structure(long i_max, long n_max)
{
    std::vector<IdentityCheck> out;
    for (long i = 0; i <= i_max; ++i) {
        for (long n = 0; n <= std::min(i, n_max); ++n) {
            const LegendreSeries& s = psi(PsiIndex(i, n));
            out.push_back(flag_check("psi_band", i, 0, n, band_string(s), band_string(i - n, i + n), s.in_band(static_cast<std::size_t>(i - n), static_cast<std::size_t>(i + n))));

            const bool same = s == primitive(i, n);
            out.push_back(flag_check("psi_recurrence_vs_antiderivative", i, 0, n, same ? "equal" : "differ", "equal", same));

            if (n >= 1) {
                const bool chain = derivative(s) == psi(PsiIndex(i, n - 1));
                out.push_back(flag_check("psi_derivative_chain", i, 0, n, chain ? "equal" : "differ", "equal", chain));
            }

            for (long nu = 0; nu <= n + i + 1; ++nu)
                for (Endpoint e : {Endpoint::Left, Endpoint::Right}) {
                    const std::string tag = e == Endpoint::Right ? "psi_endpoint/+1" : "psi_endpoint/-1";
                    out.push_back(exact_check(tag, i, nu, n, endpoint_derivative(s, nu, e), psi_endpoint(PsiIndex(i, n), nu, e)));
                }
        }
    }
    return out;
}

std::vector<IdentityCheck> certify_qfamily(long p_max, long nu_max)
{
    auto rows = parallel_map(static_cast<std::size_t>(p_max + 1), [&](std::size_t pi) {
        const long p = static_cast<long>(pi);
        std::vector<IdentityCheck> out;
        QPoly q = q_base(p);
        for (long nu = 0; nu <= std::min(p, nu_max); ++nu) {
            if (nu > 0) {
                const RationalPair traces = q_endpoint_closed(p, nu);
                out.push_back(exact_check("q_endpoint_closed/+1", p, 0, nu, endpoint_derivative(q.series, nu, Endpoint::Right), traces.first));
                out.push_back(exact_check("q_endpoint_closed/-1", p, 0, nu, endpoint_derivative(q.series, nu, Endpoint::Left), traces.second));
                q = q_next(q);
                const RationalPair ab = alpha_beta_closed(p, nu);
                out.push_back(exact_check("alpha_closed", p, 0, nu, q.alpha_beta.back().first, ab.first));
                out.push_back(exact_check("beta_closed", p, 0, nu, q.alpha_beta.back().second, ab.second));
            }
            const LegendreSeries& s = q.series;
            out.push_back(exact_check("q_trace/+1", p, 0, nu, endpoint_derivative(s, 0, Endpoint::Right), Rational(1)));
            out.push_back(exact_check("q_trace/-1", p, 0, nu, endpoint_derivative(s, 0, Endpoint::Left), Rational(0)));
            for (long i = 1; i <= nu; ++i) {
                out.push_back(exact_check("q_derivative_trace/+1", p, i, nu, endpoint_derivative(s, i, Endpoint::Right), Rational(0)));
                out.push_back(exact_check("q_derivative_trace/-1", p, i, nu, endpoint_derivative(s, i, Endpoint::Left), Rational(0)));
            }
            out.push_back(flag_check("q_band", p, 0, nu, band_string(s), band_string(p - nu, p + nu + 1), s.in_band(static_cast<std::size_t>(p - nu), static_cast<std::size_t>(p + nu + 1))));
        }
        return out;
    });
    return flatten(rows);
}

std::vector<IdentityCheck> certify_wz(long p_max, long nu_max)
{
    auto rows = parallel_map(static_cast<std::size_t>(p_max + 1), [&](std::size_t pi) {
        const long p = static_cast<long>(pi);
        std::vector<IdentityCheck> out;
        if (p < 1)
            return out;
        const QPoly base = q_base(p);
        QPoly q = base;
        for (long nu = 1; nu <= std::min(p, nu_max); ++nu) {
            q = q_next(q);
            const Rational closed = wz_sum_closed(p, nu);
            out.push_back(exact_check("wz_sum", p, 0, nu, wz_sum(p, nu), closed));
            if (nu % 2 == 0)
                out.push_back(exact_check("wz_sum_even_zero", p, 0, nu, closed, Rational(0)));
            // q_{p,0}^{(nu+1)}(1) - q_{p,nu}^{(nu+1)}(1), independent of either formula
            const Rational from_family = endpoint_derivative(base.series, nu + 1, Endpoint::Right)
                                       - endpoint_derivative(q.series, nu + 1, Endpoint::Right);
            out.push_back(exact_check("wz_sum_from_family", p, 0, nu, from_family, closed));
        }
        return out;
    });
    return flatten(rows);
}

std::vector<IdentityCheck> certify_q_norms(long p_max)
{
    std::vector<IdentityCheck> out;
    for (long p = 0; p <= p_max; ++p) {
        out.push_back(exact_check("q0_norm", p, 0, 0, q_norm_sq(q_base(p)), q0_norm_sq_closed(p)));
        if (p >= 1)
            out.push_back(exact_check("q1_norm", p, 0, 1, q_norm_sq(q_poly(p, 1)), q1_norm_sq_closed(p)));
    }
    return out;
}

LegendreSeries random_series(int max_degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    const int d = degree(rng);
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j)
        c.emplace_back(num(rng), den(rng));
    if (c.back().is_zero())
        c.back() = Rational(1);
    return LegendreSeries(std::move(c));
}

std::vector<IdentityCheck> certify_quadrature_oracle(int pairs, int max_degree, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const auto rule = cached_gauss_rule<double>(max_degree + 1);
    std::vector<IdentityCheck> out;
    for (int t = 0; t < pairs; ++t) {
        const LegendreSeries a = random_series(max_degree, rng);
        const LegendreSeries b = random_series(max_degree, rng);
        const double exact = inner_product(a, b).to_double();
        const double quad = rule->integrate([&](double x) { return evaluate(a, x) * evaluate(b, x); });
        const bool ok = std::abs(quad - exact) <= 1e-12 * std::abs(exact);
        std::ostringstream l, r;
        l.precision(17);
        r.precision(17);
        l << exact;
        r << quad;
        out.push_back(flag_check("quadrature_oracle", static_cast<long>(a.size()) - 1, t, static_cast<long>(b.size()) - 1, l.str(), r.str(), ok));
    }
    return out;
}

} // namespace legproj
