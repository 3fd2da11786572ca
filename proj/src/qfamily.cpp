#include "legproj/qfamily.hpp"

#include <stdexcept>
#include <string>

#include "legproj/integrated_legendre.hpp"

namespace legproj {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

// 1 / ((-2)^{nu+1} nu!)
Rational lemma_prefactor(long nu)
{
    mpz_class den = factorial(nu);
    den <<= static_cast<mp_bitcnt_t>(nu + 1);
    Rational f(mpz_class(1), den);
    return (nu + 1) % 2 == 0 ? f : -f;
}

Rational sign_power(long e)
{
    return e % 2 == 0 ? Rational(1) : Rational(-1);
}

Rational wz_sum_with_sign(long p, long nu, int leading_sign)
{
    require(nu >= 1 && p >= nu, "wz_sum: need p >= nu >= 1");
    Rational sum(0);
    for (long k = 1; k <= nu; ++k) {
        mpz_class den = factorial(k) * factorial(nu + 1 - k);
        den <<= static_cast<mp_bitcnt_t>(nu + 2);
        Rational term(falling_factorial_ratio(p + k, p - k) * falling_factorial_ratio(p + 1 + nu - k, p - nu - 1 + k), den);
        term *= Rational(p + 1 + k, p + 1 - k) + Rational(p + nu + 2 - k, p - nu + k);
        const bool negative = (k % 2 == 0) == (leading_sign > 0);
        if (negative)
            term = -term;
        sum += term;
    }
    return sum;
}

} // namespace

QPoly q_base(long p)
{
    require(p >= 0, "q_base: p must be >= 0");
    QPoly q;
    q.p = p;
    q.nu = 0;
    q.series = LegendreSeries::basis(static_cast<std::size_t>(p), Rational(1, 2))
             + LegendreSeries::basis(static_cast<std::size_t>(p + 1), Rational(1, 2));
    return q;
}

QPoly q_next(const QPoly& q)
{
    const long p = q.p;
    const long order = q.nu + 1;
    require(p >= order, "q_next: need p >= nu + 1 (p=" + std::to_string(p) + ", nu=" + std::to_string(q.nu) + ")");

    const LegendreSeries& a = psi(PsiIndex(p, order));
    const LegendreSeries& b = psi(PsiIndex(p + 1, order));

    // [a(+1) b(+1)] [alpha]   [-q(+1)]
    // [a(-1) b(-1)] [beta ] = [-q(-1)]   (all order-`order` derivatives)
    const Rational a_r = endpoint_derivative(a, order, Endpoint::Right);
    const Rational b_r = endpoint_derivative(b, order, Endpoint::Right);
    const Rational a_l = endpoint_derivative(a, order, Endpoint::Left);
    const Rational b_l = endpoint_derivative(b, order, Endpoint::Left);
    const Rational rhs_r = -endpoint_derivative(q.series, order, Endpoint::Right);
    const Rational rhs_l = -endpoint_derivative(q.series, order, Endpoint::Left);

    const Rational det = a_r * b_l - a_l * b_r;
    if (det.is_zero())
        throw std::runtime_error("q_next: singular endpoint system");
    const Rational alpha = (rhs_r * b_l - rhs_l * b_r) / det;
    const Rational beta = (a_r * rhs_l - a_l * rhs_r) / det;

    QPoly out;
    out.p = p;
    out.nu = order;
    out.series = q.series + alpha * a + beta * b;
    out.alpha_beta = q.alpha_beta;
    out.alpha_beta.push_back({alpha, beta});
    return out;
}

QPoly q_poly(long p, long nu)
{
    require(nu >= 0 && p >= nu, "q_poly: need p >= nu >= 0");
    QPoly q = q_base(p);
    while (q.nu < nu)
        q = q_next(q);
    return q;
}

RationalPair q_endpoint_closed(long p, long nu)
{
    require(nu >= 1 && p >= nu, "q_endpoint_closed: need p >= nu >= 1");
    const Rational pre = lemma_prefactor(nu);
    const Rational big = Rational(falling_factorial_ratio(p + 1 + nu, p + 1 - nu));
    const Rational small = Rational(falling_factorial_ratio(p + nu, p - nu));
    return {pre * (big + small), sign_power(p) * pre * (big - small)};
}

RationalPair alpha_beta_closed(long p, long nu)
{
    require(nu >= 1 && p >= nu, "alpha_beta_closed: need p >= nu >= 1");
    const Rational pre = -lemma_prefactor(nu);
    return {pre * Rational(falling_factorial_ratio(p + 1 + nu, p + 1 - nu)),
            pre * Rational(falling_factorial_ratio(p + nu, p - nu))};
}

Rational wz_sum(long p, long nu)
{
    return wz_sum_with_sign(p, nu, +1);
}

Rational wz_sum_alternate_sign(long p, long nu)
{
    return wz_sum_with_sign(p, nu, -1);
}

Rational wz_sum_closed(long p, long nu)
{
    require(nu >= 1 && p >= nu, "wz_sum_closed: need p >= nu >= 1");
    if (nu % 2 == 0)
        return Rational(0);
    // ((-1)^nu - 1) = -2 for odd nu, so S = (p+1)(p+nu+1)! / ((p-nu)! 2^nu (nu+1)!)
    mpz_class den = factorial(nu + 1);
    den <<= static_cast<mp_bitcnt_t>(nu);
    return Rational(mpz_class(p + 1) * falling_factorial_ratio(p + nu + 1, p - nu), den);
}

Rational q_norm_sq(const QPoly& q)
{
    return norm_sq(q.series);
}

Rational q0_norm_sq_closed(long p)
{
    require(p >= 0, "q0_norm_sq_closed: p must be >= 0");
    return Rational(2 * (p + 1), (2 * p + 1) * (2 * p + 3));
}

Rational q1_norm_sq_closed(long p)
{
    require(p >= 1, "q1_norm_sq_closed: p must be >= 1");
    const mpz_class P = p;
    return Rational(P * (P + 1) * (P + 2) * (P * P + 2 * P + 10),
                    (2 * P - 1) * (2 * P + 1) * (2 * P + 3) * (2 * P + 5));
}

std::vector<GrowthRow> growth_scan(long nu, long p_lo, long p_hi)
{
    require(nu >= 0, "growth_scan: nu must be >= 0");
    require(p_lo >= 1 && p_lo >= nu, "growth_scan: need p_lo >= max(nu, 1)");
    require(p_hi >= p_lo, "growth_scan: empty p range");
    std::vector<GrowthRow> rows;
    rows.reserve(static_cast<std::size_t>(p_hi - p_lo + 1));
    for (long p = p_lo; p <= p_hi; ++p) {
        GrowthRow row;
        row.p = p;
        row.nu = nu;
        row.norm_sq = q_norm_sq(q_poly(p, nu));
        row.ratio = row.norm_sq / pow(Rational(p), 2 * nu - 1);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace legproj
