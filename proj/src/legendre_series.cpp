#include "legproj/legendre_series.hpp"

namespace legproj {

Rational legendre_norm_sq(long i)
{
    if (i < 0)
        throw std::invalid_argument("legendre_norm_sq: negative degree");
    return Rational(2, 2 * i + 1);
}

Rational legendre_endpoint_derivative(long i, long k, Endpoint end)
{
    if (i < 0 || k < 0)
        throw std::invalid_argument("legendre_endpoint_derivative: negative index");
    if (k > i)
        return Rational(0);
    mpz_class den = factorial(k);
    den <<= static_cast<mp_bitcnt_t>(k);
    Rational v(falling_factorial_ratio(i + k, i - k), den);
    if (end == Endpoint::Left && (i + k) % 2 != 0)
        v = -v;
    return v;
}

} // namespace legproj
