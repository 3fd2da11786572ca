#ifndef LEGPROJ_REAL_HPP
#define LEGPROJ_REAL_HPP

#include <cmath>
#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include "legproj/rational.hpp"

namespace legproj {

/// Floating-point type used by the bound harness: 100 significant decimal
/// digits, enough to resolve projection errors near 1e-55 without a roundoff
/// floor.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<100, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;

template <class T>
T from_rational(const Rational& q);

template <>
inline double from_rational<double>(const Rational& q)
{
    return mpq_get_d(q.raw().get_mpq_t());
}

template <>
inline Real from_rational<Real>(const Rational& q)
{
    Real out;
    mpfr_set_q(out.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
    return out;
}

template <>
inline Rational from_rational<Rational>(const Rational& q)
{
    return q;
}

inline double to_double(double x) { return x; }
inline double to_double(const Real& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.to_double(); }

template <class T>
bool is_zero_scalar(const T& x)
{
    return x == 0;
}

template <>
inline bool is_zero_scalar<Rational>(const Rational& x)
{
    return x.is_zero();
}

} // namespace legproj

#endif // LEGPROJ_REAL_HPP
