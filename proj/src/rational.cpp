#include "legproj/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace legproj {

Rational::Rational(long num, long den)
    : value_(num, den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : value_(std::move(num), std::move(den))
{
    if (value_.get_den() == 0)
        throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value)
    : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpz_class(s));
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::reciprocal() const
{
    if (is_zero())
        throw std::domain_error("Rational: reciprocal of zero");
    return Rational(mpq_class(1 / value_));
}

std::string Rational::str() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

mpz_class falling_factorial_ratio(long a, long b)
{
    if (b < 0 || a < b)
        throw std::invalid_argument("falling_factorial_ratio: need a >= b >= 0");
    mpz_class out = 1;
    for (long m = b + 1; m <= a; ++m)
        out *= m;
    return out;
}

Rational factorial_ratio(long a, long b)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("factorial_ratio: negative argument");
    if (a >= b)
        return Rational(falling_factorial_ratio(a, b));
    return Rational(mpz_class(1), falling_factorial_ratio(b, a));
}

mpz_class factorial(long n)
{
    return falling_factorial_ratio(n, 0);
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0)
        return pow(base.reciprocal(), -exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

} // namespace legproj
