#ifndef LEGPROJ_RATIONAL_HPP
#define LEGPROJ_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace legproj {

/// Exact signed rational number of arbitrary precision.
///
/// Always held in lowest terms with a positive denominator. Arithmetic never
/// rounds.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpz_class num, mpz_class den = 1);
    explicit Rational(mpq_class value);

    /// Parses `num/den` or a bare integer `num`.
    static Rational parse(std::string_view text);

    /// Integer value `num` as a rational.
    static Rational integer(const mpz_class& num) { return Rational(num); }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] Rational abs() const { return Rational(::abs(value_)); }
    [[nodiscard]] Rational reciprocal() const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    /// Renders as `num/den`, including `n/1` for integers.
    [[nodiscard]] std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

/// a!/b! for a >= b >= 0, as a product over the gap (b, a].
mpz_class falling_factorial_ratio(long a, long b);

/// a!/b! for arbitrary a, b >= 0, returned exactly (a < b gives a reciprocal).
Rational factorial_ratio(long a, long b);

/// Integer power of a rational; negative exponents invert.
Rational pow(const Rational& base, long exponent);

mpz_class factorial(long n);

} // namespace legproj

#endif // LEGPROJ_RATIONAL_HPP
