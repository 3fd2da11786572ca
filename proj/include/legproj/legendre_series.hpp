#ifndef LEGPROJ_LEGENDRE_SERIES_HPP
#define LEGPROJ_LEGENDRE_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "legproj/rational.hpp"
#include "legproj/real.hpp"

namespace legproj {

/// One of the two endpoints of (-1, 1).
enum class Endpoint : int { Left = -1, Right = 1 };

constexpr int sign_of(Endpoint e) { return static_cast<int>(e); }

/// Polynomial stored by its coefficients in the Legendre basis {L_0, L_1, ...}.
///
/// Trailing zero coefficients are never stored, so `coeffs().size() - 1` is the
/// degree of a nonzero series and the empty series is the zero polynomial.
template <class Scalar>
class BasicLegendreSeries {
public:
    using scalar_type = Scalar;

    BasicLegendreSeries() = default;

    explicit BasicLegendreSeries(std::vector<Scalar> coeffs)
        : coeffs_(std::move(coeffs))
    {
        trim();
    }

    /// c * L_i
    static BasicLegendreSeries basis(std::size_t i, Scalar c = Scalar(1))
    {
        std::vector<Scalar> v(i + 1, Scalar(0));
        v[i] = std::move(c);
        return BasicLegendreSeries(std::move(v));
    }

    [[nodiscard]] std::span<const Scalar> coeffs() const { return coeffs_; }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of L_j; zero past the stored range.
    [[nodiscard]] Scalar coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Scalar(0); }

    /// Smallest index with a nonzero coefficient.
    [[nodiscard]] std::optional<std::size_t> lo() const
    {
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            if (!is_zero_scalar(coeffs_[j]))
                return j;
        return std::nullopt;
    }

    /// Largest index with a nonzero coefficient, i.e. the degree.
    [[nodiscard]] std::optional<std::size_t> hi() const
    {
        if (coeffs_.empty())
            return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Membership in span{L_i, ..., L_j}. The zero series belongs to every band.
    [[nodiscard]] bool in_band(std::size_t i, std::size_t j) const
    {
        if (is_zero())
            return true;
        return *lo() >= i && *hi() <= j;
    }

    /// Keeps the coefficients of L_0..L_p.
    [[nodiscard]] BasicLegendreSeries truncated(std::size_t p) const
    {
        if (coeffs_.size() <= p + 1)
            return *this;
        return BasicLegendreSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(p + 1)));
    }

    BasicLegendreSeries& operator+=(const BasicLegendreSeries& rhs)
    {
        if (rhs.coeffs_.size() > coeffs_.size())
            coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            coeffs_[j] += rhs.coeffs_[j];
        trim();
        return *this;
    }

    BasicLegendreSeries& operator-=(const BasicLegendreSeries& rhs)
    {
        if (rhs.coeffs_.size() > coeffs_.size())
            coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            coeffs_[j] -= rhs.coeffs_[j];
        trim();
        return *this;
    }

    BasicLegendreSeries& operator*=(const Scalar& c)
    {
        for (auto& x : coeffs_)
            x *= c;
        trim();
        return *this;
    }

    friend BasicLegendreSeries operator+(BasicLegendreSeries a, const BasicLegendreSeries& b) { return a += b; }
    friend BasicLegendreSeries operator-(BasicLegendreSeries a, const BasicLegendreSeries& b) { return a -= b; }
    friend BasicLegendreSeries operator*(BasicLegendreSeries a, const Scalar& c) { return a *= c; }
    friend BasicLegendreSeries operator*(const Scalar& c, BasicLegendreSeries a) { return a *= c; }

    friend bool operator==(const BasicLegendreSeries& a, const BasicLegendreSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim()
    {
        while (!coeffs_.empty() && is_zero_scalar(coeffs_.back()))
            coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using LegendreSeries = BasicLegendreSeries<Rational>;

/// ||L_i||^2 = 2/(2i+1)
Rational legendre_norm_sq(long i);

/// L_i^{(k)}(+-1) = (+-1)^{i+k} (i+k)! / (2^k k! (i-k)!), and 0 for k > i.
Rational legendre_endpoint_derivative(long i, long k, Endpoint end);

namespace detail {

template <class T, class S>
T coefficient_as(const S& c)
{
    if constexpr (std::is_same_v<S, Rational>)
        return from_rational<T>(c);
    else
        return static_cast<T>(c);
}

} // namespace detail

/// Exact L^2(-1,1) inner product: sum_j a_j b_j 2/(2j+1).
template <class Scalar>
Scalar inner_product(const BasicLegendreSeries<Scalar>& a, const BasicLegendreSeries<Scalar>& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    Scalar sum(0);
    const auto ca = a.coeffs();
    const auto cb = b.coeffs();
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero_scalar(ca[j]) || is_zero_scalar(cb[j]))
            continue;
        sum += ca[j] * cb[j] * Scalar(2) / Scalar(static_cast<long>(2 * j + 1));
    }
    return sum;
}

template <class Scalar>
Scalar norm_sq(const BasicLegendreSeries<Scalar>& a)
{
    return inner_product(a, a);
}

/// d/dx in the Legendre basis, using L_i' = sum_{j<i, i-j odd} (2j+1) L_j.
template <class Scalar>
BasicLegendreSeries<Scalar> derivative(const BasicLegendreSeries<Scalar>& a)
{
    const std::size_t n = a.size();
    if (n <= 1)
        return {};
    const auto c = a.coeffs();
    // tail[j] = c[j+1] + c[j+3] + ...
    std::vector<Scalar> tail(n + 1, Scalar(0));
    for (std::size_t j = n - 1; j-- > 0;)
        tail[j] = c[j + 1] + tail[j + 2];
    std::vector<Scalar> out(n - 1, Scalar(0));
    for (std::size_t j = 0; j + 1 < n; ++j)
        out[j] = Scalar(static_cast<long>(2 * j + 1)) * tail[j];
    return BasicLegendreSeries<Scalar>(std::move(out));
}

template <class Scalar>
BasicLegendreSeries<Scalar> derivative(BasicLegendreSeries<Scalar> a, int order)
{
    for (int m = 0; m < order && !a.is_zero(); ++m)
        a = derivative(a);
    return a;
}

/// Primitive vanishing at -1: L_0 -> L_0 + L_1, L_i -> (L_{i+1} - L_{i-1})/(2i+1).
template <class Scalar>
BasicLegendreSeries<Scalar> antiderivative(const BasicLegendreSeries<Scalar>& a)
{
    if (a.is_zero())
        return {};
    const auto c = a.coeffs();
    std::vector<Scalar> out(c.size() + 1, Scalar(0));
    out[0] += c[0];
    out[1] += c[0];
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (is_zero_scalar(c[i]))
            continue;
        const Scalar t = c[i] / Scalar(static_cast<long>(2 * i + 1));
        out[i + 1] += t;
        out[i - 1] -= t;
    }
    return BasicLegendreSeries<Scalar>(std::move(out));
}

template <class Scalar>
BasicLegendreSeries<Scalar> antiderivative(BasicLegendreSeries<Scalar> a, int times)
{
    for (int m = 0; m < times; ++m)
        a = antiderivative(a);
    return a;
}

/// Clenshaw evaluation of the series at x.
template <class T, class Scalar>
T evaluate(const BasicLegendreSeries<Scalar>& a, const T& x)
{
    const auto c = a.coeffs();
    T b1(0), b2(0);
    for (std::size_t k = c.size(); k-- > 0;) {
        // L_{k+1} = alpha_k L_k + beta_k L_{k-1}, alpha_k = (2k+1)x/(k+1), beta_k = -k/(k+1)
        const T alpha = T(static_cast<long>(2 * k + 1)) * x / T(static_cast<long>(k + 1));
        const T beta_next = T(-static_cast<long>(k + 1)) / T(static_cast<long>(k + 2));
        T b0 = detail::coefficient_as<T>(c[k]) + alpha * b1 + beta_next * b2;
        b2 = std::move(b1);
        b1 = std::move(b0);
    }
    return b1;
}

/// a^{(k)}(+-1), summed from the closed-form endpoint derivatives of each L_i.
template <class Scalar>
Scalar endpoint_derivative(const BasicLegendreSeries<Scalar>& a, long k, Endpoint end)
{
    if (k < 0)
        throw std::invalid_argument("endpoint_derivative: negative order");
    const auto c = a.coeffs();
    Scalar sum(0);
    for (std::size_t i = static_cast<std::size_t>(k); i < c.size(); ++i) {
        if (is_zero_scalar(c[i]))
            continue;
        sum += c[i] * detail::coefficient_as<Scalar>(legendre_endpoint_derivative(static_cast<long>(i), k, end));
    }
    return sum;
}

/// L_0(x), ..., L_n(x) by the three-term recurrence.
template <class T>
std::vector<T> legendre_values(std::size_t n, const T& x)
{
    std::vector<T> v;
    v.reserve(n + 1);
    v.emplace_back(1);
    if (n >= 1)
        v.push_back(x);
    for (std::size_t k = 1; k < n; ++k) {
        const T kk(static_cast<long>(k));
        v.push_back((T(static_cast<long>(2 * k + 1)) * x * v[k] - kk * v[k - 1]) / T(static_cast<long>(k + 1)));
    }
    return v;
}

/// Floating-point copy of an exact series.
template <class T>
BasicLegendreSeries<T> to_floating(const LegendreSeries& a)
{
    std::vector<T> out;
    out.reserve(a.size());
    for (const auto& c : a.coeffs())
        out.push_back(from_rational<T>(c));
    return BasicLegendreSeries<T>(std::move(out));
}

} // namespace legproj

#endif // LEGPROJ_LEGENDRE_SERIES_HPP
