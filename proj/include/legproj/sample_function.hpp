#ifndef LEGPROJ_SAMPLE_FUNCTION_HPP
#define LEGPROJ_SAMPLE_FUNCTION_HPP

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "legproj/legendre_series.hpp"

namespace legproj {

/// Which quadrature family resolves a function's integrals.
enum class QuadratureShape {
    Standard,   // plain Gauss-Legendre
    LeftGraded  // nodes clustered at -1 for (1+x)^{m+1/2} behaviour
};

/// Test function on [-1, 1] with closed-form derivatives up to `max_order`.
template <class T>
struct SampleFunction {
    std::string name;
    int max_order = 0;
    QuadratureShape shape = QuadratureShape::Standard;
    /// Smallest rule order at which integrals involving this function saturate.
    int min_quadrature_order = 0;
    std::function<T(int, const T&)> eval;

    /// d-th derivative at x.
    T operator()(int d, const T& x) const
    {
        if (d < 0 || d > max_order)
            throw std::out_of_range(name + ": derivative order " + std::to_string(d) + " exceeds max_order " + std::to_string(max_order));
        return eval(d, x);
    }
};

/// Declared order cap for the entire/analytic built-ins.
inline constexpr int kAnalyticMaxOrder = 64;

template <class T>
SampleFunction<T> exp_function()
{
    return {"exp", kAnalyticMaxOrder, QuadratureShape::Standard, 0, [](int, const T& x) {
                using std::exp;
                return T(exp(x));
            }};
}

/// sin(3x); d-th derivative 3^d sin(3x + d pi/2).
template <class T>
SampleFunction<T> sin3_function()
{
    return {"sin3x", kAnalyticMaxOrder, QuadratureShape::Standard, 0, [](int d, const T& x) {
                using std::pow;
                using std::sin;
                const T half_pi = boost::math::constants::half_pi<T>();
                return T(pow(T(3), d) * sin(T(3) * x + T(d) * half_pi));
            }};
}

/// 1/(1+25x^2); d-th derivative d! 5^d cos((d+1) atan(5x) + d pi/2) / (1+25x^2)^{(d+1)/2}.
template <class T>
SampleFunction<T> runge_function()
{
    return {"runge", kAnalyticMaxOrder, QuadratureShape::Standard, 320, [](int d, const T& x) {
                using std::atan;
                using std::cos;
                using std::pow;
                using std::sqrt;
                const T half_pi = boost::math::constants::half_pi<T>();
                const T theta = atan(T(5) * x);
                const T r = sqrt(T(1) + T(25) * x * x);
                T scale(1);
                for (int m = 2; m <= d; ++m)
                    scale *= T(m);
                scale *= pow(T(5), d);
                return T(scale * cos(T(d + 1) * theta + T(d) * half_pi) / pow(r, d + 1));
            }};
}

/// (1+x)^{7/2}: in H^3(-1,1) but not H^4, so derivatives stop at order 3.
template <class T>
SampleFunction<T> pow_seven_halves_function()
{
    return {"pow7half", 3, QuadratureShape::LeftGraded, 0, [](int d, const T& x) {
                using std::sqrt;
                static const double coef[4] = {1.0, 3.5, 8.75, 13.125};
                const T s = T(1) + x;
                T v = sqrt(s);
                for (int m = 0; m < 3 - d; ++m)
                    v *= s;
                return T(T(coef[d]) * v);
            }};
}

/// Polynomial given exactly in the Legendre basis.
template <class T>
SampleFunction<T> polynomial_function(std::string name, const LegendreSeries& exact)
{
    auto derivs = std::make_shared<std::vector<BasicLegendreSeries<T>>>();
    BasicLegendreSeries<T> cur = to_floating<T>(exact);
    const int degree = exact.is_zero() ? 0 : static_cast<int>(*exact.hi());
    for (int d = 0; d <= degree + 1; ++d) {
        derivs->push_back(cur);
        cur = derivative(cur);
    }
    return {std::move(name), kAnalyticMaxOrder, QuadratureShape::Standard, 0, [derivs](int d, const T& x) {
                if (static_cast<std::size_t>(d) >= derivs->size())
                    return T(0);
                return evaluate((*derivs)[static_cast<std::size_t>(d)], x);
            }};
}

inline std::vector<std::string> builtin_function_names()
{
    return {"exp", "sin3x", "runge", "pow7half"};
}

template <class T>
SampleFunction<T> builtin_function(std::string_view name)
{
    if (name == "exp")
        return exp_function<T>();
    if (name == "sin3x")
        return sin3_function<T>();
    if (name == "runge")
        return runge_function<T>();
    if (name == "pow7half")
        return pow_seven_halves_function<T>();
    throw std::invalid_argument("unknown sample function '" + std::string(name) + "'");
}

template <class T>
std::vector<SampleFunction<T>> builtin_functions()
{
    std::vector<SampleFunction<T>> out;
    for (const auto& n : builtin_function_names())
        out.push_back(builtin_function<T>(n));
    return out;
}

} // namespace legproj

#endif // LEGPROJ_SAMPLE_FUNCTION_HPP
