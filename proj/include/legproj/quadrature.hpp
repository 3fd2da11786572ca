#ifndef LEGPROJ_QUADRATURE_HPP
#define LEGPROJ_QUADRATURE_HPP

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "legproj/real.hpp"

namespace legproj {

/// Quadrature nodes and weights on (-1, 1), nodes ascending.
template <class T>
struct GaussRule {
    int order = 0;
    std::vector<T> nodes;
    std::vector<T> weights;

    template <class F>
    T integrate(F&& f) const
    {
        T sum(0);
        for (std::size_t j = 0; j < nodes.size(); ++j)
            sum += weights[j] * f(nodes[j]);
        return sum;
    }
};

/// Raised when Newton's method fails to locate a Gauss node.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// (L_n(x), L_n'(x)) by the three-term recurrence.
template <class T>
std::pair<T, T> legendre_with_derivative(int n, const T& x)
{
    T prev(1), cur(x);
    for (int k = 1; k < n; ++k) {
        T next = (T(2 * k + 1) * x * cur - T(k) * prev) / T(k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    T d = T(n) * (x * cur - prev) / (x * x - T(1));
    return {cur, d};
}

} // namespace detail

/// n-point Gauss-Legendre rule: nodes are the roots of L_n found by Newton's
/// method from Chebyshev-like initial guesses, weights 2/((1-x^2) L_n'(x)^2).
template <class T>
GaussRule<T> gauss_rule(int order)
{
    using std::abs;
    using std::cos;
    if (order < 1)
        throw std::invalid_argument("gauss_rule: order must be >= 1");
    GaussRule<T> rule;
    rule.order = order;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    const T pi = boost::math::constants::pi<T>();
    const T eps = std::numeric_limits<T>::epsilon();
    const int half = (order + 1) / 2;
    for (int i = 1; i <= half; ++i) {
        T x = cos(pi * (T(i) - T(1) / T(4)) / (T(order) + T(1) / T(2)));
        if (order % 2 == 1 && i == half)
            x = T(0);
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            auto [value, slope] = detail::legendre_with_derivative(order, x);
            const T dx = value / slope;
            x -= dx;
            if (abs(dx) <= T(4) * eps) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw QuadratureError("gauss_rule: Newton iteration did not converge for order " + std::to_string(order));
        const T slope = detail::legendre_with_derivative(order, x).second;
        const T w = T(2) / ((T(1) - x * x) * slope * slope);
        // i counts from the right end; mirror into ascending order.
        const auto hi = static_cast<std::size_t>(order - i);
        const auto lo = static_cast<std::size_t>(i - 1);
        rule.nodes[hi] = x;
        rule.weights[hi] = w;
        rule.nodes[lo] = -x;
        rule.weights[lo] = w;
    }
    return rule;
}

/// Substitution x = -1 + (1+u)^2/2 applied to a rule in u. Nodes cluster at
/// -1, so integrands with a (1+x)^{m+1/2} factor become polynomial in u.
template <class T>
GaussRule<T> left_graded(const GaussRule<T>& base)
{
    GaussRule<T> out;
    out.order = base.order;
    out.nodes.reserve(base.nodes.size());
    out.weights.reserve(base.nodes.size());
    for (std::size_t j = 0; j < base.nodes.size(); ++j) {
        const T s = T(1) + base.nodes[j];
        out.nodes.push_back(T(-1) + s * s / T(2));
        out.weights.push_back(base.weights[j] * s);
    }
    return out;
}

/// Process-wide cache of gauss_rule<T>(order).
template <class T>
std::shared_ptr<const GaussRule<T>> cached_gauss_rule(int order)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const GaussRule<T>>> cache;
    {
        std::scoped_lock lock(mutex);
        if (auto it = cache.find(order); it != cache.end())
            return it->second;
    }
    auto rule = std::make_shared<const GaussRule<T>>(gauss_rule<T>(order));
    std::scoped_lock lock(mutex);
    return cache.try_emplace(order, std::move(rule)).first->second;
}

extern template GaussRule<double> gauss_rule<double>(int);
extern template GaussRule<Real> gauss_rule<Real>(int);

} // namespace legproj

#endif // LEGPROJ_QUADRATURE_HPP
