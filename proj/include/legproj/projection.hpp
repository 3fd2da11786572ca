#ifndef LEGPROJ_PROJECTION_HPP
#define LEGPROJ_PROJECTION_HPP

#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "legproj/integrated_legendre.hpp"
#include "legproj/legendre_series.hpp"
#include "legproj/quadrature.hpp"
#include "legproj/sample_function.hpp"

namespace legproj {

/// pi_p w as its Legendre coefficients b_0..b_p.
template <class T>
struct ProjectionResult {
    long p = 0;
    BasicLegendreSeries<T> series;
};

/// Exact projection of a polynomial onto P_p: truncation of the expansion.
inline LegendreSeries project_exact(const LegendreSeries& a, long p)
{
    if (p < 0)
        throw std::invalid_argument("project_exact: p must be >= 0");
    return a.truncated(static_cast<std::size_t>(p));
}

/// A sample function tabulated on one quadrature rule. Derivative samples,
/// Legendre values at the nodes, projections and seminorms are computed on
/// first use and reused. Not safe for concurrent use; give each worker its own.
template <class T>
class SampledFunction {
public:
    SampledFunction(SampleFunction<T> f, std::shared_ptr<const GaussRule<T>> rule)
        : f_(std::move(f))
        , rule_(std::move(rule))
    {
    }

    [[nodiscard]] const SampleFunction<T>& function() const { return f_; }
    [[nodiscard]] const GaussRule<T>& rule() const { return *rule_; }

    /// f^{(d)} at every node.
    const std::vector<T>& values(int d)
    {
        auto it = values_.find(d);
        if (it == values_.end()) {
            std::vector<T> v;
            v.reserve(rule_->nodes.size());
            for (const auto& x : rule_->nodes)
                v.push_back(f_(d, x));
            it = values_.emplace(d, std::move(v)).first;
        }
        return it->second;
    }

    /// Coefficients of pi_p(f^{(d)}).
    const BasicLegendreSeries<T>& derivative_projection(int d, long p)
    {
        if (p < 0)
            throw std::invalid_argument("projection degree must be >= 0");
        const auto key = std::make_pair(d, p);
        auto it = projections_.find(key);
        if (it == projections_.end()) {
            const auto& fv = values(d);
            ensure_table(p);
            std::vector<T> b(static_cast<std::size_t>(p + 1), T(0));
            for (std::size_t j = 0; j < fv.size(); ++j) {
                const T wf = rule_->weights[j] * fv[j];
                for (std::size_t i = 0; i <= static_cast<std::size_t>(p); ++i)
                    b[i] += wf * table_[j][i];
            }
            for (std::size_t i = 0; i < b.size(); ++i)
                b[i] *= T(static_cast<long>(2 * i + 1)) / T(2);
            it = projections_.emplace(key, BasicLegendreSeries<T>(std::move(b))).first;
        }
        return it->second;
    }

    ProjectionResult<T> projection(long p) { return {p, derivative_projection(0, p)}; }

    /// Values of a series at every node.
    std::vector<T> series_values(const BasicLegendreSeries<T>& s)
    {
        const long deg = s.is_zero() ? 0 : static_cast<long>(*s.hi());
        ensure_table(deg);
        const auto c = s.coeffs();
        std::vector<T> out(rule_->nodes.size(), T(0));
        for (std::size_t j = 0; j < out.size(); ++j)
            for (std::size_t i = 0; i < c.size(); ++i)
                out[j] += c[i] * table_[j][i];
        return out;
    }

    /// |f|_s^2
    T seminorm_sq(int s)
    {
        auto it = seminorms_.find(s);
        if (it == seminorms_.end()) {
            const auto& fv = values(s);
            T sum(0);
            for (std::size_t j = 0; j < fv.size(); ++j)
                sum += rule_->weights[j] * fv[j] * fv[j];
            it = seminorms_.emplace(s, sum).first;
        }
        return it->second;
    }

    /// |f - g|_nu^2 for a polynomial g.
    T distance_seminorm_sq(const BasicLegendreSeries<T>& g, int nu)
    {
        const auto gv = series_values(derivative(g, nu));
        const auto& fv = values(nu);
        T sum(0);
        for (std::size_t j = 0; j < fv.size(); ++j) {
            const T e = fv[j] - gv[j];
            sum += rule_->weights[j] * e * e;
        }
        return sum;
    }

    /// |f - pi_p f|_nu^2
    T error_seminorm_sq(long p, int nu) { return distance_seminorm_sq(derivative_projection(0, p), nu); }

    /// |(f - pi_p f)^{(nu)}(+-1)|
    T error_trace(long p, int nu, Endpoint end)
    {
        using std::abs;
        const T x(sign_of(end));
        return abs(f_(nu, x) - endpoint_derivative(derivative_projection(0, p), nu, end));
    }

    /// I_{p,k} f: k-th derivative equal to pi_{p-k}(f^{(k)}), derivatives of
    /// order < k matching f at -1.
    BasicLegendreSeries<T> interpolant(long p, int k)
    {
        if (k < 0 || p < k)
            throw std::invalid_argument("interpolant: need p >= k >= 0 (p=" + std::to_string(p) + ", k=" + std::to_string(k) + ")");
        if (k > f_.max_order)
            throw std::invalid_argument("interpolant: " + f_.name + " lacks derivatives of order " + std::to_string(k));
        BasicLegendreSeries<T> out = antiderivative(derivative_projection(k, p - k), k);
        // (1+x)^i / i! has unit i-th derivative at -1 and vanishing lower ones.
        for (int i = 0; i < k; ++i)
            out += f_(i, T(-1)) * to_floating<T>(primitive(0, i));
        return out;
    }

private:
    void ensure_table(long p)
    {
        if (table_degree_ >= p)
            return;
        table_.clear();
        table_.reserve(rule_->nodes.size());
        for (const auto& x : rule_->nodes)
            table_.push_back(legendre_values(static_cast<std::size_t>(p), x));
        table_degree_ = p;
    }

    SampleFunction<T> f_;
    std::shared_ptr<const GaussRule<T>> rule_;
    std::map<int, std::vector<T>> values_;
    std::map<std::pair<int, long>, BasicLegendreSeries<T>> projections_;
    std::map<int, T> seminorms_;
    std::vector<std::vector<T>> table_;
    long table_degree_ = -1;
};

namespace detail {

template <class T>
SampledFunction<T> sample_on(const SampleFunction<T>& f, const GaussRule<T>& rule)
{
    return SampledFunction<T>(f, std::make_shared<const GaussRule<T>>(rule));
}

} // namespace detail

/// b_i = (2i+1)/2 <f, L_i>, i = 0..p, by quadrature.
template <class T>
ProjectionResult<T> project(const SampleFunction<T>& f, long p, const GaussRule<T>& rule)
{
    return detail::sample_on(f, rule).projection(p);
}

template <class T>
BasicLegendreSeries<T> interpolant(const SampleFunction<T>& f, long p, int k, const GaussRule<T>& rule)
{
    return detail::sample_on(f, rule).interpolant(p, k);
}

/// |f|_s = ||f^{(s)}||_0
template <class T>
T sobolev_seminorm(const SampleFunction<T>& f, int s, const GaussRule<T>& rule)
{
    using std::sqrt;
    return sqrt(detail::sample_on(f, rule).seminorm_sq(s));
}

/// |f - pi_p f|_nu
template <class T>
T error_seminorm(const SampleFunction<T>& f, long p, int nu, const GaussRule<T>& rule)
{
    using std::sqrt;
    return sqrt(detail::sample_on(f, rule).error_seminorm_sq(p, nu));
}

/// |f^{(nu)}(+-1) - (pi_p f)^{(nu)}(+-1)|
template <class T>
T error_trace(const SampleFunction<T>& f, long p, int nu, Endpoint end, const GaussRule<T>& rule)
{
    return detail::sample_on(f, rule).error_trace(p, nu, end);
}

/// Rule order used for a function at degree p: p + 24, raised to the
/// function's saturation floor, or `override_order` when positive.
template <class T>
int default_rule_order(const SampleFunction<T>& f, long p, int override_order = 0)
{
    if (override_order > 0)
        return override_order;
    return std::max(static_cast<int>(p) + 24, f.min_quadrature_order);
}

/// The rule of the requested order in the shape the function asks for.
template <class T>
std::shared_ptr<const GaussRule<T>> rule_for(const SampleFunction<T>& f, int order)
{
    auto base = cached_gauss_rule<T>(order);
    if (f.shape == QuadratureShape::Standard)
        return base;
    return std::make_shared<const GaussRule<T>>(left_graded(*base));
}

} // namespace legproj

#endif // LEGPROJ_PROJECTION_HPP
