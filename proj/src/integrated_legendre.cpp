#include "legproj/integrated_legendre.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

namespace legproj {

namespace {

// Entries are inserted once and never erased, so references handed out stay
// valid. A racing second computation of the same key is discarded.
class SeriesMemo {
public:
    template <class Make>
    const LegendreSeries& get(std::pair<long, long> key, Make&& make)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        LegendreSeries value = make();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<long, long>, LegendreSeries> table_;
};

SeriesMemo& psi_memo()
{
    static SeriesMemo memo;
    return memo;
}

SeriesMemo& primitive_memo()
{
    static SeriesMemo memo;
    return memo;
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace

PsiIndex::PsiIndex(long degree, long order)
    : i(degree)
    , n(order)
{
    require(n >= 0, "PsiIndex: order n must be >= 0");
    require(i >= n, "PsiIndex: need i >= n (got i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")");
}

const LegendreSeries& psi(PsiIndex idx)
{
    return psi_memo().get({idx.i, idx.n}, [&] {
        if (idx.n == 0)
            return LegendreSeries::basis(static_cast<std::size_t>(idx.i));
        // i >= n >= 1, so both recurrence terms stay on or above the diagonal.
        LegendreSeries s = psi(PsiIndex(idx.i + 1, idx.n - 1)) - psi(PsiIndex(idx.i - 1, idx.n - 1));
        s *= Rational(1, 2 * idx.i + 1);
        return s;
    });
}

const LegendreSeries& primitive(long i, long n)
{
    require(i >= 0 && n >= 0, "primitive: indices must be >= 0");
    return primitive_memo().get({i, n}, [&] {
        if (n == 0)
            return LegendreSeries::basis(static_cast<std::size_t>(i));
        return antiderivative(primitive(i, n - 1));
    });
}

namespace {

// 1/(2p+1) * prod_{k=1}^n (2k-1)/((2p+1)^2 - 4k^2)
Rational psi_gram_tail(long p, long n)
{
    const long pt = 2 * p + 1;
    mpz_class num = 1;
    mpz_class den = pt;
    for (long k = 1; k <= n; ++k) {
        num *= 2 * k - 1;
        den *= mpz_class(pt) * pt - mpz_class(4) * k * k;
    }
    return Rational(num, den);
}

} // namespace

Rational psi_norm_sq_closed(long p, long n)
{
    require(n >= 0 && p >= n, "psi_norm_sq_closed: need p >= n >= 0");
    mpz_class two_pow = 1;
    two_pow <<= static_cast<mp_bitcnt_t>(n + 1);
    return Rational(two_pow, factorial(n)) * psi_gram_tail(p, n);
}

Rational psi_inner_closed(long p, long k, long n)
{
    require(n >= 0 && p >= n, "psi_inner_closed: need p >= n >= 0");
    require(k >= 0 && k <= p, "psi_inner_closed: need 0 <= k <= p");
    if (k > n)
        return Rational(0);
    mpz_class num = factorial(n);
    num <<= static_cast<mp_bitcnt_t>(n + 1);
    Rational v(num, factorial(n + k) * factorial(n - k));
    if (k % 2 != 0)
        v = -v;
    return v * psi_gram_tail(p, n);
}

Rational psi_endpoint(PsiIndex idx, long nu, Endpoint end)
{
    require(nu >= 0, "psi_endpoint: nu must be >= 0");
    if (nu < idx.n)
        return Rational(0);
    return legendre_endpoint_derivative(idx.i, nu - idx.n, end);
}

} // namespace legproj
