#ifndef LEGPROJ_CERTIFY_HPP
#define LEGPROJ_CERTIFY_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "legproj/legendre_series.hpp"

namespace legproj {

/// One instance of an exact identity: both sides rendered losslessly.
struct IdentityCheck {
    std::string identity;
    long p = 0;
    long k = 0;
    long n = 0;
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

/// Supplies the n-th primitive of L_i to the inner-product certification.
/// Replaceable so that a corrupted source can serve as a negative control.
using PrimitiveSource = std::function<LegendreSeries(long i, long n)>;

/// psi(i, n) on or above the diagonal, repeated antidifferentiation below it.
LegendreSeries default_primitive_source(long i, long n);

/// Which branch of the induction on n the pair (k, n) falls in:
/// "k>n", "k=n", "k=n-1" or "k<=n-2".
std::string inner_product_case(long k, long n);

/// <psi_{p+k,n}, psi_{p-k,n}> against the closed form for n <= p <= p_max,
/// n <= n_max, 0 <= k <= p.
std::vector<IdentityCheck> certify_psi_inner(long p_max, long n_max, const PrimitiveSource& source = {});

/// ||psi_{p,n}||^2 against its closed form on the same grid.
std::vector<IdentityCheck> certify_psi_norm(long p_max, long n_max);

/// Structural facts about psi_{i,n} for i <= i_max: band membership,
/// derivative chain, vanishing low-order traces, endpoint closed form, and
/// recurrence vs repeated antidifferentiation.
std::vector<IdentityCheck> certify_psi_structure(long i_max, long n_max);

/// Interface conditions, band membership, solved vs closed-form (alpha, beta)
/// and endpoint derivatives for p <= p_max, nu <= min(p, nu_max).
std::vector<IdentityCheck> certify_qfamily(long p_max, long nu_max);

/// Direct sum against closed form for p <= p_max, 1 <= nu <= min(p, nu_max),
/// plus the same sum recovered from the constructed q-family.
std::vector<IdentityCheck> certify_wz(long p_max, long nu_max);

/// ||q_{p,1}||^2 and ||q_{p,0}||^2 against their closed forms.
std::vector<IdentityCheck> certify_q_norms(long p_max);

/// Exact inner products against Gauss quadrature of the product on `pairs`
/// random series pairs of degree <= max_degree. Passes at 1e-12 relative.
std::vector<IdentityCheck> certify_quadrature_oracle(int pairs, int max_degree, std::uint64_t seed);

/// Random exact series with small integer-ratio coefficients.
LegendreSeries random_series(int max_degree, std::mt19937_64& rng);

} // namespace legproj

#endif // LEGPROJ_CERTIFY_HPP
