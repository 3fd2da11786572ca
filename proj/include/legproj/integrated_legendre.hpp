#ifndef LEGPROJ_INTEGRATED_LEGENDRE_HPP
#define LEGPROJ_INTEGRATED_LEGENDRE_HPP

#include "legproj/legendre_series.hpp"

namespace legproj {

/// Index (i, n) of psi_{i,n}, the n-th primitive of L_i. Requires i >= n >= 0.
struct PsiIndex {
    long i = 0;
    long n = 0;

    PsiIndex(long degree, long order);
};

/// psi_{i,n} from psi_{i,n} = (psi_{i+1,n-1} - psi_{i-1,n-1}) / (2i+1), with
/// psi_{i,0} = L_i. Results are memoized process-wide; the returned reference
/// stays valid for the lifetime of the program.
const LegendreSeries& psi(PsiIndex idx);

/// n-fold primitive of L_i vanishing with its first n-1 derivatives at -1,
/// built by repeated antidifferentiation. Defined for every i >= 0, including
/// the band below the diagonal (i < n) that `psi` rejects.
const LegendreSeries& primitive(long i, long n);

/// ||psi_{p,n}||^2 = 2^{n+1}/n! * 1/(2p+1) * prod_{k=1}^n (2k-1)/((2p+1)^2 - 4k^2)
Rational psi_norm_sq_closed(long p, long n);

/// <psi_{p+k,n}, psi_{p-k,n}>: the closed form for k <= n, zero for n < k <= p.
Rational psi_inner_closed(long p, long k, long n);

/// psi_{i,n}^{(nu)}(+-1): zero for nu < n, L_i^{(nu-n)}(+-1) otherwise.
Rational psi_endpoint(PsiIndex idx, long nu, Endpoint end);

} // namespace legproj

#endif // LEGPROJ_INTEGRATED_LEGENDRE_HPP
