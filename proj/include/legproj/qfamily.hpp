#ifndef LEGPROJ_QFAMILY_HPP
#define LEGPROJ_QFAMILY_HPP

#include <utility>
#include <vector>

#include "legproj/legendre_series.hpp"

namespace legproj {

/// Pair of exact values attached to the two endpoints or to (alpha, beta).
struct RationalPair {
    Rational first;
    Rational second;

    friend bool operator==(const RationalPair&, const RationalPair&) = default;
};

/// Boundary-adapted polynomial q_{p,nu} in span{L_{p-nu}, ..., L_{p+nu+1}} with
/// q(1) = 1, q(-1) = 0 and vanishing derivative traces of order 1..nu.
struct QPoly {
    long p = 0;
    long nu = 0;
    LegendreSeries series;
    /// (alpha_{p,k}, beta_{p,k}) for k = 1..nu, in construction order.
    std::vector<RationalPair> alpha_beta;
};

/// q_{p,0} = (L_p + L_{p+1}) / 2
QPoly q_base(long p);

/// q_{p,nu+1} = q_{p,nu} + alpha psi_{p,nu+1} + beta psi_{p+1,nu+1}, where
/// (alpha, beta) solve the 2x2 system that cancels the order-(nu+1) traces.
/// The system is assembled from endpoint derivatives of the constructed
/// polynomials, not from the closed forms. Requires p >= nu + 1.
QPoly q_next(const QPoly& q);

/// q_{p,nu} by nu applications of q_next to q_base(p).
QPoly q_poly(long p, long nu);

/// Closed form of (q_{p,nu-1}^{(nu)}(1), q_{p,nu-1}^{(nu)}(-1)) for nu >= 1, p >= nu.
RationalPair q_endpoint_closed(long p, long nu);

/// Closed form of (alpha_{p,nu}, beta_{p,nu}) for p >= nu >= 1.
RationalPair alpha_beta_closed(long p, long nu);

/// Direct summation of
///   S = sum_{k=1}^{nu} (-1)^{k+1}/k! * 1/(2^{nu+2}(nu+1-k)!) * (p+k)!/(p-k)!
///       * (p+1+nu-k)!/(p-nu-1+k)! * [ (p+1+k)/(p+1-k) + (p+nu+2-k)/(p-nu+k) ],
/// which equals q_{p,0}^{(nu+1)}(1) - q_{p,nu}^{(nu+1)}(1). Requires p >= nu >= 1.
Rational wz_sum(long p, long nu);

/// The same sum with the summand sign (-1)^k; always equals -wz_sum(p, nu).
Rational wz_sum_alternate_sign(long p, long nu);

/// -(1/2) (p+1)(p+nu+1)! / ((p-nu)! 2^nu (nu+1)!) * ((-1)^nu - 1)
Rational wz_sum_closed(long p, long nu);

/// ||q||_0^2 by exact orthogonality.
Rational q_norm_sq(const QPoly& q);

/// 2(p+1) / ((2p+1)(2p+3))
Rational q0_norm_sq_closed(long p);

/// p(p+1)(p+2)(p^2+2p+10) / ((2p-1)(2p+1)(2p+3)(2p+5)), p >= 1.
Rational q1_norm_sq_closed(long p);

struct GrowthRow {
    long p = 0;
    long nu = 0;
    Rational norm_sq;
    /// ||q_{p,nu}||^2 / p^{2nu-1}
    Rational ratio;
};

/// Rows for every p in [p_lo, p_hi]; requires p_lo >= max(nu, 1).
std::vector<GrowthRow> growth_scan(long nu, long p_lo, long p_hi);

} // namespace legproj

#endif // LEGPROJ_QFAMILY_HPP
