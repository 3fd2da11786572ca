#ifndef LEGPROJ_BOUND_CHECKER_HPP
#define LEGPROJ_BOUND_CHECKER_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "legproj/certify.hpp"
#include "legproj/projection.hpp"
#include "legproj/qfamily.hpp"
#include "legproj/real.hpp"

namespace legproj {

/// The error bounds compared by the harness.
///
/// `TraceMain` and `TraceCorollary` use the factor (p-nu-s)!/(p+nu+s)!; the
/// `...AsProved` variants use (p-nu-s)!/(p-nu+s)!, which is what applying the
/// L2 projection bound at degree p-nu-1 to w^{(nu+1)} yields.
enum class BoundKind {
    L2Proj,
    TraceHouston,
    DerivSeminorm,
    TraceMain,
    TraceCorollary,
    TraceMainAsProved,
    TraceCorollaryAsProved,
    InterpBeirao,
};

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view name);

/// True when the bound carries an explicit constant and is judged by
/// ratio <= 1 + 1e-9; false when the constant is generic and only
/// boundedness across a sweep is meaningful.
bool has_explicit_constant(BoundKind kind);

inline constexpr double kExplicitSlack = 1e-9;
inline constexpr double kSaturationTolerance = 1e-9;
inline constexpr double kGenericGrowthAllowance = 0.05;

struct BoundReport {
    BoundKind kind = BoundKind::L2Proj;
    std::string function;
    long p = 0;
    long s = 0;
    /// Derivative order; for InterpBeirao the seminorm order j.
    long nu = 0;
    /// Interpolation order, InterpBeirao only.
    long k = 0;
    Real lhs;
    Real rhs;
    Real ratio;
    bool pass = false;
};

/// Thrown when a measured quantity moves by more than the saturation
/// tolerance between rule order N and 2N.
class QuadratureNotSaturated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown for parameter combinations outside a bound's hypotheses.
class InvalidBoundParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact scale factors multiplying the seminorm squared.

/// (p+1-s)!/(p+1+s)!, 0 <= s <= p+1
Rational l2_scale(long p, long s);
/// 1/(2p+1) (p-s)!/(p+s)!, 0 <= s <= p
Rational houston_scale(long p, long s);
/// ||q_{p,nu}||^2 (p-nu-s)!/(p+nu+s)!, p > nu, 0 <= s <= p-nu
Rational trace_main_scale(long p, long s, long nu, const Rational& qnorm_sq);
/// ||q_{p,nu}||^2 (p-nu-s)!/(p-nu+s)!, p > nu, 0 <= s <= p-nu
Rational trace_main_scale_as_proved(long p, long s, long nu, const Rational& qnorm_sq);
/// 2^{2nu-1} p^{2nu-1} (p-s)!/(p+s)!, p >= max(nu, 1), 0 <= s <= p
Rational deriv_seminorm_scale(long p, long s, long nu);
/// p^{2nu-1} (p-nu-s)!/(p+nu+s)!
Rational trace_corollary_scale(long p, long s, long nu);
/// p^{2nu-1} (p-nu-s)!/(p-nu+s)!
Rational trace_corollary_scale_as_proved(long p, long s, long nu);
/// (kappa-s)!/(kappa+s)! (kappa-(k-j))!/(kappa+(k-j))!, kappa = p-k+1
Rational beirao_scale(long p, long k, long j, long s);

// Right-hand sides with the seminorm |w|_r (not squared) supplied.

Real rhs_l2(long p, long s, const Real& seminorm);
Real rhs_trace_houston(long p, long s, const Real& seminorm);
Real rhs_trace_main(long p, long s, long nu, const Rational& qnorm_sq, const Real& seminorm);
/// Reported with C = 1.
Real rhs_deriv_seminorm(long p, long s, long nu, const Real& seminorm);

/// One (kind, p, s, nu[, k]) point of a sweep.
struct BoundPoint {
    BoundKind kind;
    long p;
    long s;
    long nu;
    long k = 0;
};

/// Limits of a parameter sweep.
struct SweepLimits {
    long p_min = 1;
    long p_max = 20;
    long nu_max = 3;
    long s_max = -1;  // negative: no cap beyond the hypotheses
    long k_max = 3;   // interpolation orders for InterpBeirao
};

/// All admissible points of `kind` for a function with `max_order` available
/// derivatives. `skipped` receives the count of points dropped only because
/// they need more regularity than the function has.
std::vector<BoundPoint> admissible_points(BoundKind kind, int max_order, const SweepLimits& limits, long* skipped = nullptr);

/// Checks bounds for one sample function. Every measured quantity is taken
/// on a rule of order N and re-measured at 2N; a relative change above
/// kSaturationTolerance raises QuadratureNotSaturated.
class BoundChecker {
public:
    BoundChecker(SampleFunction<Real> f, int rule_order);

    [[nodiscard]] const SampleFunction<Real>& function() const { return coarse_.function(); }
    [[nodiscard]] int rule_order() const { return order_; }

    BoundReport check(const BoundPoint& point);
    BoundReport check(BoundKind kind, long p, long s, long nu) { return check(BoundPoint{kind, p, s, nu}); }

    /// |w - pi_p w|_nu^2, saturation-checked.
    Real error_seminorm_sq(long p, long nu);
    /// max over both endpoints of |(w - pi_p w)^{(nu)}(+-1)|^2.
    Real error_trace_sq(long p, long nu);
    /// |w|_r^2, saturation-checked.
    Real seminorm_sq(long r);
    /// |w - I_{p,k} w|_j^2, saturation-checked.
    Real interpolation_error_sq(long p, long k, long j);

private:
    Real saturated(const Real& coarse, const Real& fine, const std::string& what, const Real& scale) const;
    Real scale_for(long order);

    SampledFunction<Real> coarse_;
    SampledFunction<Real> fine_;
    int order_;
};

/// Default rule order for sweeping `f` up to degree p_max.
int sweep_rule_order(const SampleFunction<Real>& f, long p_max, int override_order = 0);

/// Reports for every admissible point of `kind`, in grid order.
std::vector<BoundReport> sweep_bound(BoundChecker& checker, BoundKind kind, const SweepLimits& limits, long* skipped = nullptr);

/// Running-maximum summary of a generic-constant sweep.
struct GenericScanSummary {
    BoundKind kind = BoundKind::DerivSeminorm;
    long p_split = 0;
    double max_ratio = 0;
    double max_ratio_lower = 0;  // p <= p_split
    double max_ratio_upper = 0;  // p > p_split
    bool finite = true;
    /// finite and max_ratio_upper <= (1 + kGenericGrowthAllowance) max_ratio_lower
    bool bounded = false;
};

/// Summarizes the reports of one kind; p_split is p_max / 2.
GenericScanSummary summarize_generic(BoundKind kind, const std::vector<BoundReport>& reports, long p_max);

/// u with u^{(nu+1)} = q_{p,nu} and its ν-th trace error at +1.
struct SharpnessResult {
    LegendreSeries u;
    Rational trace;      // (u - pi_p u)^{(nu)}(1)
    Rational q_norm_sq;  // ||q_{p,nu}||^2
    Rational gap;        // | |trace| - ||q||^2 |
};

SharpnessResult sharpness_case(long p, long nu);

/// ||q_{p,0}||^2 < 1/(2p+1) and the resulting scale comparison for every s <= p.
std::vector<IdentityCheck> certify_houston_improvement(long p_max);

/// sharpness_case gap == 0 for p <= p_max, nu <= min(p, nu_max).
std::vector<IdentityCheck> certify_sharpness(long p_max, long nu_max);

} // namespace legproj

#endif // LEGPROJ_BOUND_CHECKER_HPP
