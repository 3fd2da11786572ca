#include "legproj/bound_checker.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "legproj/parallel.hpp"

namespace legproj {

namespace {

struct KindName {
    BoundKind kind;
    std::string_view name;
};

constexpr std::array<KindName, 8> kKindNames{{
    {BoundKind::L2Proj, "L2_PROJ"},
    {BoundKind::TraceHouston, "TRACE_HOUSTON"},
    {BoundKind::DerivSeminorm, "DERIV_SEMINORM"},
    {BoundKind::TraceMain, "TRACE_MAIN"},
    {BoundKind::TraceCorollary, "TRACE_COROLLARY"},
    {BoundKind::TraceMainAsProved, "TRACE_MAIN_AS_PROVED"},
    {BoundKind::TraceCorollaryAsProved, "TRACE_COROLLARY_AS_PROVED"},
    {BoundKind::InterpBeirao, "INTERP_BEIRAO"},
}};

[[noreturn]] void reject(const std::string& what)
{
    throw InvalidBoundParameters(what);
}

std::string params(long p, long s, long nu)
{
    return "(p=" + std::to_string(p) + ", s=" + std::to_string(s) + ", nu=" + std::to_string(nu) + ")";
}

void require_s_range(const char* op, long p, long s, long nu, long s_hi, const char* constraint)
{
    if (s < 0)
        reject(std::string(op) + ": s must be >= 0 " + params(p, s, nu));
    if (s > s_hi)
        reject(std::string(op) + ": violates " + constraint + " " + params(p, s, nu));
}

Real real(const Rational& q)
{
    return from_rational<Real>(q);
}

std::string format_real_short(const Real& x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << to_double(x);
    return os.str();
}

// Quantities below this multiple of their natural scale are treated as zero.
constexpr double kZeroFloor = 1e-80;

} // namespace

std::string_view to_string(BoundKind kind)
{
    for (const auto& k : kKindNames)
        if (k.kind == kind)
            return k.name;
    return "UNKNOWN";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name)
{
    for (const auto& k : kKindNames)
        if (k.name == name)
            return k.kind;
    return std::nullopt;
}

bool has_explicit_constant(BoundKind kind)
{
    switch (kind) {
    case BoundKind::L2Proj:
    case BoundKind::TraceHouston:
    case BoundKind::TraceMain:
    case BoundKind::TraceMainAsProved:
        return true;
    default:
        return false;
    }
}

Rational l2_scale(long p, long s)
{
    if (p < 0)
        reject("rhs_l2: p must be >= 0 " + params(p, s, 0));
    require_s_range("rhs_l2", p, s, 0, p + 1, "s <= p+1");
    return factorial_ratio(p + 1 - s, p + 1 + s);
}

Rational houston_scale(long p, long s)
{
    if (p < 0)
        reject("rhs_trace_houston: p must be >= 0 " + params(p, s, 0));
    require_s_range("rhs_trace_houston", p, s, 0, p, "s <= p");
    return factorial_ratio(p - s, p + s) / Rational(2 * p + 1);
}

Rational trace_main_scale(long p, long s, long nu, const Rational& qnorm_sq)
{
    if (nu < 0 || p <= nu)
        reject("rhs_trace_main: requires p > nu >= 0 " + params(p, s, nu));
    require_s_range("rhs_trace_main", p, s, nu, p - nu, "s <= p-nu");
    return qnorm_sq * factorial_ratio(p - nu - s, p + nu + s);
}

Rational trace_main_scale_as_proved(long p, long s, long nu, const Rational& qnorm_sq)
{
    if (nu < 0 || p <= nu)
        reject("trace_main_scale_as_proved: requires p > nu >= 0 " + params(p, s, nu));
    require_s_range("trace_main_scale_as_proved", p, s, nu, p - nu, "s <= p-nu");
    return qnorm_sq * factorial_ratio(p - nu - s, p - nu + s);
}

Rational deriv_seminorm_scale(long p, long s, long nu)
{
    if (nu < 0 || p < nu)
        reject("rhs_deriv_seminorm: requires p >= nu >= 0 " + params(p, s, nu));
    if (p < 1)
        reject("rhs_deriv_seminorm: requires p >= 1 " + params(p, s, nu));
    require_s_range("rhs_deriv_seminorm", p, s, nu, p, "s <= p");
    return pow(Rational(2 * p), 2 * nu - 1) * factorial_ratio(p - s, p + s);
}

Rational trace_corollary_scale(long p, long s, long nu)
{
    if (nu < 0 || p <= nu)
        reject("trace_corollary_scale: requires p > nu >= 0 " + params(p, s, nu));
    require_s_range("trace_corollary_scale", p, s, nu, p - nu, "s <= p-nu");
    return pow(Rational(p), 2 * nu - 1) * factorial_ratio(p - nu - s, p + nu + s);
}

Rational trace_corollary_scale_as_proved(long p, long s, long nu)
{
    if (nu < 0 || p <= nu)
        reject("trace_corollary_scale_as_proved: requires p > nu >= 0 " + params(p, s, nu));
    require_s_range("trace_corollary_scale_as_proved", p, s, nu, p - nu, "s <= p-nu");
    return pow(Rational(p), 2 * nu - 1) * factorial_ratio(p - nu - s, p - nu + s);
}

Rational beirao_scale(long p, long k, long j, long s)
{
    if (k < 1 || p < 2 * k - 1)
        reject("beirao_scale: requires k >= 1 and p >= 2k-1 (p=" + std::to_string(p) + ", k=" + std::to_string(k) + ")");
    if (j < 0 || j > k - 1)
        reject("beirao_scale: requires 0 <= j <= k-1 (j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")");
    const long kappa = p - k + 1;
    if (s < 0 || s > kappa)
        reject("beirao_scale: requires 0 <= s <= kappa (s=" + std::to_string(s) + ", kappa=" + std::to_string(kappa) + ")");
    return factorial_ratio(kappa - s, kappa + s) * factorial_ratio(kappa - (k - j), kappa + (k - j));
}

Real rhs_l2(long p, long s, const Real& seminorm)
{
    return real(l2_scale(p, s)) * seminorm * seminorm;
}

Real rhs_trace_houston(long p, long s, const Real& seminorm)
{
    return real(houston_scale(p, s)) * seminorm * seminorm;
}

Real rhs_trace_main(long p, long s, long nu, const Rational& qnorm_sq, const Real& seminorm)
{
    return real(trace_main_scale(p, s, nu, qnorm_sq)) * seminorm * seminorm;
}

Real rhs_deriv_seminorm(long p, long s, long nu, const Real& seminorm)
{
    return real(deriv_seminorm_scale(p, s, nu)) * seminorm * seminorm;
}

std::vector<BoundPoint> admissible_points(BoundKind kind, int max_order, const SweepLimits& lim, long* skipped)
{
    std::vector<BoundPoint> out;
    long dropped = 0;
    const long reg = max_order;
    const long s_cap = lim.s_max < 0 ? std::numeric_limits<long>::max() : lim.s_max;
    // Emits s in [s_lo, s_hi]; values needing more than `reg_hi` are counted.
    auto emit = [&](long p, long nu, long k, long s_lo, long s_hi, long reg_hi) {
        for (long s = s_lo; s <= std::min(s_hi, s_cap); ++s) {
            if (s > reg_hi)
                ++dropped;
            else
                out.push_back({kind, p, s, nu, k});
        }
    };
    const long p_lo = std::max(lim.p_min, 0L);
    for (long p = p_lo; p <= lim.p_max; ++p) {
        switch (kind) {
        case BoundKind::L2Proj:
            emit(p, 0, 0, 0, p + 1, reg);
            break;
        case BoundKind::TraceHouston:
            emit(p, 0, 0, 0, p, reg - 1);
            break;
        case BoundKind::TraceMain:
        case BoundKind::TraceMainAsProved:
            for (long nu = 0; nu <= lim.nu_max && nu < p; ++nu)
                emit(p, nu, 0, 0, p - nu, reg - nu - 1);
            break;
        case BoundKind::DerivSeminorm:
            // p >= 2k-1 caps the interpolation order used in the proof.
            for (long nu = 1; nu <= lim.nu_max && nu <= p; ++nu)
                emit(p, nu, 0, 1, std::min((p + 1) / 2, p - nu) - 1, reg - nu);
            break;
        case BoundKind::TraceCorollary:
        case BoundKind::TraceCorollaryAsProved:
            for (long nu = 1; nu <= lim.nu_max && nu < p; ++nu)
                emit(p, nu, 0, 1, std::min(reg, p - nu) - 1, reg - nu - 1);
            break;
        case BoundKind::InterpBeirao:
            for (long k = 1; k <= lim.k_max && 2 * k - 1 <= p && k <= reg; ++k)
                for (long j = 0; j < k; ++j)
                    emit(p, j, k, 1, p - k + 1, reg - k);
            break;
        }
    }
    if (skipped)
        *skipped = dropped;
    return out;
}

BoundChecker::BoundChecker(SampleFunction<Real> f, int rule_order)
    : coarse_(f, rule_for(f, rule_order))
    , fine_(f, rule_for(f, 2 * rule_order))
    , order_(rule_order)
{
}

Real BoundChecker::saturated(const Real& coarse, const Real& fine, const std::string& what, const Real& scale) const
{
    using std::abs;
    const Real diff = abs(coarse - fine);
    const Real mag = std::max(abs(coarse), abs(fine));
    if (diff > Real(kSaturationTolerance) * mag + Real(kZeroFloor) * scale) {
        throw QuadratureNotSaturated(coarse_.function().name + ": " + what + " changed by " + format_real_short(diff / (mag == 0 ? Real(1) : mag))
                                     + " (relative) between rule orders " + std::to_string(order_) + " and " + std::to_string(2 * order_));
    }
    return coarse;
}

Real BoundChecker::scale_for(long order)
{
    const int r = static_cast<int>(std::min<long>(order, coarse_.function().max_order));
    return std::max(Real(1), coarse_.seminorm_sq(r));
}

Real BoundChecker::seminorm_sq(long r)
{
    const int ri = static_cast<int>(r);
    return saturated(coarse_.seminorm_sq(ri), fine_.seminorm_sq(ri), "|w|_" + std::to_string(r) + "^2", Real(1));
}

Real BoundChecker::error_seminorm_sq(long p, long nu)
{
    const int n = static_cast<int>(nu);
    return saturated(coarse_.error_seminorm_sq(p, n), fine_.error_seminorm_sq(p, n),
                     "|w - pi_" + std::to_string(p) + " w|_" + std::to_string(nu) + "^2", scale_for(nu));
}

Real BoundChecker::error_trace_sq(long p, long nu)
{
    const int n = static_cast<int>(nu);
    Real best(0);
    for (Endpoint e : {Endpoint::Left, Endpoint::Right}) {
        const Real c = coarse_.error_trace(p, n, e);
        const Real f = fine_.error_trace(p, n, e);
        const Real v = saturated(c * c, f * f, "trace error (p=" + std::to_string(p) + ", nu=" + std::to_string(nu) + ")", scale_for(nu + 1));
        best = std::max(best, v);
    }
    return best;
}

Real BoundChecker::interpolation_error_sq(long p, long k, long j)
{
    const int ki = static_cast<int>(k);
    const int ji = static_cast<int>(j);
    const Real c = coarse_.distance_seminorm_sq(coarse_.interpolant(p, ki), ji);
    const Real f = fine_.distance_seminorm_sq(fine_.interpolant(p, ki), ji);
    return saturated(c, f, "|w - I_{p,k} w|_j^2 (p=" + std::to_string(p) + ", k=" + std::to_string(k) + ", j=" + std::to_string(j) + ")", scale_for(j));
}

BoundReport BoundChecker::check(const BoundPoint& pt)
{
    const auto& f = function();
    const long p = pt.p, s = pt.s, nu = pt.nu;
    auto need = [&](long order) {
        if (order > f.max_order)
            reject(std::string(to_string(pt.kind)) + ": " + f.name + " has derivatives only up to order " + std::to_string(f.max_order)
                   + ", bound needs " + std::to_string(order) + " " + params(p, s, nu));
    };

    BoundReport r;
    r.kind = pt.kind;
    r.function = f.name;
    r.p = p;
    r.s = s;
    r.nu = nu;
    r.k = pt.k;

    Rational scale;
    long seminorm_order = 0;
    switch (pt.kind) {
    case BoundKind::L2Proj:
        if (nu != 0)
            reject("L2_PROJ: nu must be 0 " + params(p, s, nu));
        scale = l2_scale(p, s);
        seminorm_order = s;
        need(s);
        r.lhs = error_seminorm_sq(p, 0);
        break;
    case BoundKind::TraceHouston:
        if (nu != 0)
            reject("TRACE_HOUSTON: nu must be 0 " + params(p, s, nu));
        scale = houston_scale(p, s);
        seminorm_order = s + 1;
        need(s + 1);
        r.lhs = error_trace_sq(p, 0);
        break;
    case BoundKind::TraceMain:
    case BoundKind::TraceMainAsProved: {
        if (nu < 0 || p <= nu)
            reject(std::string(to_string(pt.kind)) + ": requires p > nu >= 0 " + params(p, s, nu));
        const Rational qn = q_norm_sq(q_poly(p, nu));
        scale = pt.kind == BoundKind::TraceMain ? trace_main_scale(p, s, nu, qn) : trace_main_scale_as_proved(p, s, nu, qn);
        seminorm_order = s + nu + 1;
        need(seminorm_order);
        r.lhs = error_trace_sq(p, nu);
        break;
    }
    case BoundKind::DerivSeminorm:
        scale = deriv_seminorm_scale(p, s, nu);
        seminorm_order = s + nu;
        need(seminorm_order);
        r.lhs = error_seminorm_sq(p, nu);
        break;
    case BoundKind::TraceCorollary:
    case BoundKind::TraceCorollaryAsProved:
        scale = pt.kind == BoundKind::TraceCorollary ? trace_corollary_scale(p, s, nu) : trace_corollary_scale_as_proved(p, s, nu);
        seminorm_order = s + nu + 1;
        need(seminorm_order);
        r.lhs = error_trace_sq(p, nu);
        break;
    case BoundKind::InterpBeirao:
        scale = beirao_scale(p, pt.k, nu, s);
        seminorm_order = pt.k + s;
        need(seminorm_order);
        r.lhs = interpolation_error_sq(p, pt.k, nu);
        break;
    }

    const Real semi = seminorm_sq(seminorm_order);
    r.rhs = real(scale) * semi;
    const Real zero_floor = Real(kZeroFloor) * scale_for(seminorm_order);
    if (r.rhs > zero_floor) {
        r.ratio = r.lhs / r.rhs;
    } else {
        // |w|_r = 0: w is a polynomial of degree < r and the error must vanish.
        r.rhs = 0;
        r.ratio = r.lhs <= zero_floor ? Real(0) : Real(std::numeric_limits<double>::infinity());
        if (r.lhs <= zero_floor)
            r.lhs = 0;
    }
    using boost::multiprecision::isfinite;
    if (has_explicit_constant(pt.kind))
        r.pass = r.ratio <= Real(1) + Real(kExplicitSlack);
    else
        r.pass = isfinite(r.ratio);
    return r;
}

int sweep_rule_order(const SampleFunction<Real>& f, long p_max, int override_order)
{
    return default_rule_order(f, p_max, override_order);
}

std::vector<BoundReport> sweep_bound(BoundChecker& checker, BoundKind kind, const SweepLimits& limits, long* skipped)
{
    const auto points = admissible_points(kind, checker.function().max_order, limits, skipped);
    std::vector<BoundReport> out;
    out.reserve(points.size());
    for (const auto& pt : points)
        out.push_back(checker.check(pt));
    return out;
}

GenericScanSummary summarize_generic(BoundKind kind, const std::vector<BoundReport>& reports, long p_max)
{
    using boost::multiprecision::isfinite;
    GenericScanSummary out;
    out.kind = kind;
    out.p_split = p_max / 2;
    bool any_lower = false;
    for (const auto& r : reports) {
        if (r.kind != kind)
            continue;
        if (!isfinite(r.ratio)) {
            out.finite = false;
            continue;
        }
        const double v = to_double(r.ratio);
        out.max_ratio = std::max(out.max_ratio, v);
        if (r.p <= out.p_split) {
            out.max_ratio_lower = std::max(out.max_ratio_lower, v);
            any_lower = true;
        } else {
            out.max_ratio_upper = std::max(out.max_ratio_upper, v);
        }
    }
    // The running maximum over p <= p_max may exceed that over p <= p_split by at most the allowance.
    out.bounded = out.finite && any_lower && out.max_ratio <= (1.0 + kGenericGrowthAllowance) * out.max_ratio_lower;
    return out;
}

SharpnessResult sharpness_case(long p, long nu)
{
    if (nu < 0 || p < nu)
        throw std::invalid_argument("sharpness_case: requires p >= nu >= 0 (p=" + std::to_string(p) + ", nu=" + std::to_string(nu) + ")");
    const QPoly q = q_poly(p, nu);
    SharpnessResult out;
    out.u = antiderivative(q.series, static_cast<int>(nu + 1));
    out.trace = endpoint_derivative(out.u - project_exact(out.u, p), nu, Endpoint::Right);
    out.q_norm_sq = q_norm_sq(q);
    out.gap = (out.trace.abs() - out.q_norm_sq).abs();
    return out;
}

std::vector<IdentityCheck> certify_houston_improvement(long p_max)
{
    std::vector<IdentityCheck> out;
    for (long p = 0; p <= p_max; ++p) {
        const Rational qn = q_norm_sq(q_base(p));
        const Rational houston(1, 2 * p + 1);
        out.push_back({"q0_norm_below_houston", p, 0, 0, qn.str(), houston.str(), qn < houston});
        if (p == 0)
            continue;
        for (long s = 0; s <= p; ++s) {
            const Rational main = trace_main_scale(p, s, 0, qn);
            const Rational old = houston_scale(p, s);
            out.push_back({"trace_main_nu0_below_houston", p, s, 0, main.str(), old.str(), main < old});
        }
    }
    return out;
}

std::vector<IdentityCheck> certify_sharpness(long p_max, long nu_max)
{
    auto rows = parallel_map(static_cast<std::size_t>(p_max + 1), [&](std::size_t pi) {
        const long p = static_cast<long>(pi);
        std::vector<IdentityCheck> v;
        for (long nu = 0; nu <= std::min(p, nu_max); ++nu) {
            const SharpnessResult r = sharpness_case(p, nu);
            v.push_back({"sharpness", p, 0, nu, r.trace.abs().str(), r.q_norm_sq.str(), r.gap.is_zero()});
        }
        return v;
    });
    std::vector<IdentityCheck> out;
    for (auto& r : rows)
        std::move(r.begin(), r.end(), std::back_inserter(out));
    return out;
}

} // namespace legproj
