#include "skewfork/criteria.hpp"

#include <cmath>
#include <memory>

#include "skewfork/errors.hpp"

namespace skewfork {

void Bounds::validate() const {
    if (!(k1 <= k2)) throw InconsistentBounds("Bounds: k1 <= k2 required");
    if (!(0.0 < r1 && r1 <= r2)) throw InconsistentBounds("Bounds: 0 < r1 <= r2 required");
}

namespace {

// The shared decision tree over (k1, k2), cubic bounds (c1 <= a3 <= c2), the
// spectrum sp(a1) = [-lambda_+, -lambda_-] and the range of a2. The general-h
// variant only substitutes c1 = s1, c2 = s2.
CriteriaVerdict run_tree(const Bounds& b, double c1, double c2, const SpectrumInterval& sp,
                         Interval a2, const std::string& tag) {
    const double d = kCriteriaSlack;
    if (!(sp.lo <= sp.hi))
        throw InconsistentBounds("spectrum interval reversed");
    if (!(b.k1 <= sp.lo + d && sp.hi <= b.k2 + d))
        throw InconsistentBounds("sp(a1) not enclosed by [k1, k2]");
    if (!(a2.lo <= a2.hi)) throw InconsistentBounds("a2 range reversed");

    CriteriaVerdict v;
    v.note = tag;
    v.witnesses["slack"] = d;

    // a2 identically zero: the family is odd in x and pitchforks classically.
    if (std::fabs(a2.lo) <= d && std::fabs(a2.hi) <= d) {
        v.ensured = Pattern::ClassicalPitchfork;
        v.precluded = {Pattern::SaddleNodeTranscritical, Pattern::GeneralizedPitchfork};
        v.side = CollisionSide::Both;
        return v;
    }

    // Mirror negative a2 through x -> -x; `sign` tracks which delimiter the
    // collision statements refer to after mirroring.
    double m1, m2;
    int sign;
    if (a2.lo >= 0.0) {
        sign = +1;
        m1 = a2.lo;
        m2 = a2.hi;
    } else if (a2.hi <= 0.0) {
        sign = -1;
        m1 = -a2.hi;
        m2 = -a2.lo;
    } else {
        v.inconclusive = true;
        v.note += "; a2 changes sign, uniform criteria do not apply";
        return v;
    }
    v.witnesses["a2_abs_min"] = m1;
    v.witnesses["a2_abs_max"] = m2;

    const double width = sp.hi - sp.lo;          // lambda_+ - lambda_-
    const double gap_plus = sp.lo - b.k1;        // -lambda_+ - k1  (>= 0)
    const double gap_minus = sp.hi - b.k1;       // -lambda_- - k1  (>= 0)
    const double lk2 = b.k2 - sp.lo;             // lambda_+ + k2   (>= 0)

    const double sn_thr = 2.0 * std::sqrt(std::max(0.0, c2 * gap_minus));
    const double cp_thr = 2.0 * std::sqrt(std::max(0.0, c2 * gap_plus));
    const double gp_hi = (lk2 > d) ? std::sqrt(c1) * width / std::sqrt(lk2) : 0.0;
    const double gp_cond = c1 * width * width - 4.0 * c2 * gap_plus * lk2;
    v.witnesses["sn_ensure_threshold"] = sn_thr;
    v.witnesses["cp_preclude_threshold"] = cp_thr;
    v.witnesses["sn_preclude_threshold"] = gp_hi;
    v.witnesses["gp_condition"] = gp_cond;

    bool ensured_sn = false;
    if (gap_plus > d && m1 > sn_thr + d) {
        v.ensured = Pattern::SaddleNodeTranscritical;
        v.precluded.insert(Pattern::ClassicalPitchfork);
        v.precluded.insert(Pattern::GeneralizedPitchfork);
        v.side = (sign > 0) ? CollisionSide::LowerCollides : CollisionSide::UpperCollides;
        ensured_sn = true;
    }
    if (m1 > cp_thr + d) v.precluded.insert(Pattern::ClassicalPitchfork);
    if (!ensured_sn && lk2 > d && m2 < gp_hi - d)
        v.precluded.insert(Pattern::SaddleNodeTranscritical);
    if (!v.ensured && gp_cond > d && lk2 > d && m1 > cp_thr + d && m2 < gp_hi - d) {
        v.ensured = Pattern::GeneralizedPitchfork;
        v.precluded.insert(Pattern::ClassicalPitchfork);
        v.precluded.insert(Pattern::SaddleNodeTranscritical);
        v.side = (sign > 0) ? CollisionSide::LowerCollides : CollisionSide::UpperCollides;
    }
    v.inconclusive = !v.ensured && v.precluded.empty();
    return v;
}

}  // namespace

CriteriaVerdict classify_cp_case(const Driver& d, const std::string& b,
                                 const std::string& a2, double zero_tol) {
    const std::string composite_id = "exp_" + b + "_" + a2;
    Driver work = d;
    if (d.kind == DriverKind::SymbolicFiniteErgodic) {
        if (d.coefficients.find(composite_id) == d.coefficients.end())
            throw NotCPDriver("symbolic driver must table the composite coefficient '" +
                              composite_id + "'");
    } else {
        const CoefficientFn& bf = d.coeff(b);
        if (!bf.differentiable())
            throw NotCPDriver("primitive '" + b + "' has no derivative: a1 = b' not certified");
        // If the driver also carries an explicit a1, it must agree with b'.
        auto it = d.coefficients.find("a1");
        if (it != d.coefficients.end()) {
            const double span = d.natural_span();
            for (int i = 0; i < 32; ++i) {
                const double t = d.origin + span * i / 32.0;
                const double lhs = it->second->value(t);
                const double rhs = bf.slope(t);
                if (std::fabs(lhs - rhs) > 1e-8 * (1.0 + std::fabs(rhs)))
                    throw NotCPDriver("driver's a1 differs from b'");
            }
        }
        work = d.with_coefficient(composite_id,
                                  std::make_shared<ExpMulFn>(1.0, d.coefficients.at(b),
                                                             d.coefficients.at(a2)));
    }
    const SpectrumInterval sp = sacker_sell(work, composite_id);
    CriteriaVerdict v;
    v.note = "cp-case";
    v.witnesses["sp_exp_b_a2_lo"] = sp.lo;
    v.witnesses["sp_exp_b_a2_hi"] = sp.hi;
    if (!sp.exact) v.note += "; spectrum estimated (quasi-periodic driver)";
    if (sp.lo > zero_tol) {
        v.ensured = Pattern::SaddleNodeTranscritical;
        v.side = CollisionSide::LowerCollides;
        v.precluded = {Pattern::ClassicalPitchfork, Pattern::GeneralizedPitchfork};
    } else if (sp.hi < -zero_tol) {
        v.ensured = Pattern::SaddleNodeTranscritical;
        v.side = CollisionSide::UpperCollides;
        v.precluded = {Pattern::ClassicalPitchfork, Pattern::GeneralizedPitchfork};
    } else {
        v.ensured = Pattern::ClassicalPitchfork;
        v.side = CollisionSide::Both;
        v.precluded = {Pattern::SaddleNodeTranscritical, Pattern::GeneralizedPitchfork};
    }
    return v;
}

StrictSpectrumReport strict_spectrum_bounds(const Driver& d, const std::string& coeff) {
    if (d.kind == DriverKind::QuasiPeriodic) throw EstimatedSpectrumOnly();
    const double eps = 1e-9;
    const CoefficientFn& a = d.coeff(coeff);
    const Interval r = d.bounds(coeff);
    const SpectrumInterval sp = sacker_sell(d, coeff);
    StrictSpectrumReport rep;
    rep.is_constant = a.is_constant() || r.hi - r.lo <= eps;
    rep.min_lt_inf = r.lo < sp.lo - eps;
    rep.max_gt_sup = r.hi > sp.hi + eps;
    return rep;
}

CriteriaVerdict cubic_verdict(const Bounds& b, const SpectrumInterval& sp_a1,
                              Interval a2_range) {
    b.validate();
    return run_tree(b, b.r1, b.r2, sp_a1, a2_range, "cubic");
}

double lower_upper_solution_radius(const Bounds& b, double lambda) {
    b.validate();
    if (!(lambda + b.k1 < -kCriteriaSlack))
        throw PreconditionFailed("lower_upper_solution_radius: need lambda + k1 < 0");
    return std::sqrt((-lambda - b.k1) / b.r2);
}

CriteriaVerdict general_h_verdict(const Bounds& b, const SpectrumInterval& sp_a1,
                                  Interval a2_range, const HParams& hp) {
    b.validate();
    if (hp.eps0 < 0.0 || hp.eps0 >= b.r1)
        throw HypothesisHFails("need 0 <= eps0 < r1");
    if (hp.eps0 > 0.0) {
        if (!(hp.rho0 > 0.0)) throw HypothesisHFails("need rho0 > 0");
        const double s1 = hp.s1(b), s2 = hp.s2(b);
        const double lk2 = std::max(0.0, b.k2 - sp_a1.lo);    // lambda_+ + k2
        const double gmin = std::max(0.0, sp_a1.hi - b.k1);   // -lambda_- - k1
        if (!(std::sqrt(lk2 / s1) < hp.rho0))
            throw HypothesisHFails("sqrt((lambda_+ + k2)/s1) < rho0");
        if (!(std::sqrt(gmin / s2) < hp.rho0))
            throw HypothesisHFails("sqrt((-lambda_- - k1)/s2) < rho0");
    }
    return run_tree(b, hp.s1(b), hp.s2(b), sp_a1, a2_range, "general-h");
}

bool check_h_composition(const HRouteClaim& c) {
    if (c.route < 1 || c.route > 3)
        throw RouteInequalityFails("route must be 1, 2, or 3");
    if (!(c.r1 > 0.0) || !(c.r2 >= c.r1))
        throw RouteInequalityFails("need 0 < r1 <= r2");
    if (!(c.rho0 > 0.0)) throw RouteInequalityFails("need rho0 > 0");
    if (c.cubic_tail_coercive_dc && !(c.r > 0.0))
        throw RouteInequalityFails("coercivity hint requires a positive r");
    const double lk2 = c.lambda_plus + c.k2;
    switch (c.route) {
        case 1: {
            if (!(c.eps0 > 0.0 && c.eps0 < c.r1)) return false;
            if (!(c.k1 < 0.0 && 0.0 < c.k2)) return false;
            const double s1 = c.r1 - c.eps0, s2 = c.r2 + c.eps0;
            if (!(c.k2 - c.k1 < c.rho0 * c.rho0 * s1)) return false;
            return std::sqrt((c.k2 - c.k1) / s2) < c.rho0;
        }
        case 2:
            if (!(c.eps0 > 0.0)) return false;
            return c.r1 > lk2 / (c.rho0 * c.rho0) + c.eps0;
        default: {
            // The m-interval (0, r1/rho0 - (lambda_+ + k2)/rho0^3) is nonempty
            // only when r1 rho0^2 > lambda_+ + k2.
            if (!(c.r1 * c.rho0 * c.rho0 > lk2)) return false;
            const double m_hi = c.r1 / c.rho0 - lk2 / (c.rho0 * c.rho0 * c.rho0);
            return c.m > 0.0 && c.m < m_hi;
        }
    }
}

}  // namespace skewfork
