#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "skewfork/diagram.hpp"

namespace skewfork {

struct Bounds {
    double k1 = 0.0, k2 = 0.0;  // enclose a1
    double r1 = 1.0, r2 = 1.0;  // enclose a3, 0 < r1 <= r2

    void validate() const;
};

struct CriteriaVerdict {
    std::optional<Pattern> ensured;
    std::set<Pattern> precluded;
    CollisionSide side = CollisionSide::Unknown;
    std::map<std::string, double> witnesses;  // evaluated inequality values
    bool inconclusive = false;
    std::string note;
};

struct HParams {
    double rho0 = 0.0;
    double eps0 = 0.0;
    double s1(const Bounds& b) const { return b.r1 - eps0; }
    double s2(const Bounds& b) const { return b.r2 + eps0; }
};

struct StrictSpectrumReport {
    bool is_constant = false;
    bool min_lt_inf = false;
    bool max_gt_sup = false;
};

// Inequality slack: verdicts within delta of equality are inconclusive.
inline constexpr double kCriteriaSlack = 1e-12;

// Sign classification of sp(e^b a2): positive -> saddle-node/transcritical with
// the lower delimiter colliding, negative -> upper collides, containing 0 ->
// classical pitchfork. Requires a1 presented as b' by the driver.
CriteriaVerdict classify_cp_case(const Driver& d, const std::string& b,
                                 const std::string& a2, double zero_tol = 1e-8);

StrictSpectrumReport strict_spectrum_bounds(const Driver& d, const std::string& coeff);

// The closed-form decision tree over (bounds of a1/a3, sp(a1) = [-l+, -l-],
// range of a2).
CriteriaVerdict cubic_verdict(const Bounds& b, const SpectrumInterval& sp_a1,
                              Interval a2_range);

// rho1 = sqrt((-lambda - k1)/r2); requires lambda + k1 < 0.
double lower_upper_solution_radius(const Bounds& b, double lambda);

// cubic_verdict with r1 -> s1 = r1 - eps0 and r2 -> s2 = r2 + eps0 after
// validating hypothesis (H).
CriteriaVerdict general_h_verdict(const Bounds& b, const SpectrumInterval& sp_a1,
                                  Interval a2_range, const HParams& hp);

// The (Co)2 / (SDC)* composition and the three routes to hypothesis (H), as a
// predicate on user-certified constants.
struct HRouteClaim {
    int route = 0;  // 1, 2, or 3
    double r1 = 0, r2 = 0;
    double k1 = 0, k2 = 0;
    double lambda_minus = 0, lambda_plus = 0;
    double rho0 = 0, eps0 = 0, m = 0;
    // Composition hints: the cubic tail (-r + h) x^3 is (Co) & (DC) for some r.
    bool cubic_tail_coercive_dc = false;
    double r = 0;
    bool a3_nonconstant = false;
};

bool check_h_composition(const HRouteClaim& claim);

}  // namespace skewfork
