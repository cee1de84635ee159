#include "skewfork/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "skewfork/errors.hpp"
#include "skewfork/util.hpp"

namespace skewfork {

const char* to_string(Pattern p) {
    switch (p) {
        case Pattern::SaddleNodeTranscritical: return "SaddleNodeTranscritical";
        case Pattern::ClassicalPitchfork: return "ClassicalPitchfork";
        case Pattern::GeneralizedPitchfork: return "GeneralizedPitchfork";
        case Pattern::NoBifurcation: return "NoBifurcation";
        case Pattern::TwoSaddleNodes: return "TwoSaddleNodes";
        case Pattern::WeakGeneralizedTranscritical: return "WeakGeneralizedTranscritical";
        case Pattern::Unresolved: return "Unresolved";
    }
    return "?";
}

const char* to_string(BifKind k) {
    switch (k) {
        case BifKind::SaddleNode: return "saddle_node";
        case BifKind::TranscriticalEndpointLower: return "transcritical_endpoint_lower";
        case BifKind::TranscriticalEndpointUpper: return "transcritical_endpoint_upper";
        case BifKind::Pitchfork: return "pitchfork";
        case BifKind::GeneralizedLower: return "generalized_lower";
        case BifKind::MuSaddleLower: return "mu_saddle_lower";
        case BifKind::MuSaddleUpper: return "mu_saddle_upper";
    }
    return "?";
}

const char* to_string(CollisionSide s) {
    switch (s) {
        case CollisionSide::LowerCollides: return "lower_collides";
        case CollisionSide::UpperCollides: return "upper_collides";
        case CollisionSide::Both: return "both";
        case CollisionSide::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(CensusLabel l) {
    switch (l) {
        case CensusLabel::One: return "1";
        case CensusLabel::TwoLower: return "2L";
        case CensusLabel::TwoUpper: return "2U";
        case CensusLabel::ThreeLower: return "3L";
        case CensusLabel::ThreeSplit: return "3S";
        case CensusLabel::ThreeUpper: return "3U";
        case CensusLabel::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

MinimalSetCensus inconclusive_census(const std::string& reason) {
    MinimalSetCensus c;
    c.count = 0;
    c.label = CensusLabel::Inconclusive;
    c.note = reason;
    return c;
}

EquilibriumSamples samples_from(const AttractorSlice& slice, bool upper) {
    EquilibriumSamples eq;
    for (const auto& r : slice.fibers) {
        eq.offsets.push_back(r.s);
        eq.values.push_back(upper ? r.beta : r.alpha);
        eq.converged.push_back(true);
    }
    return eq;
}

enum class SideStatus { Collapsed, Distinct, Undecided };

// Salvage census for horizon-capped pullbacks (algebraic decay near a
// nonhyperbolic zero). Constant semiequilibria decide each side: if the field
// keeps a fixed sign on a whole band of constants between the pinch threshold
// and the capped pullback values, the delimiter is certified either separated
// from zero (no interior minimal set can cross the band) or sinking into the
// collapse band eventually, even though the doubling ladder gave up first.
MinimalSetCensus salvaged_census(const Family& f, const Driver& d, const FiberGrid& grid,
                                 const ScanConfig& cfg) {
    if (!d.trajectory())
        return inconclusive_census("pullback stalled at horizon cap (symbolic driver)");
    const double tol_pinch = cfg.tol_pinch();
    const double tol_sep = cfg.tol_sep();
    const double rho = dissipativity_radius(f, d);
    const double guard = 1e3 * rho;
    const double t_cap =
        cfg.attractor.pullback_T0 * std::ldexp(1.0, cfg.attractor.max_doublings);
    // Capped pullback values: beta caps bound the true upper delimiters from
    // above, alpha caps bound the lower ones from below.
    AttractorSlice caps;
    for (double s : grid.offsets) {
        const double b = flow_map(f, d, s - t_cap, rho, s, cfg.attractor.ode_tol, guard);
        const double a = flow_map(f, d, s - t_cap, -rho, s, cfg.attractor.ode_tol, guard);
        caps.fibers.push_back({s, a, b});
    }

    const double span = d.natural_span();
    // sign = +1 for the upper side (band of positive constants), -1 mirrored.
    auto away_extreme = [&](double sign, double x) {
        // Extreme of sign*rhs over the base: positive means the field pushes
        // the constant sign*x away from zero uniformly in time.
        double v = sign * rhs(f, d, 0.0, sign * x);
        for (int i = 1; i < 64; ++i) v = std::min(v, sign * rhs(f, d, span * i / 64.0, sign * x));
        return v;
    };
    auto toward_extreme = [&](double sign, double x) {
        double v = sign * rhs(f, d, 0.0, sign * x);
        for (int i = 1; i < 64; ++i) v = std::max(v, sign * rhs(f, d, span * i / 64.0, sign * x));
        return v;
    };
    auto side_status = [&](double sign, double vmin, double vmax) {
        if (vmax < tol_pinch) return SideStatus::Collapsed;
        if (vmin > tol_pinch) {
            // Largest prefix of a geometric band [tol_pinch, 0.999*vmin] on
            // which the field points away from zero at every sampled time. A
            // prefix reaching past the separation threshold certifies both the
            // separation of the copy and the absence of an interior minimal
            // set below it.
            double x_pos = 0.0;
            for (int i = 0; i <= 24; ++i) {
                const double x = tol_pinch * std::pow(0.999 * vmin / tol_pinch, i / 24.0);
                if (!(away_extreme(sign, x) > 0.0)) break;
                x_pos = x;
            }
            if (x_pos >= tol_sep) return SideStatus::Distinct;
        }
        // Uniformly inward band up to the caps: the delimiter keeps moving
        // toward zero and eventually enters the collapse band.
        for (int i = 0; i <= 24; ++i) {
            const double x = tol_pinch * std::pow(1.001 * vmax / tol_pinch, i / 24.0);
            if (!(toward_extreme(sign, x) < 0.0)) return SideStatus::Undecided;
        }
        return SideStatus::Collapsed;
    };
    const PinchingMetrics pm = pinching_metrics(caps);
    const SideStatus up = side_status(1.0, pm.upper_min, pm.upper_max);
    const SideStatus lo = side_status(-1.0, pm.lower_min, pm.lower_max);
    if (up == SideStatus::Undecided || lo == SideStatus::Undecided)
        return inconclusive_census("pullback stalled; semiequilibrium salvage undecided");
    if (up == SideStatus::Distinct && lo == SideStatus::Distinct)
        return inconclusive_census(
            "pullback stalled; salvage cannot place the middle copy with both sides distinct");

    MinimalSetCensus c;
    ExponentReport zero_exp;
    try {
        zero_exp = lyapunov_on_equilibrium(f, d, nullptr, false, cfg.spectrum);
    } catch (const NoConvergence& e) {
        return inconclusive_census(std::string("zero exponent: ") + e.what());
    }
    if (up == SideStatus::Collapsed && lo == SideStatus::Collapsed) {
        c.count = 1;
        c.sets.push_back({Position::Zero, zero_exp, DelimiterSource::Zero, 0.0});
        c.label = CensusLabel::One;
        return c;
    }
    const bool upper_side = (up == SideStatus::Distinct);
    c.alpha0 = upper_side ? 0.0 : caps.fibers.front().alpha;
    c.beta0 = upper_side ? caps.fibers.front().beta : 0.0;
    // The capped values bracket the copy against the certified band; use them
    // as accepted exponent samples (the hyperbolicity band tolerance absorbs
    // the near-threshold error).
    EquilibriumSamples outer = samples_from(caps, upper_side);
    ExponentReport outer_exp;
    try {
        outer_exp = lyapunov_on_equilibrium(f, d, &outer, false, cfg.spectrum);
    } catch (const NoConvergence& e) {
        return inconclusive_census(std::string("exponent: ") + e.what());
    }
    c.count = 2;
    if (upper_side) {
        c.sets.push_back({Position::Zero, zero_exp, DelimiterSource::Zero, 0.0});
        c.sets.push_back({Position::AboveZero, outer_exp, DelimiterSource::Beta, c.beta0});
        c.label = CensusLabel::TwoUpper;
    } else {
        c.sets.push_back({Position::BelowZero, outer_exp, DelimiterSource::Alpha, c.alpha0});
        c.sets.push_back({Position::Zero, zero_exp, DelimiterSource::Zero, 0.0});
        c.label = CensusLabel::TwoLower;
    }
    return c;
}

}  // namespace

MinimalSetCensus count_minimal_sets(const Family& f, const Driver& d, const FiberGrid& grid,
                                    const ScanConfig& cfg) {
    const double tol_pinch = cfg.tol_pinch();
    const double tol_sep = cfg.tol_sep();
    SpectrumConfig scfg = cfg.spectrum;
    AttractorConfig acfg = cfg.attractor;

    AttractorSlice slice;
    try {
        slice = pullback_delimiters(f, d, grid, cfg.tol, acfg);
    } catch (const NoConvergence&) {
        try {
            return salvaged_census(f, d, grid, cfg);
        } catch (const Error& e) {
            return inconclusive_census(std::string("pullback salvage: ") + e.what());
        }
    }
    const PinchingMetrics pm = pinching_metrics(slice);

    const bool up_distinct = pm.upper_min > tol_sep;
    const bool up_zero = pm.upper_max < tol_pinch;
    const bool lo_distinct = pm.lower_min > tol_sep;
    const bool lo_zero = pm.lower_max < tol_pinch;
    if ((!up_distinct && !up_zero) || (!lo_distinct && !lo_zero))
        return inconclusive_census("pinched delimiter signature");

    MinimalSetCensus c;
    c.alpha0 = slice.fibers.front().alpha;
    c.beta0 = slice.fibers.front().beta;

    ExponentReport zero_exp;
    try {
        zero_exp = lyapunov_on_equilibrium(f, d, nullptr, false, scfg);
    } catch (const NoConvergence& e) {
        return inconclusive_census(std::string("zero exponent: ") + e.what());
    }

    auto copy_exponent = [&](const EquilibriumSamples& eq, bool reversed) {
        return lyapunov_on_equilibrium(f, d, &eq, reversed, scfg);
    };

    try {
        if (!up_distinct && !lo_distinct) {
            c.count = 1;
            c.sets.push_back({Position::Zero, zero_exp, DelimiterSource::Zero, 0.0});
            c.label = CensusLabel::One;
            return c;
        }

        // At least one distinct delimiter: try the repulsive middle copy.
        std::optional<EquilibriumSamples> kappa;
        bool middle_at_zero = false;
        try {
            EquilibriumSamples k = repulsive_middle(f, d, grid, cfg.tol, acfg);
            double kmax = 0.0;
            bool all_conv = true;
            for (size_t i = 0; i < k.values.size(); ++i) {
                kmax = std::max(kmax, std::fabs(k.values[i]));
                all_conv = all_conv && k.converged[i];
            }
            if (kmax < tol_sep) {
                middle_at_zero = true;  // backward pullback settles on M0
            } else if (all_conv) {
                kappa = std::move(k);
            } else {
                return inconclusive_census("repulsive middle: partial convergence away from 0");
            }
        } catch (const BlowUp&) {
            middle_at_zero = false;  // no interior repulsive copy
        } catch (const NoConvergence& e) {
            return inconclusive_census(std::string("repulsive middle: ") + e.what());
        }

        if (up_distinct && lo_distinct) {
            // Three sets {alpha, M0, beta}; the middle must be M0.
            if (kappa) return inconclusive_census("middle copy away from 0 with both delimiters distinct");
            EquilibriumSamples lo_eq = samples_from(slice, false);
            EquilibriumSamples up_eq = samples_from(slice, true);
            c.count = 3;
            c.sets.push_back({Position::BelowZero, copy_exponent(lo_eq, false),
                              DelimiterSource::Alpha, c.alpha0});
            c.sets.push_back({Position::Zero, zero_exp, DelimiterSource::Zero, 0.0});
            c.sets.push_back({Position::AboveZero, copy_exponent(up_eq, false),
                              DelimiterSource::Beta, c.beta0});
            c.label = CensusLabel::ThreeSplit;
            c.kappa0 = 0.0;
            return c;
        }

        // Exactly one side distinct.
        const bool upper_side = up_distinct;
        EquilibriumSamples outer = samples_from(slice, upper_side);
        ExponentReport outer_exp = copy_exponent(outer, false);
        if (kappa) {
            const double k0 = kappa->values.front();
            const bool side_ok = upper_side ? (k0 > 0) : (k0 < 0);
            if (!side_ok) return inconclusive_census("middle copy on the wrong side of 0");
            ExponentReport k_exp = copy_exponent(*kappa, true);
            c.count = 3;
            c.kappa0 = k0;
            if (upper_side) {
                c.sets.push_back({Position::Zero, zero_exp, DelimiterSource::Zero, 0.0});
                c.sets.push_back({Position::AboveZero, k_exp, DelimiterSource::Kappa, k0});
                c.sets.push_back({Position::AboveZero, outer_exp, DelimiterSource::Beta, c.beta0});
                c.label = CensusLabel::ThreeUpper;
            } else {
                c.sets.push_back({Position::BelowZero, outer_exp, DelimiterSource::Alpha, c.alpha0});
                c.sets.push_back({Position::BelowZero, k_exp, DelimiterSource::Kappa, k0});
                c.sets.push_back({Position::Zero, zero_exp, DelimiterSource::Zero, 0.0});
                c.label = CensusLabel::ThreeLower;
            }
            return c;
        }
        (void)middle_at_zero;
        c.count = 2;
        if (upper_side) {
            c.sets.push_back({Position::Zero, zero_exp, DelimiterSource::Zero, 0.0});
            c.sets.push_back({Position::AboveZero, outer_exp, DelimiterSource::Beta, c.beta0});
            c.label = CensusLabel::TwoUpper;
        } else {
            c.sets.push_back({Position::BelowZero, outer_exp, DelimiterSource::Alpha, c.alpha0});
            c.sets.push_back({Position::Zero, zero_exp, DelimiterSource::Zero, 0.0});
            c.label = CensusLabel::TwoLower;
        }
        return c;
    } catch (const NoConvergence& e) {
        return inconclusive_census(std::string("exponent: ") + e.what());
    } catch (const Inconclusive& e) {
        return inconclusive_census(e.what());
    }
}

namespace {

struct ScanContext {
    const Family* family;
    const Driver* driver;
    bool scan_mu;  // parameter is mu instead of lambda
    FiberGrid grid;
    ScanConfig cfg;
    double lo, hi, tol_bif;

    MinimalSetCensus census_at(double p) const {
        Family f = *family;
        if (scan_mu)
            f.mu = p;
        else
            f.lambda = p;
        try {
            return count_minimal_sets(f, *driver, grid, cfg);
        } catch (const Error& e) {
            return inconclusive_census(e.what());
        }
    }
};

struct Transition {
    double lo = 0, hi = 0;
    CensusLabel from = CensusLabel::One, to = CensusLabel::One;
    double mid() const { return 0.5 * (lo + hi); }
};

using SampleMap = std::map<double, MinimalSetCensus>;

// Adjacent pairs of differing non-inconclusive labels, with the bracket
// spanning any inconclusive samples in between.
std::vector<Transition> find_transitions(const SampleMap& samples) {
    std::vector<Transition> out;
    const MinimalSetCensus* prev = nullptr;
    double prev_x = 0;
    for (const auto& [x, c] : samples) {
        if (c.label == CensusLabel::Inconclusive) continue;
        if (prev && prev->label != c.label)
            out.push_back({prev_x, x, prev->label, c.label});
        prev = &c;
        prev_x = x;
    }
    return out;
}

// Midpoint of the widest gap between consecutive samples inside [lo, hi].
double widest_gap_mid(const SampleMap& samples, double lo, double hi) {
    double best_lo = lo, best_w = -1.0, prev = lo;
    for (auto it = samples.upper_bound(lo); it != samples.end() && it->first < hi; ++it) {
        if (it->first - prev > best_w) {
            best_w = it->first - prev;
            best_lo = prev;
        }
        prev = it->first;
    }
    if (hi - prev > best_w) {
        best_w = hi - prev;
        best_lo = prev;
    }
    return best_lo + 0.5 * best_w;
}

void refine(const ScanContext& ctx, SampleMap& samples) {
    int budget = ctx.cfg.bisect_max_iter * 8;
    // A wide nonhyperbolic window yields Inconclusive at every probe and the
    // bracket can never narrow; a separate small budget per transition keeps
    // the scan from burning the whole refinement allowance on it (the bracket
    // midpoint is reported) while still refining the other transitions.
    std::map<std::pair<CensusLabel, CensusLabel>, int> inconclusive_budget;
    for (;;) {
        auto transitions = find_transitions(samples);
        bool progressed = false;
        for (const auto& tr : transitions) {
            if (tr.hi - tr.lo <= ctx.tol_bif) continue;
            int& inc = inconclusive_budget.emplace(std::make_pair(tr.from, tr.to), 16)
                           .first->second;
            if (inc <= 0) continue;
            const double mid = widest_gap_mid(samples, tr.lo, tr.hi);
            if (samples.count(mid) || budget-- <= 0) continue;
            const MinimalSetCensus c = ctx.census_at(mid);
            if (c.label == CensusLabel::Inconclusive) --inc;
            samples.emplace(mid, c);
            progressed = true;
            break;  // re-derive transitions with the new sample
        }
        if (!progressed) return;
    }
}

// Probes just outside/inside a One <-> ThreeSplit jump: a narrow saddle-node
// window between the two regimes would otherwise be invisible to bisection.
void zoom_probes(const ScanContext& ctx, SampleMap& samples) {
    auto transitions = find_transitions(samples);
    std::vector<double> probes;
    for (const auto& tr : transitions) {
        const bool jump = (tr.from == CensusLabel::One && tr.to == CensusLabel::ThreeSplit) ||
                          (tr.from == CensusLabel::ThreeSplit && tr.to == CensusLabel::One);
        if (!jump) continue;
        const double v = tr.mid();
        for (int k = 1; k <= 32; k *= 2) {
            probes.push_back(v - k * ctx.tol_bif);
            probes.push_back(v + k * ctx.tol_bif);
        }
    }
    for (double p : probes) {
        if (p <= ctx.lo || p >= ctx.hi || samples.count(p)) continue;
        samples.emplace(p, ctx.census_at(p));
    }
}

std::vector<CensusLabel> collapsed_labels(const SampleMap& samples) {
    std::vector<CensusLabel> seq;
    for (const auto& [x, c] : samples) {
        if (c.label == CensusLabel::Inconclusive) continue;
        if (seq.empty() || seq.back() != c.label) seq.push_back(c.label);
    }
    return seq;
}

void match_lambda_pattern(DiagramReport& rep, const std::vector<CensusLabel>& seq,
                          const std::vector<Transition>& tr) {
    using L = CensusLabel;
    auto t = [&](size_t i) { return tr[i].mid(); };
    if (seq == std::vector<L>{L::One, L::ThreeSplit}) {
        rep.pattern = Pattern::ClassicalPitchfork;
        rep.side = CollisionSide::Both;
        rep.points = {{t(0), BifKind::Pitchfork}};
    } else if (seq == std::vector<L>{L::One, L::ThreeUpper, L::ThreeSplit} ||
               seq == std::vector<L>{L::One, L::ThreeUpper, L::TwoUpper, L::ThreeSplit}) {
        rep.pattern = Pattern::SaddleNodeTranscritical;
        rep.side = CollisionSide::LowerCollides;
        const size_t last = tr.size() - 1;
        rep.points = {{t(0), BifKind::SaddleNode},
                      {t(1), BifKind::TranscriticalEndpointLower},
                      {t(last), BifKind::TranscriticalEndpointUpper}};
    } else if (seq == std::vector<L>{L::One, L::ThreeLower, L::ThreeSplit} ||
               seq == std::vector<L>{L::One, L::ThreeLower, L::TwoLower, L::ThreeSplit}) {
        rep.pattern = Pattern::SaddleNodeTranscritical;
        rep.side = CollisionSide::UpperCollides;
        const size_t last = tr.size() - 1;
        rep.points = {{t(0), BifKind::SaddleNode},
                      {t(1), BifKind::TranscriticalEndpointLower},
                      {t(last), BifKind::TranscriticalEndpointUpper}};
    } else if (seq == std::vector<L>{L::One, L::TwoLower, L::ThreeSplit}) {
        rep.pattern = Pattern::GeneralizedPitchfork;
        rep.side = CollisionSide::UpperCollides;
        rep.points = {{t(0), BifKind::GeneralizedLower},
                      {t(1), BifKind::TranscriticalEndpointUpper}};
    } else if (seq == std::vector<L>{L::One, L::TwoUpper, L::ThreeSplit}) {
        rep.pattern = Pattern::GeneralizedPitchfork;
        rep.side = CollisionSide::LowerCollides;
        rep.points = {{t(0), BifKind::GeneralizedLower},
                      {t(1), BifKind::TranscriticalEndpointUpper}};
    } else {
        rep.pattern = Pattern::Unresolved;
        rep.note = "census label sequence matches no known lambda-diagram pattern";
    }
}

void match_mu_pattern(DiagramReport& rep, const std::vector<CensusLabel>& seq,
                      const std::vector<Transition>& tr) {
    using L = CensusLabel;
    auto t = [&](size_t i) { return tr[i].mid(); };
    if (seq == std::vector<L>{L::ThreeSplit}) {
        rep.pattern = Pattern::NoBifurcation;
    } else if (seq == std::vector<L>{L::ThreeLower, L::One, L::ThreeUpper}) {
        rep.pattern = Pattern::TwoSaddleNodes;
        rep.points = {{t(0), BifKind::MuSaddleLower}, {t(1), BifKind::MuSaddleUpper}};
    } else if (seq == std::vector<L>{L::TwoLower, L::TwoUpper}) {
        rep.pattern = Pattern::WeakGeneralizedTranscritical;
        rep.points = {{t(0), BifKind::MuSaddleLower}, {t(0), BifKind::MuSaddleUpper}};
    } else if (seq == std::vector<L>{L::TwoLower, L::One, L::TwoUpper}) {
        rep.pattern = Pattern::WeakGeneralizedTranscritical;
        rep.points = {{t(0), BifKind::MuSaddleLower}, {t(1), BifKind::MuSaddleUpper}};
    } else {
        rep.pattern = Pattern::Unresolved;
        rep.note = "census label sequence matches no known mu-diagram pattern";
    }
}

DiagramReport scan_impl(const Family& f, const Driver& d, double lo, double hi,
                        const ScanConfig& cfg, bool mu_scan) {
    if (!(hi > lo)) throw PreconditionFailed("scan: need hi > lo");
    f.validate(d);
    ScanContext ctx;
    ctx.family = &f;
    ctx.driver = &d;
    ctx.scan_mu = mu_scan;
    ctx.grid = FiberGrid::uniform(d, cfg.fibers);
    ctx.cfg = cfg;
    ctx.lo = lo;
    ctx.hi = hi;
    ctx.tol_bif = cfg.tol_bif > 0 ? cfg.tol_bif : 1e-3 * (hi - lo);

    // Coarse grid in parallel, refinement sequential per bracket.
    const int n = std::max(2, cfg.grid_points);
    std::vector<MinimalSetCensus> coarse(n);
    parallel_for(n, cfg.jobs, [&](int i) {
        coarse[i] = ctx.census_at(lo + (hi - lo) * i / (n - 1));
    });
    SampleMap samples;
    for (int i = 0; i < n; ++i) samples.emplace(lo + (hi - lo) * i / (n - 1), coarse[i]);

    refine(ctx, samples);
    if (!mu_scan) {
        zoom_probes(ctx, samples);
        refine(ctx, samples);
    }

    DiagramReport rep;
    const auto seq = collapsed_labels(samples);
    const auto tr = find_transitions(samples);
    if (mu_scan) {
        try {
            const SpectrumInterval sp = sacker_sell(d, f.a1);
            const double slo = sp.lo + f.lambda, shi = sp.hi + f.lambda;
            rep.expected_pattern = (slo > 0)   ? Pattern::NoBifurcation
                                   : (shi < 0) ? Pattern::TwoSaddleNodes
                                               : Pattern::WeakGeneralizedTranscritical;
        } catch (const Error&) {
        }
        match_mu_pattern(rep, seq, tr);
    } else {
        match_lambda_pattern(rep, seq, tr);
        if (rep.pattern == Pattern::GeneralizedPitchfork && d.trajectory()) {
            rep.note =
                "generalized pitchfork matched on a uniquely ergodic trajectory driver; "
                "point spectrum makes this pattern theoretically unreachable here";
        }
    }
    for (const auto& [x, c] : samples) rep.grid.emplace_back(x, c);
    return rep;
}

}  // namespace

DiagramReport scan_lambda(const Family& f, const Driver& d, double lo, double hi,
                          const ScanConfig& cfg) {
    return scan_impl(f, d, lo, hi, cfg, false);
}

DiagramReport scan_mu(const Family& f, const Driver& d, double lo, double hi,
                      const ScanConfig& cfg) {
    return scan_impl(f, d, lo, hi, cfg, true);
}

}  // namespace skewfork
