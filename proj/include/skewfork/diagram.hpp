#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewfork/spectrum.hpp"

namespace skewfork {

enum class Position { BelowZero, Zero, AboveZero };
enum class DelimiterSource { Alpha, Zero, Beta, Kappa };

struct MinimalSetRecord {
    Position position = Position::Zero;
    ExponentReport exponent;
    DelimiterSource source = DelimiterSource::Zero;
    double value_at_fiber0 = 0.0;
};

// Census label used by the pattern matcher: count plus the side the non-zero
// copies live on.
enum class CensusLabel {
    One,         // only M0
    TwoLower,    // {alpha, 0}
    TwoUpper,    // {0, beta}
    ThreeLower,  // {alpha, kappa, 0} with both extra copies below zero
    ThreeSplit,  // {alpha, 0, beta}
    ThreeUpper,  // {0, kappa, beta}
    Inconclusive
};

struct MinimalSetCensus {
    int count = 0;
    std::vector<MinimalSetRecord> sets;
    CensusLabel label = CensusLabel::Inconclusive;
    std::string note;
    double alpha0 = 0.0, beta0 = 0.0;  // delimiters at the first fiber
    std::optional<double> kappa0;
};

enum class Pattern {
    SaddleNodeTranscritical,
    ClassicalPitchfork,
    GeneralizedPitchfork,
    NoBifurcation,
    TwoSaddleNodes,
    WeakGeneralizedTranscritical,
    Unresolved
};

enum class BifKind {
    SaddleNode,
    TranscriticalEndpointLower,
    TranscriticalEndpointUpper,
    Pitchfork,
    GeneralizedLower,
    MuSaddleLower,
    MuSaddleUpper
};

enum class CollisionSide { LowerCollides, UpperCollides, Both, Unknown };

struct BifurcationPoint {
    double value = 0.0;
    BifKind kind = BifKind::Pitchfork;
};

struct DiagramReport {
    std::vector<std::pair<double, MinimalSetCensus>> grid;  // sorted by parameter
    std::vector<BifurcationPoint> points;
    Pattern pattern = Pattern::Unresolved;
    CollisionSide side = CollisionSide::Unknown;
    std::string note;
    std::optional<Pattern> expected_pattern;  // mu-scans: branch predicted by sp(a1)
};

struct ScanConfig {
    double tol = 1e-6;          // pullback tolerance
    double tol_bif = 0.0;       // 0 means 1e-3 * range width
    int grid_points = 41;
    int fibers = 8;
    int jobs = 0;
    int bisect_max_iter = 40;
    AttractorConfig attractor;
    SpectrumConfig spectrum;

    double tol_pinch() const { return 10.0 * tol; }
    double tol_sep() const { return 1e3 * tol; }
};

// Counts minimal sets at the family's current (lambda, mu): pullback
// delimiters, pinching metrics, an attempted repulsive middle, and exponent
// classification of every copy.
MinimalSetCensus count_minimal_sets(const Family& f, const Driver& d, const FiberGrid& grid,
                                    const ScanConfig& cfg);

DiagramReport scan_lambda(const Family& f, const Driver& d, double lo, double hi,
                          const ScanConfig& cfg);
DiagramReport scan_mu(const Family& f, const Driver& d, double lo, double hi,
                      const ScanConfig& cfg);

const char* to_string(Pattern p);
const char* to_string(BifKind k);
const char* to_string(CollisionSide s);
const char* to_string(CensusLabel l);

}  // namespace skewfork
