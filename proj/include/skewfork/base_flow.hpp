#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewfork/coefficients.hpp"

namespace skewfork {

enum class DriverKind { Autonomous, Periodic, QuasiPeriodic, SymbolicFiniteErgodic };

struct BirkhoffResult {
    double mean = 0.0;
    double window_min = 0.0;
    double window_max = 0.0;
};

// A concrete base flow: evaluates coefficients along the generating orbit
// w0 . t. Fibers are represented as time offsets (origin) along that orbit.
// Immutable after construction; shifted() returns a copy with a moved origin.
class Driver {
public:
    DriverKind kind = DriverKind::Autonomous;
    double period = 0.0;                  // Periodic only
    std::vector<double> frequencies;      // QuasiPeriodic only
    std::vector<double> phases;           // QuasiPeriodic only
    int n_measures = 1;                   // SymbolicFiniteErgodic only
    std::map<std::string, CoeffPtr> coefficients;
    double origin = 0.0;                  // fiber offset along the generating orbit

    bool trajectory() const { return kind != DriverKind::SymbolicFiniteErgodic; }

    const CoefficientFn& coeff(const std::string& id) const;

    double eval(const std::string& id, double t) const;
    Interval bounds(const std::string& id) const;
    BirkhoffResult birkhoff(const std::string& id, double horizon, double window) const;

    Driver shifted(double s) const;
    Driver with_coefficient(const std::string& id, CoeffPtr fn) const;

    // A natural sampling scale: the period for Periodic, the slowest angular
    // period for QuasiPeriodic, 8 for Autonomous/symbolic.
    double natural_span() const;
};

}  // namespace skewfork
