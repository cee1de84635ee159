#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace skewfork {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return lo <= x && x <= hi; }
    double width() const { return hi - lo; }
};

inline Interval operator+(Interval a, Interval b) { return {a.lo + b.lo, a.hi + b.hi}; }

inline Interval scale(Interval a, double k) {
    if (k >= 0) return {k * a.lo, k * a.hi};
    return {k * a.hi, k * a.lo};
}

inline Interval mul(Interval a, Interval b) {
    double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

inline Interval intersect(Interval a, Interval b) {
    Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (r.lo > r.hi) return a;  // disjoint enclosures should not happen; keep the first
    return r;
}

// Composite 10-point Gauss-Legendre quadrature over [a, b] (a <= b not required).
double integrate(const std::function<double(double)>& g, double a, double b,
                 double max_cell = 0.25);

// Solves A x = b for a small dense system with partial pivoting. A is row-major n*n.
// Returns false if a pivot is below 1e-14 in magnitude.
bool solve_dense(std::vector<double> A, std::vector<double> b, std::vector<double>& x);

// Runs fn(i) for i in [0, n) on up to `jobs` threads (jobs <= 0 means hardware
// concurrency); results land in a caller-visible vector in index order, so the
// aggregation is deterministic regardless of scheduling.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace skewfork
