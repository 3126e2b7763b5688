#pragma once

#include "plshark/pl_map.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace plshark {

// Enumeration depth limit, 20 unless the PLSHARK_HORIZON environment variable
// overrides it (read once).
unsigned default_horizon();

// Affine restriction of f^n: f^n(x) = slope*x + offset for x in [lo, hi].
struct IterateLap {
    Rat lo, hi;
    Rat slope, offset;
};

// Depth-first traversal of the laps of f^n over [lo, hi].  Maintains the exact
// affine form on a shrinking subinterval by chasing piece preimages; the full
// composition is never materialized.  Laps are visited left to right and their
// union is exactly [lo, hi].
void visit_iterate_laps(const PLMap& f, unsigned n, const Rat& lo, const Rat& hi,
                        const std::function<void(const IterateLap&)>& visit);

// Isolated solutions of f^n(x) = x, strictly sorted and duplicate-free.
struct SolutionSet {
    unsigned n = 0;
    std::vector<Rat> points;
};

SolutionSet periodic_points(const PLMap& f, unsigned n);
SolutionSet periodic_points_in(const PLMap& f, unsigned n, const Rat& lo, const Rat& hi);

// Extremal solutions of f^n(x) = c in [lo, hi].  A lap that is constant at
// value c contributes its endpoints, so these are well defined even when the
// solution set contains whole segments.
std::optional<Rat> min_solution_of_level(const PLMap& f, unsigned n, const Rat& c,
                                         const Rat& lo, const Rat& hi);
std::optional<Rat> max_solution_of_level(const PLMap& f, unsigned n, const Rat& c,
                                         const Rat& lo, const Rat& hi);

// Smallest d >= 1 with f^d(x) = x; NotPeriodic if none is found within cap
// (0 means default_horizon()).
unsigned least_period(const PLMap& f, const Rat& x, unsigned cap = 0);

struct Orbit {
    std::vector<Rat> points;     // sorted ascending; |points| = least_period
    unsigned least_period = 0;
    Rat diameter;                // max - min
};

// The orbit {x, f(x), ...} of a periodic point, canonicalized.
Orbit orbit_of_point(const PLMap& f, const Rat& x, unsigned cap = 0);

// All orbits of least period exactly n, points sorted within each orbit,
// orbits sorted by smallest point.
std::vector<Orbit> orbits_of_period(const PLMap& f, unsigned n);

// Orbit of least period n minimizing the diameter; ties broken by smaller max,
// then by larger min.
Orbit minimal_diameter_orbit(const PLMap& f, unsigned n);

// { n <= horizon : f has an orbit of least period n }, ascending.  Computed
// from solution counts via the divisor relation
//   |Fix(f^n)| = sum over d | n of (points of least period d),
// so no per-point period classification is needed.
std::vector<unsigned> period_set(const PLMap& f, unsigned horizon);

// True when P.points is a single f-orbit matching P's period and diameter.
bool is_orbit_of(const PLMap& f, const Orbit& P);

} // namespace plshark
