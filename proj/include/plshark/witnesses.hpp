#pragma once

#include "plshark/periodic_orbits.hpp"

#include <string>
#include <vector>

namespace plshark {

// A pair a < b with f(b) < a < b <= f(a) (or the variant with the other
// inequality strict): f maps [a, b] across itself with a flip.  Every
// construction below starts from such a pair.

// Extracted from an orbit of least period >= 3:
//   p = largest orbit point that still moves up under f,
//   b = next orbit point above p,
//   a = largest preimage of b in [p, b).
struct OrbitCoveringPair {
    Rat p, b, a;
};
OrbitCoveringPair covering_pair_from_orbit(const PLMap& f, const Orbit& P);

// Extracted from a displaced point x0 with f^n(x0) <= x0 < f(x0), n >= 2,
// using only the finite trajectory X = {x0, f(x0), ..., f^{n-1}(x0)}:
//   a = largest x in X with x0 <= x and f(x) > x,
//   b = smallest x in X with a < x <= f(a) and f(b) < a.
// At degenerate inputs (for example x0 exactly periodic) no admissible b may
// exist; that raises ConstructionFailed, while a failed precondition raises
// HypothesisNotSatisfied.
struct DisplacedCoveringPair {
    Rat a, b;
};
DisplacedCoveringPair covering_pair_from_displaced_point(const PLMap& f, const Rat& x0,
                                                         unsigned n);

// Witness bundle built from a covering pair (a, b):
//   z = smallest fixed point of f in (a, b)
//   v = largest solution of f(x) = b in [a, z)
//   u = largest solution of f(x) = z at or below v, else domain_lo
//   y = largest period-2 point of f in [u, v)
// certified to satisfy
//   f(z) = z,  f^2(y) = y != f(y),  f(v) = b,
//   max{f^2(v), y} < v < z < min{f(y), f(v)},
//   and, lap-exactly on (y, v]:  f(x) > z  and  f^2(x) < x.
struct ForcingWitness {
    Rat a, b;
    Rat z, y, v, u;
};
ForcingWitness forcing_witness(const PLMap& f, const Rat& a, const Rat& b);

// Re-runs every certified check on an existing witness; throws
// ConstructionFailed naming the first failed check.
void certify(const PLMap& f, const ForcingWitness& w);

// From an orbit of odd least period m >= 3: the decreasing chain of periodic
// points of periods m+2, m+4, ..., m+2*count, each the smallest solution of
// f^{m+2i}(x) = x in [y, previous point].
struct CascadePoint {
    unsigned period;
    Rat point;
};
std::vector<CascadePoint> odd_period_cascade(const PLMap& f, const Orbit& P, unsigned count);

// Disjoint closed intervals I0, I1 whose images under f^2 each cover I0 and
// I1, certified exactly, plus the construction trace:
//   z0 = smallest fixed point of g = f^2 in [v, z]
//   d  = largest solution of g(x) = z0 at or below y
//   s  = exact minimum of g over [d, z0]   (s < d is the turbulence fact)
//   t  = smallest solution of g(x) = d in [d, z0]
struct TurbulenceCertificate {
    Rat i0_lo, i0_hi;
    Rat i1_lo, i1_hi;
    Rat z0, d, s, t;
};
TurbulenceCertificate turbulence_certificate(const PLMap& f, const Orbit& P);

void certify(const PLMap& f, const TurbulenceCertificate& c);

// From an orbit of odd least period m >= 3: certified f-orbits of least
// periods 2, 4, ..., 2*n_max.  Each is Q_n united with f(Q_n), where Q_n is
// the orbit of c_n = min{x in [d, t] : ghat^n(x) = x} under the one-sided
// clamp ghat = max{g, d} on [d, z0].
std::vector<Orbit> even_period_orbits(const PLMap& f, const Orbit& P, unsigned n_max);

// Structured text reports: every field as an exact rational, certified
// inequalities echoed.
std::string to_report(const PLMap& f, const OrbitCoveringPair& pb);
std::string to_report(const PLMap& f, const ForcingWitness& w);
std::string to_report(const PLMap& f, const TurbulenceCertificate& c);
std::string to_report(const std::vector<CascadePoint>& cascade);
std::string to_report(const std::vector<Orbit>& orbits, const std::string& heading);

} // namespace plshark
