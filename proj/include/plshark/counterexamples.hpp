#pragma once

#include "plshark/periodic_orbits.hpp"

#include <cstdint>
#include <vector>

namespace plshark {

// The tent map T(x) = 1 - |2x - 1| on [0, 1]: nodes (0,0), (1/2,1), (1,0).
PLMap tent();

// The tent map clamped to the hull of its minimal-diameter least-period-n
// orbit P_n.  Post-verified before returning: the result has exactly one
// least-period-n orbit (namely P_n) and no orbit of any period m -< n with
// m <= n.  For n = 1 the hull is a point and the result is the constant map
// at the fixed point.
PLMap truncated_tent(unsigned n);

// Nested minimal-diameter orbits Q_3, Q_6, ..., Q_{2^depth * 3} of the tent
// map, each chosen inside the hull of the previous one, plus the clamp bounds
// of the deepest level.  This is the finite-depth stage of the inverse limit
// whose period set shrinks to the powers of two; the limit bounds themselves
// are not finitely computable, so only the trace is represented.
struct TowerTrace {
    unsigned depth = 0;
    std::vector<Orbit> orbits;   // orbits[i] has least period 2^i * 3
    Rat q0, q1;                  // min/max of the deepest orbit
};

struct DoublingTower {
    PLMap map;                   // clamp(tent, q0, q1)
    TowerTrace trace;
};

DoublingTower doubling_tower(unsigned depth);

// Deterministic property-test input: `pieces` linear pieces on [0, 1] with
// small-denominator nodes, no piece of slope +-1 and no two consecutive pieces
// with slope product +-1 (such products are what produce identity laps in low
// iterates).
PLMap random_plmap(std::uint64_t seed, unsigned pieces);

} // namespace plshark
