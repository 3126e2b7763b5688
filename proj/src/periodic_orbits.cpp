#include "plshark/periodic_orbits.hpp"

#include "plshark/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace plshark {

unsigned default_horizon() {
    static const unsigned horizon = [] {
        if (const char* env = std::getenv("PLSHARK_HORIZON")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1 && v <= 64)
                return static_cast<unsigned>(v);
        }
        return 20u;
    }();
    return horizon;
}

namespace {

// One step of preimage chasing: the current chain constrains x to [lo, hi]
// where f^depth(x) = A*x + B; branch over the pieces of f that the exact image
// intersects.  Pieces touching the image in a single shared endpoint are
// skipped: the adjacent piece produces the same continuation there, by
// continuity.
void dfs(const PLMap& f, unsigned remaining, const Rat& lo, const Rat& hi, const Rat& A,
         const Rat& B, const std::function<void(const IterateLap&)>& visit) {
    if (remaining == 0) {
        visit({lo, hi, A, B});
        return;
    }
    Rat v0 = A * lo + B;
    Rat v1 = A * hi + B;
    if (v1 < v0)
        std::swap(v0, v1);
    const auto& nodes = f.nodes();
    const std::size_t first = f.piece_index(v0);
    for (std::size_t j = first; j < f.piece_count(); ++j) {
        if (j > first && nodes[j].x >= v1)
            break;
        const Rat& clo = std::max(v0, nodes[j].x);
        const Rat& chi = std::min(v1, nodes[j + 1].x);
        if (clo > chi)
            continue;
        Rat nlo, nhi;
        if (A == 0) {
            nlo = lo;   // constant form: the whole subinterval satisfies the constraint
            nhi = hi;
        } else if (A > 0) {
            nlo = (clo - B) / A;
            nhi = (chi - B) / A;
        } else {
            nlo = (chi - B) / A;
            nhi = (clo - B) / A;
        }
        dfs(f, remaining - 1, nlo, nhi, f.piece_slope(j) * A,
            f.piece_slope(j) * B + f.piece_offset(j), visit);
    }
}

void check_range(const PLMap& f, unsigned n, const Rat& lo, const Rat& hi) {
    if (n == 0)
        throw DomainError("iterate solver: n must be positive");
    if (lo > hi)
        throw DomainError("iterate solver: empty interval");
    if (lo < f.domain_lo() || hi > f.domain_hi())
        throw DomainError("iterate solver: interval escapes the domain");
}

} // namespace

void visit_iterate_laps(const PLMap& f, unsigned n, const Rat& lo, const Rat& hi,
                        const std::function<void(const IterateLap&)>& visit) {
    check_range(f, n, lo, hi);
    dfs(f, n, lo, hi, Rat(1), Rat(0), visit);
}

SolutionSet periodic_points_in(const PLMap& f, unsigned n, const Rat& lo, const Rat& hi) {
    if (n > default_horizon())
        throw HorizonExceeded("periodic_points: n = " + std::to_string(n) +
                              " exceeds horizon " + std::to_string(default_horizon()));
    std::set<Rat> found;
    visit_iterate_laps(f, n, lo, hi, [&](const IterateLap& lap) {
        if (lap.slope == 1) {
            if (lap.offset != 0)
                return;
            if (lap.lo < lap.hi)
                throw NonIsolatedPeriodicPoints(
                    "f^" + std::to_string(n) + " is the identity on [" + to_string(lap.lo) +
                    ", " + to_string(lap.hi) + "]");
            found.insert(lap.lo);
            return;
        }
        Rat x = lap.offset / (1 - lap.slope);
        if (lap.lo <= x && x <= lap.hi)
            found.insert(std::move(x));
    });
    SolutionSet out;
    out.n = n;
    out.points.assign(found.begin(), found.end());
    return out;
}

SolutionSet periodic_points(const PLMap& f, unsigned n) {
    return periodic_points_in(f, n, f.domain_lo(), f.domain_hi());
}

namespace {

template <bool Min>
std::optional<Rat> extremal_level_solution(const PLMap& f, unsigned n, const Rat& c,
                                           const Rat& lo, const Rat& hi) {
    std::optional<Rat> best;
    auto offer = [&best](Rat x) {
        if (!best || (Min ? x < *best : x > *best))
            best = std::move(x);
    };
    visit_iterate_laps(f, n, lo, hi, [&](const IterateLap& lap) {
        if (lap.slope == 0) {
            if (lap.offset == c)
                offer(Min ? lap.lo : lap.hi);
            return;
        }
        Rat x = (c - lap.offset) / lap.slope;
        if (lap.lo <= x && x <= lap.hi)
            offer(std::move(x));
    });
    return best;
}

} // namespace

std::optional<Rat> min_solution_of_level(const PLMap& f, unsigned n, const Rat& c,
                                         const Rat& lo, const Rat& hi) {
    return extremal_level_solution<true>(f, n, c, lo, hi);
}

std::optional<Rat> max_solution_of_level(const PLMap& f, unsigned n, const Rat& c,
                                         const Rat& lo, const Rat& hi) {
    return extremal_level_solution<false>(f, n, c, lo, hi);
}

unsigned least_period(const PLMap& f, const Rat& x, unsigned cap) {
    if (cap == 0)
        cap = default_horizon();
    Rat y = x;
    for (unsigned d = 1; d <= cap; ++d) {
        y = f.eval(y);
        if (y == x)
            return d;
    }
    throw NotPeriodic("least_period: " + to_string(x) + " does not return within " +
                      std::to_string(cap) + " steps");
}

Orbit orbit_of_point(const PLMap& f, const Rat& x, unsigned cap) {
    if (cap == 0)
        cap = default_horizon();
    Orbit orbit;
    Rat y = x;
    for (unsigned d = 1; d <= cap; ++d) {
        orbit.points.push_back(y);
        y = f.eval(y);
        if (y == x) {
            orbit.least_period = d;
            std::sort(orbit.points.begin(), orbit.points.end());
            orbit.diameter = orbit.points.back() - orbit.points.front();
            return orbit;
        }
    }
    throw NotPeriodic("orbit_of_point: " + to_string(x) + " does not return within " +
                      std::to_string(cap) + " steps");
}

std::vector<Orbit> orbits_of_period(const PLMap& f, unsigned n) {
    const SolutionSet sols = periodic_points(f, n);
    std::vector<unsigned> proper_divisors;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            proper_divisors.push_back(d);

    std::vector<Orbit> orbits;
    std::set<Rat> seen;
    for (const Rat& x : sols.points) {
        if (seen.count(x))
            continue;
        bool shorter = false;
        for (unsigned d : proper_divisors)
            if (iterate_eval(f, d, x) == x) {
                shorter = true;
                break;
            }
        if (shorter)
            continue;
        Orbit orbit = orbit_of_point(f, x, n);
        for (const Rat& p : orbit.points)
            seen.insert(p);
        orbits.push_back(std::move(orbit));
    }
    // solutions arrive sorted, so each orbit is discovered at its minimum and
    // the list is already ordered by smallest point
    return orbits;
}

Orbit minimal_diameter_orbit(const PLMap& f, unsigned n) {
    std::vector<Orbit> orbits = orbits_of_period(f, n);
    if (orbits.empty())
        throw NoSuchOrbit("no orbit of least period " + std::to_string(n));
    const Orbit* best = &orbits.front();
    for (const Orbit& o : orbits) {
        if (o.diameter < best->diameter ||
            (o.diameter == best->diameter && o.points.back() < best->points.back()) ||
            (o.diameter == best->diameter && o.points.back() == best->points.back() &&
             o.points.front() > best->points.front()))
            best = &o;
    }
    return *best;
}

std::vector<unsigned> period_set(const PLMap& f, unsigned horizon) {
    if (horizon == 0)
        throw DomainError("period_set: horizon must be positive");
    if (horizon > default_horizon())
        throw HorizonExceeded("period_set: horizon " + std::to_string(horizon) +
                              " exceeds limit " + std::to_string(default_horizon()));
    // least_period_count[n] = |Fix(f^n)| - sum of counts over proper divisors
    std::vector<std::size_t> least_count(horizon + 1, 0);
    std::vector<unsigned> present;
    for (unsigned n = 1; n <= horizon; ++n) {
        const std::size_t fixed = periodic_points(f, n).points.size();
        std::size_t shorter = 0;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0)
                shorter += least_count[d];
        least_count[n] = fixed - shorter;
        if (least_count[n] > 0)
            present.push_back(n);
    }
    return present;
}

bool is_orbit_of(const PLMap& f, const Orbit& P) {
    const std::size_t m = P.points.size();
    if (m == 0 || P.least_period != m)
        return false;
    if (!std::is_sorted(P.points.begin(), P.points.end()))
        return false;
    if (std::adjacent_find(P.points.begin(), P.points.end()) != P.points.end())
        return false;
    if (P.diameter != P.points.back() - P.points.front())
        return false;
    // f must permute the set in a single cycle of length m
    const std::set<Rat> point_set(P.points.begin(), P.points.end());
    Rat y = P.points.front();
    for (std::size_t step = 1; step < m; ++step) {
        y = f.eval(y);
        if (y == P.points.front() || !point_set.count(y))
            return false;
    }
    return f.eval(y) == P.points.front();
}

} // namespace plshark
