#include "plshark/witnesses.hpp"

#include "plshark/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace plshark {

namespace {

void require(bool ok, const std::string& check) {
    if (!ok)
        throw ConstructionFailed("failed certified check: " + check);
}

} // namespace

OrbitCoveringPair covering_pair_from_orbit(const PLMap& f, const Orbit& P) {
    if (!is_orbit_of(f, P))
        throw InvalidOrbit("covering_pair_from_orbit: P is not an orbit of this map");
    if (P.least_period < 3)
        throw InvalidOrbit("covering_pair_from_orbit: least period must be >= 3");

    // p: largest orbit point that still moves up (the smallest moves up, the
    // largest moves down, so p exists and has a successor in the orbit)
    std::optional<Rat> p;
    for (const Rat& x : P.points)
        if (f.eval(x) > x)
            p = x;
    require(p.has_value(), "orbit has a point moving up");
    auto above = std::upper_bound(P.points.begin(), P.points.end(), *p);
    require(above != P.points.end(), "orbit has a point above p");
    const Rat& b = *above;

    auto a = max_solution_of_level(f, 1, b, *p, b);
    require(a.has_value(), "f(x) = b solvable in [p, b)");

    require(f.eval(*p) >= b, "f(p) >= b");
    require(f.eval(b) <= *p, "f(b) <= p");
    require(f.eval(b) < *a, "f(b) < a");
    require(*a < b, "a < b");
    require(f.eval(*a) == b, "f(a) = b");
    return {*p, b, *a};
}

DisplacedCoveringPair covering_pair_from_displaced_point(const PLMap& f, const Rat& x0,
                                                         unsigned n) {
    if (n < 2)
        throw DomainError("covering_pair_from_displaced_point: n must be >= 2");
    if (!(iterate_eval(f, n, x0) <= x0 && x0 < f.eval(x0)))
        throw HypothesisNotSatisfied(
            "covering_pair_from_displaced_point: requires f^n(x0) <= x0 < f(x0)");

    std::vector<Rat> trajectory;
    trajectory.reserve(n);
    Rat y = x0;
    for (unsigned k = 0; k < n; ++k) {
        trajectory.push_back(y);
        y = f.eval(y);
    }

    std::optional<Rat> a;   // x0 itself qualifies, so a exists
    for (const Rat& x : trajectory)
        if (x0 <= x && f.eval(x) > x && (!a || x > *a))
            a = x;
    require(a.has_value(), "trajectory has a point moving up at or above x0");

    const Rat fa = f.eval(*a);
    std::optional<Rat> b;   // smallest admissible choice, for determinism
    for (const Rat& x : trajectory)
        if (*a < x && x <= fa && f.eval(x) < *a && (!b || x < *b))
            b = x;
    if (!b)
        throw ConstructionFailed(
            "covering_pair_from_displaced_point: no trajectory point b with a < b <= f(a) "
            "and f(b) < a (a = " + to_string(*a) + ")");

    require(f.eval(*b) < *a && *a < *b && *b <= fa, "f(b) < a < b <= f(a)");
    return {*a, *b};
}

ForcingWitness forcing_witness(const PLMap& f, const Rat& a, const Rat& b) {
    const Rat fa = f.eval(a);
    const Rat fb = f.eval(b);
    const bool variant_one = fb < a && a < b && b <= fa;
    const bool variant_two = fb <= a && a < b && b < fa;
    if (!variant_one && !variant_two)
        throw HypothesisNotSatisfied(
            "forcing_witness: requires f(b) < a < b <= f(a) or f(b) <= a < b < f(a)");

    // both variants give strict sign changes of f(x) - x at a and b, so every
    // fixed point in [a, b] is interior
    const SolutionSet fixed = periodic_points_in(f, 1, a, b);
    require(!fixed.points.empty(), "fixed point of f in (a, b)");
    const Rat& z = fixed.points.front();

    // z is not a preimage of b (f(z) = z < b), so the closed search is exact
    const auto v = max_solution_of_level(f, 1, b, a, z);
    require(v.has_value(), "largest solution of f(x) = b in [a, z)");

    const Rat u = max_solution_of_level(f, 1, z, f.domain_lo(), *v).value_or(f.domain_lo());

    // largest period-2 point in [u, v); v itself cannot be one since f^2(v) < v
    std::optional<Rat> y;
    for (const Rat& x : periodic_points_in(f, 2, u, *v).points)
        if (f.eval(x) != x)
            y = x;   // ascending scan keeps the largest
    require(y.has_value(), "period-2 point of f in [u, v)");

    ForcingWitness w{a, b, z, *y, *v, u};
    certify(f, w);
    return w;
}

void certify(const PLMap& f, const ForcingWitness& w) {
    require(f.eval(w.z) == w.z, "f(z) = z");
    const Rat fy = f.eval(w.y);
    require(f.eval(fy) == w.y && fy != w.y, "y has least period 2");
    require(f.eval(w.v) == w.b, "f(v) = b");
    require(std::max(iterate_eval(f, 2, w.v), w.y) < w.v, "max{f^2(v), y} < v");
    require(w.v < w.z, "v < z");
    require(w.z < std::min(fy, f.eval(w.v)), "z < min{f(y), f(v)}");
    if (w.u != f.domain_lo())
        require(f.eval(w.u) == w.z && w.u <= w.v, "f(u) = z with u <= v");

    // f stays above z on all of (y, v]: f(y) > z is already certified, so the
    // closed-interval minimum settles the open end too
    require(interval_image(f, w.y, w.v).lo > w.z, "f(x) > z on (y, v]");

    // f^2(x) - x < 0 on (y, v], checked lap-exactly: the difference is affine
    // on every lap of f^2, so endpoint signs decide, with equality permitted
    // only at y itself
    visit_iterate_laps(f, 2, w.y, w.v, [&](const IterateLap& lap) {
        const Rat at_lo = lap.slope * lap.lo + lap.offset - lap.lo;
        const Rat at_hi = lap.slope * lap.hi + lap.offset - lap.hi;
        require(lap.lo == w.y ? at_lo <= 0 : at_lo < 0, "f^2(x) < x on (y, v]");
        require(lap.hi == w.y ? at_hi <= 0 : at_hi < 0, "f^2(x) < x on (y, v]");
    });
}

std::vector<CascadePoint> odd_period_cascade(const PLMap& f, const Orbit& P, unsigned count) {
    if (!is_orbit_of(f, P))
        throw InvalidOrbit("odd_period_cascade: P is not an orbit of this map");
    if (P.least_period < 3 || P.least_period % 2 == 0)
        throw HypothesisNotSatisfied("odd_period_cascade: least period must be odd and >= 3");

    const OrbitCoveringPair pb = covering_pair_from_orbit(f, P);
    const ForcingWitness w = forcing_witness(f, pb.a, pb.b);

    std::vector<CascadePoint> out;
    out.reserve(count);
    Rat prev = w.v;
    for (unsigned i = 1; i <= count; ++i) {
        const unsigned period = P.least_period + 2 * i;
        const SolutionSet sols = periodic_points_in(f, period, w.y, prev);
        require(!sols.points.empty(),
                "cascade: f^" + std::to_string(period) + "(x) = x solvable in [y, previous]");
        const Rat& point = sols.points.front();
        require(w.y < point && point < prev, "cascade point strictly inside (y, previous)");
        require(least_period(f, point, period) == period,
                "cascade point has least period " + std::to_string(period));
        out.push_back({period, point});
        prev = point;
    }
    return out;
}

namespace {

// Shared trace of the turbulence construction on g = f^2; every quantity is
// obtained through the depth-2 lap solver, never a materialized composition.
struct TurbulenceFrame {
    ForcingWitness w;
    Rat z0, d, s, t;
};

TurbulenceFrame build_turbulence_frame(const PLMap& f, const Orbit& P) {
    if (!is_orbit_of(f, P))
        throw InvalidOrbit("turbulence construction: P is not an orbit of this map");
    if (P.least_period < 3 || P.least_period % 2 == 0)
        throw HypothesisNotSatisfied("turbulence construction: least period must be odd and >= 3");

    const OrbitCoveringPair pb = covering_pair_from_orbit(f, P);
    ForcingWitness w = forcing_witness(f, pb.a, pb.b);

    const SolutionSet g_fixed = periodic_points_in(f, 2, w.v, w.z);
    require(!g_fixed.points.empty(), "fixed point of f^2 in [v, z]");   // z qualifies
    const Rat& z0 = g_fixed.points.front();

    const auto d = max_solution_of_level(f, 2, z0, f.domain_lo(), w.y);
    require(d.has_value(), "largest solution of f^2(x) = z0 at or below y");

    Rat s = iterate_interval_image(f, 2, *d, z0).lo;
    require(s < *d, "min of f^2 over [d, z0] lies strictly below d");

    const auto t = min_solution_of_level(f, 2, *d, *d, z0);
    require(t.has_value(), "smallest solution of f^2(x) = d in [d, z0]");

    return {std::move(w), z0, *d, std::move(s), *t};
}

} // namespace

TurbulenceCertificate turbulence_certificate(const PLMap& f, const Orbit& P) {
    const TurbulenceFrame frame = build_turbulence_frame(f, P);

    // the smallest point of [d, z0] attaining the minimum s; it differs from t
    // because g(t) = d > s
    const auto w_pt = min_solution_of_level(f, 2, frame.s, frame.d, frame.z0);
    require(w_pt.has_value(), "point attaining the minimum of f^2 over [d, z0]");
    require(*w_pt != frame.t, "minimum point differs from the d-preimage t");

    TurbulenceCertificate cert;
    cert.z0 = frame.z0;
    cert.d = frame.d;
    cert.s = frame.s;
    cert.t = frame.t;
    if (*w_pt < frame.t) {
        cert.i0_lo = frame.d;
        cert.i0_hi = *w_pt;
        cert.i1_lo = frame.t;
        const auto r = min_solution_of_level(f, 2, frame.z0, frame.t, frame.z0);
        require(r.has_value(), "smallest solution of f^2(x) = z0 right of t");
        cert.i1_hi = *r;
    } else {
        cert.i0_lo = frame.d;
        cert.i0_hi = frame.t;
        cert.i1_lo = *w_pt;
        const auto r = min_solution_of_level(f, 2, frame.z0, *w_pt, frame.z0);
        require(r.has_value(), "smallest solution of f^2(x) = z0 right of the minimum point");
        cert.i1_hi = *r;
    }
    certify(f, cert);
    return cert;
}

void certify(const PLMap& f, const TurbulenceCertificate& c) {
    require(iterate_eval(f, 2, c.z0) == c.z0, "f^2(z0) = z0");
    require(iterate_eval(f, 2, c.d) == c.z0, "f^2(d) = z0");
    require(iterate_eval(f, 2, c.t) == c.d, "f^2(t) = d");
    require(c.s < c.d, "s < d");
    require(c.d <= c.i0_lo, "d <= I0");
    require(c.i0_lo <= c.i0_hi && c.i1_lo <= c.i1_hi, "I0 and I1 well formed");
    require(c.i0_hi < c.i1_lo, "I0 and I1 disjoint");
    require(c.i1_hi <= c.z0, "I0 and I1 inside [d, z0]");
    for (const RatInterval J : {RatInterval{c.i0_lo, c.i0_hi}, RatInterval{c.i1_lo, c.i1_hi}}) {
        const RatInterval image = iterate_interval_image(f, 2, J.lo, J.hi);
        require(image.lo <= c.i0_lo && c.i1_hi <= image.hi,
                "f^2 image of each interval covers I0 and I1");
    }
}

std::vector<Orbit> even_period_orbits(const PLMap& f, const Orbit& P, unsigned n_max) {
    if (n_max == 0)
        throw DomainError("even_period_orbits: n_max must be positive");
    const TurbulenceFrame frame = build_turbulence_frame(f, P);

    // ghat = max{g, d} on [d, z0].  g never exceeds z0 there (certified), so
    // the two-sided clamp_to_domain builds exactly the one-sided clamp.
    require(iterate_interval_image(f, 2, frame.d, frame.z0).hi <= frame.z0,
            "f^2 stays at or below z0 on [d, z0]");
    const PLMap ghat = clamp_to_domain(compose(f, f), frame.d, frame.z0);

    std::vector<Orbit> out;
    out.reserve(n_max);
    std::optional<Rat> prev_c;
    for (unsigned n = 1; n <= n_max; ++n) {
        const SolutionSet sols = periodic_points_in(ghat, n, frame.d, frame.t);
        require(!sols.points.empty(),
                "ghat^" + std::to_string(n) + "(x) = x solvable in [d, t]");
        const Rat& c = sols.points.front();
        require(least_period(ghat, c, n) == n,
                "c_" + std::to_string(n) + " has least period " + std::to_string(n) +
                " under ghat");
        require(frame.d < c, "d < c_n");
        if (prev_c)
            require(c < *prev_c, "c_n strictly decreasing");
        else
            require(c <= frame.w.y, "c_1 <= y");
        prev_c = c;

        const Orbit q = orbit_of_point(ghat, c, n);
        require(frame.d < q.points.front() && q.points.back() < frame.z0,
                "Q_n inside (d, z0)");
        // away from the clamp ghat agrees with f^2, so Q_n is an f^2-orbit
        for (const Rat& x : q.points)
            require(iterate_eval(f, 2, x) == ghat.eval(x), "ghat = f^2 on Q_n");
        {
            Rat walker = c;
            unsigned back = 0;
            for (unsigned step = 1; step <= n; ++step) {
                walker = iterate_eval(f, 2, walker);
                if (walker == c) {
                    back = step;
                    break;
                }
            }
            require(back == n, "Q_n has least period n under f^2");
        }

        Orbit joined = orbit_of_point(f, c, 2 * n);
        require(joined.least_period == 2 * n,
                "Q_n united with f(Q_n) has least period 2n under f");
        std::set<Rat> expected(q.points.begin(), q.points.end());
        for (const Rat& x : q.points)
            expected.insert(f.eval(x));
        require(expected == std::set<Rat>(joined.points.begin(), joined.points.end()),
                "f-orbit equals Q_n united with f(Q_n)");
        out.push_back(std::move(joined));
    }
    return out;
}

namespace {

std::string rats(const Rat& q) {
    return to_string(q);
}

} // namespace

std::string to_report(const PLMap& f, const OrbitCoveringPair& pb) {
    std::ostringstream os;
    os << "covering-pair\n";
    os << "p: " << rats(pb.p) << "\n";
    os << "b: " << rats(pb.b) << "\n";
    os << "a: " << rats(pb.a) << "\n";
    os << "check: f(p) = " << rats(f.eval(pb.p)) << " >= b\n";
    os << "check: f(b) = " << rats(f.eval(pb.b)) << " <= p\n";
    os << "check: f(a) = " << rats(f.eval(pb.a)) << " = b, f(b) < a\n";
    return os.str();
}

std::string to_report(const PLMap& f, const ForcingWitness& w) {
    std::ostringstream os;
    os << "forcing-witness\n";
    os << "a: " << rats(w.a) << "\n";
    os << "b: " << rats(w.b) << "\n";
    os << "z: " << rats(w.z) << "\n";
    os << "y: " << rats(w.y) << "\n";
    os << "v: " << rats(w.v) << "\n";
    os << "u: " << rats(w.u) << "\n";
    os << "check: f(z) = " << rats(f.eval(w.z)) << " = z\n";
    os << "check: f(y) = " << rats(f.eval(w.y)) << ", f^2(y) = "
       << rats(iterate_eval(f, 2, w.y)) << " = y\n";
    os << "check: f(v) = " << rats(f.eval(w.v)) << " = b\n";
    os << "check: max{f^2(v), y} = " << rats(std::max(iterate_eval(f, 2, w.v), w.y))
       << " < v = " << rats(w.v) << " < z = " << rats(w.z)
       << " < min{f(y), f(v)} = " << rats(std::min(f.eval(w.y), f.eval(w.v))) << "\n";
    os << "check: f(x) > z and f^2(x) < x on (y, v]\n";
    return os.str();
}

std::string to_report(const PLMap& f, const TurbulenceCertificate& c) {
    std::ostringstream os;
    const RatInterval img0 = iterate_interval_image(f, 2, c.i0_lo, c.i0_hi);
    const RatInterval img1 = iterate_interval_image(f, 2, c.i1_lo, c.i1_hi);
    os << "turbulence-certificate\n";
    os << "z0: " << rats(c.z0) << "\n";
    os << "d: " << rats(c.d) << "\n";
    os << "s: " << rats(c.s) << "\n";
    os << "t: " << rats(c.t) << "\n";
    os << "i0: [" << rats(c.i0_lo) << ", " << rats(c.i0_hi) << "]\n";
    os << "i1: [" << rats(c.i1_lo) << ", " << rats(c.i1_hi) << "]\n";
    os << "check: s = " << rats(c.s) << " < d = " << rats(c.d) << "\n";
    os << "check: f^2(i0) = [" << rats(img0.lo) << ", " << rats(img0.hi)
       << "] covers i0 and i1\n";
    os << "check: f^2(i1) = [" << rats(img1.lo) << ", " << rats(img1.hi)
       << "] covers i0 and i1\n";
    return os.str();
}

std::string to_report(const std::vector<CascadePoint>& cascade) {
    std::ostringstream os;
    os << "odd-period-cascade\n";
    for (const CascadePoint& entry : cascade)
        os << "period " << entry.period << ": " << rats(entry.point) << "\n";
    return os.str();
}

std::string to_report(const std::vector<Orbit>& orbits, const std::string& heading) {
    std::ostringstream os;
    os << heading << "\n";
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        os << "orbit " << (i + 1) << ": period " << orbits[i].least_period << " diameter "
           << rats(orbits[i].diameter) << " points";
        for (const Rat& p : orbits[i].points)
            os << " " << rats(p);
        os << "\n";
    }
    return os.str();
}

} // namespace plshark
