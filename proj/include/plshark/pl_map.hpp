#pragma once

#include "plshark/rat.hpp"

#include <cstddef>
#include <vector>

namespace plshark {

struct MapNode {
    Rat x;
    Rat y;
    bool operator==(const MapNode&) const = default;
};

struct RatInterval {
    Rat lo;
    Rat hi;
    bool operator==(const RatInterval&) const = default;
};

// Continuous piecewise-linear self-map of the compact interval
// [domain_lo, domain_hi], stored as its breakpoint list.  Invariants enforced
// on construction:
//   - node x's strictly increasing; at least two nodes
//   - every node value lies in [domain_lo, domain_hi] (linearity then makes
//     the whole map a self-map)
//   - collinear interior nodes are removed, so map equality is node-list
//     equality
class PLMap {
public:
    explicit PLMap(std::vector<MapNode> nodes);

    const std::vector<MapNode>& nodes() const { return nodes_; }
    const Rat& domain_lo() const { return nodes_.front().x; }
    const Rat& domain_hi() const { return nodes_.back().x; }

    std::size_t piece_count() const { return nodes_.size() - 1; }

    // Affine form of piece i: f(x) = piece_slope(i)*x + piece_offset(i) on
    // [nodes()[i].x, nodes()[i+1].x].
    const Rat& piece_slope(std::size_t i) const { return slopes_[i]; }
    const Rat& piece_offset(std::size_t i) const { return offsets_[i]; }

    // Index of a piece whose x-range contains x (the rightmost one when x is a
    // node).  x must be inside the domain.
    std::size_t piece_index(const Rat& x) const;

    // Exact interpolant value; at a node x_i this is y_i exactly.
    Rat eval(const Rat& x) const;

    bool operator==(const PLMap& other) const { return nodes_ == other.nodes_; }

private:
    std::vector<MapNode> nodes_;
    std::vector<Rat> slopes_;
    std::vector<Rat> offsets_;
};

// n-fold exact application, n >= 1.
Rat iterate_eval(const PLMap& f, unsigned n, Rat x);

// eval(result, x) = eval(f, eval(g, x)); requires the range of g to lie inside
// the domain of f.  Node count is at most nodes(f) * nodes(g) before
// normalization.
PLMap compose(const PLMap& f, const PLMap& g);

// result(x) = median(lo, f(x), hi) on the full domain of f, with crossing
// points solved exactly.  Requires domain_lo <= lo < hi <= domain_hi.
PLMap clamp(const PLMap& f, const Rat& lo, const Rat& hi);

// Same value rule as clamp, but the result lives on the domain [lo, hi]; this
// is the "restrict to an invariant window" constructor and is always a valid
// self-map of [lo, hi].
PLMap clamp_to_domain(const PLMap& f, const Rat& lo, const Rat& hi);

// Exact (min, max) of f over [lo, hi]; extrema occur at the endpoints or at
// interior nodes, all checked exactly.
RatInterval interval_image(const PLMap& f, const Rat& lo, const Rat& hi);

// interval_image plus points where the bounds are attained.
struct ImageWitness {
    Rat min, max;
    Rat argmin, argmax;
};
ImageWitness interval_image_witness(const PLMap& f, const Rat& lo, const Rat& hi);

// Exact image of [lo, hi] under f^n (image of an interval under a continuous
// map is an interval, so iterating interval_image is exact).
RatInterval iterate_interval_image(const PLMap& f, unsigned n, const Rat& lo, const Rat& hi);

PLMap constant_map(const Rat& domain_lo, const Rat& domain_hi, const Rat& value);

} // namespace plshark
