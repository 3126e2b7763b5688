#include "plshark/pl_map.hpp"

#include "plshark/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace plshark {

namespace {

bool collinear(const MapNode& a, const MapNode& b, const MapNode& c) {
    return (c.y - b.y) * (b.x - a.x) == (b.y - a.y) * (c.x - b.x);
}

std::vector<MapNode> normalized(std::vector<MapNode> nodes) {
    std::vector<MapNode> out;
    out.reserve(nodes.size());
    out.push_back(std::move(nodes.front()));
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
        if (collinear(out.back(), nodes[i], nodes[i + 1]))
            continue;
        out.push_back(std::move(nodes[i]));
    }
    out.push_back(std::move(nodes.back()));
    return out;
}

} // namespace

PLMap::PLMap(std::vector<MapNode> nodes) {
    if (nodes.size() < 2)
        throw DomainError("PLMap: at least two nodes required");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i - 1].x < nodes[i].x))
            throw DomainError("PLMap: node x's must be strictly increasing");
    const Rat& lo = nodes.front().x;
    const Rat& hi = nodes.back().x;
    for (const MapNode& node : nodes)
        if (node.y < lo || node.y > hi)
            throw DomainError("PLMap: value " + to_string(node.y) +
                              " escapes the domain [" + to_string(lo) + ", " +
                              to_string(hi) + "]");
    nodes_ = normalized(std::move(nodes));
    slopes_.reserve(nodes_.size() - 1);
    offsets_.reserve(nodes_.size() - 1);
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        Rat slope = (nodes_[i + 1].y - nodes_[i].y) / (nodes_[i + 1].x - nodes_[i].x);
        offsets_.push_back(nodes_[i].y - slope * nodes_[i].x);
        slopes_.push_back(std::move(slope));
    }
}

std::size_t PLMap::piece_index(const Rat& x) const {
    // largest i with nodes_[i].x <= x, clamped to a valid piece
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x,
                               [](const Rat& v, const MapNode& n) { return v < n.x; });
    std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
    if (i > 0)
        --i;
    return std::min(i, piece_count() - 1);
}

Rat PLMap::eval(const Rat& x) const {
    if (x < domain_lo() || x > domain_hi())
        throw DomainError("eval: " + to_string(x) + " outside the domain");
    const std::size_t i = piece_index(x);
    return slopes_[i] * x + offsets_[i];
}

Rat iterate_eval(const PLMap& f, unsigned n, Rat x) {
    if (n == 0)
        throw DomainError("iterate_eval: n must be positive");
    for (unsigned k = 0; k < n; ++k)
        x = f.eval(x);
    return x;
}

PLMap compose(const PLMap& f, const PLMap& g) {
    const RatInterval range = interval_image(g, g.domain_lo(), g.domain_hi());
    if (range.lo < f.domain_lo() || range.hi > f.domain_hi())
        throw DomainError("compose: range of inner map escapes domain of outer map");

    // breakpoints: nodes of g, plus preimages under g of f's breakpoints
    std::set<Rat> cuts;
    for (const MapNode& node : g.nodes())
        cuts.insert(node.x);
    for (std::size_t i = 0; i < g.piece_count(); ++i) {
        const Rat& slope = g.piece_slope(i);
        if (slope == 0)
            continue;
        const Rat& x0 = g.nodes()[i].x;
        const Rat& x1 = g.nodes()[i + 1].x;
        for (const MapNode& fnode : f.nodes()) {
            Rat t = (fnode.x - g.piece_offset(i)) / slope;
            if (x0 <= t && t <= x1)
                cuts.insert(std::move(t));
        }
    }
    std::vector<MapNode> nodes;
    nodes.reserve(cuts.size());
    for (const Rat& x : cuts)
        nodes.push_back({x, f.eval(g.eval(x))});
    return PLMap(std::move(nodes));
}

namespace {

Rat median3(const Rat& lo, const Rat& v, const Rat& hi) {
    if (v < lo)
        return lo;
    if (v > hi)
        return hi;
    return v;
}

std::vector<MapNode> clamped_nodes(const PLMap& f, const Rat& lo, const Rat& hi,
                                   const Rat& from, const Rat& to) {
    // breakpoints inside [from, to]: f's nodes plus exact crossings with lo/hi
    std::set<Rat> cuts{from, to};
    for (const MapNode& node : f.nodes())
        if (from < node.x && node.x < to)
            cuts.insert(node.x);
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        const Rat& slope = f.piece_slope(i);
        if (slope == 0)
            continue;
        for (const Rat& level : {lo, hi}) {
            Rat t = (level - f.piece_offset(i)) / slope;
            if (f.nodes()[i].x <= t && t <= f.nodes()[i + 1].x && from <= t && t <= to)
                cuts.insert(std::move(t));
        }
    }
    std::vector<MapNode> nodes;
    nodes.reserve(cuts.size());
    for (const Rat& x : cuts)
        nodes.push_back({x, median3(lo, f.eval(x), hi)});
    return nodes;
}

} // namespace

PLMap clamp(const PLMap& f, const Rat& lo, const Rat& hi) {
    if (!(lo < hi))
        throw DomainError("clamp: lo must be below hi");
    if (lo < f.domain_lo() || hi > f.domain_hi())
        throw DomainError("clamp: [lo, hi] must lie inside the domain");
    return PLMap(clamped_nodes(f, lo, hi, f.domain_lo(), f.domain_hi()));
}

PLMap clamp_to_domain(const PLMap& f, const Rat& lo, const Rat& hi) {
    if (!(lo < hi))
        throw DomainError("clamp_to_domain: lo must be below hi");
    if (lo < f.domain_lo() || hi > f.domain_hi())
        throw DomainError("clamp_to_domain: [lo, hi] must lie inside the domain");
    return PLMap(clamped_nodes(f, lo, hi, lo, hi));
}

ImageWitness interval_image_witness(const PLMap& f, const Rat& lo, const Rat& hi) {
    if (lo > hi)
        throw DomainError("interval_image: empty interval");
    if (lo < f.domain_lo() || hi > f.domain_hi())
        throw DomainError("interval_image: interval escapes the domain");
    ImageWitness w{f.eval(lo), f.eval(lo), lo, lo};
    auto consider = [&w](const Rat& x, const Rat& y) {
        if (y < w.min) {
            w.min = y;
            w.argmin = x;
        }
        if (y > w.max) {
            w.max = y;
            w.argmax = x;
        }
    };
    consider(hi, f.eval(hi));
    for (const MapNode& node : f.nodes())
        if (lo < node.x && node.x < hi)
            consider(node.x, node.y);
    return w;
}

RatInterval interval_image(const PLMap& f, const Rat& lo, const Rat& hi) {
    ImageWitness w = interval_image_witness(f, lo, hi);
    return {std::move(w.min), std::move(w.max)};
}

RatInterval iterate_interval_image(const PLMap& f, unsigned n, const Rat& lo, const Rat& hi) {
    if (n == 0)
        throw DomainError("iterate_interval_image: n must be positive");
    RatInterval img{lo, hi};
    for (unsigned k = 0; k < n; ++k)
        img = interval_image(f, img.lo, img.hi);
    return img;
}

PLMap constant_map(const Rat& domain_lo, const Rat& domain_hi, const Rat& value) {
    return PLMap({{domain_lo, value}, {domain_hi, value}});
}

} // namespace plshark
