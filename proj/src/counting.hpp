#pragma once

#include <array>
#include <map>
#include <optional>

#include "quiver.hpp"

namespace qfq {

// Plane partition whose boxes carry nonempty subsets of Z/5, stored as
// bitmasks parallel to the sorted box list.
struct MultiColoredPartition {
    std::vector<Box> boxes;
    std::vector<unsigned> colors;

    bool operator==(const MultiColoredPartition &) const = default;
};

// n_Q(d) for |d| <= trunc; absent keys mean zero, stored values are >= 1.
struct CountTable {
    int trunc = 0;
    std::map<DimVector, long long> counts;

    bool operator==(const CountTable &) const = default;

    long long lookup(const DimVector &d) const {
        auto it = counts.find(d);
        return it == counts.end() ? 0 : it->second;
    }
};

// Entry v counts boxes whose color set contains v.
DimVector dimension_vector(const MultiColoredPartition &m, int r);

// Full arrow-compatibility audit against a labeled quiver (x/y/z constrain
// the i/j/k directions): w in K(b) and arrow v->w labeled x force
// v in K(b - e_1) whenever that box exists, and likewise for y, z.
bool is_valid_multicoloring(const Quiver &q, const MultiColoredPartition &m);

// Recognizes a McKay-shaped labeled quiver: per label, one arrow out of each
// vertex with a constant step.  Returns its mu_r(a,b,c) data.
std::optional<ColorWeights> mckay_steps(const Quiver &q);

// Visits every valid multi-colored partition with |dimension vector| <=
// max_total, grouped by underlying plane partition; coloring choices are made
// box-by-box in lex order, constrained by the already-colored predecessors.
void stream_multicolored(
    const Quiver &q, int max_total,
    const std::function<void(const MultiColoredPartition &)> &visit);

// Same family bounded by box count instead of |d| (every coloring of every
// plane partition with <= max_boxes boxes).
void stream_multicolored_boxes(
    const Quiver &q, int max_boxes,
    const std::function<void(const MultiColoredPartition &)> &visit);

// Direct enumeration path.  Accepts exactly the McKay quiver of mu_5(1,1,3)
// and throws UnsupportedQuiver otherwise.
CountTable multicolor_oracle(const Quiver &q, int max_total, int threads);

// Shifted-product path: multiplies the five cyclic shifts of the
// mu_5(1,1,3)-colored generating function; coefficient at d equals n_Q(d).
Series multicolor_product(int trunc, int threads);

CountTable table_from_series(const Series &s);

// pi_v = {b : K_v(b) in K(b)} with K_v(i,j,k) = v+i+j+3k mod 5; verifies the
// reassembly K(b) = {K_v(b) : b in pi_v} reproduces the input exactly.
std::array<std::vector<Box>, 5> decompose(const MultiColoredPartition &m);
MultiColoredPartition recompose(const std::array<std::vector<Box>, 5> &parts);

}  // namespace qfq
