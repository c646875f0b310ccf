#pragma once

#include <array>
#include <functional>
#include <thread>
#include <vector>

#include "series.hpp"

namespace qfq {

using Box = std::array<int, 3>;

// Boxes kept lex-sorted; downward closure is a class invariant (checked on
// construction from raw data, maintained by the enumerator by construction).
struct PlanePartition {
    std::vector<Box> boxes;

    int size() const { return static_cast<int>(boxes.size()); }
};

struct ColorWeights {
    int r, a, b, c;
};

// Reduces the weights into 0..r-1 (throws for r < 1); mu_r weights are only
// ever meaningful mod r, so e.g. mu_1(1,1,1) and mu_1(0,0,0) coincide.
ColorWeights normalize(const ColorWeights &w);

bool is_plane_partition(const std::vector<Box> &boxes);

// Visits every plane partition of size <= max_size exactly once in the
// documented public order: by size, then lexicographically on the sorted box
// list.  The callback receives the sorted box list.
void stream_plane_partitions(
    int max_size, const std::function<void(const std::vector<Box> &)> &visit);

// Order-free fold over the same family: single DFS pass, deterministically
// splittable across threads (see fold_plane_partitions_parallel), intended
// for counting.  Visit order is unspecified.
void fold_plane_partitions(
    int max_size, const std::function<void(const std::vector<Box> &)> &visit);

// Parallel fold: each worker owns an accumulator created by `make`; subtrees
// of the enumeration forest are dealt round-robin, and accumulators are
// merged with `merge` (must be commutative for scheduling independence).
template <class Acc>
Acc fold_plane_partitions_parallel(
    int max_size, int threads, const std::function<Acc()> &make,
    const std::function<void(Acc &, const std::vector<Box> &)> &visit,
    const std::function<void(Acc &, Acc &&)> &merge);

std::vector<long long> pp_counts_by_size(int max_size, int threads);

// |pi|_m = number of boxes with a*i + b*j + c*k = m (mod r).
std::vector<int> color_counts(const std::vector<Box> &boxes,
                              const ColorWeights &w);

// Z^{mu_r(a,b,c)}_PL: r-variable series counting colored plane partitions by
// dimension vector, over all |pi| <= trunc.
Series colored_gf(const ColorWeights &w, int trunc, int threads);

namespace detail {
// Subtree roots for the parallel split plus the shallow rest; exposed for the
// template below, not part of the module interface.
void split_plane_partitions(
    int max_size, int prefix_size,
    const std::function<void(const std::vector<Box> &)> &visit_shallow,
    std::vector<std::vector<Box>> &roots);
void dfs_subtree(std::vector<Box> &state, int max_size,
                 const std::function<void(const std::vector<Box> &)> &visit);
}  // namespace detail

template <class Acc>
Acc fold_plane_partitions_parallel(
    int max_size, int threads, const std::function<Acc()> &make,
    const std::function<void(Acc &, const std::vector<Box> &)> &visit,
    const std::function<void(Acc &, Acc &&)> &merge) {
    Acc acc = make();
    if (threads < 2 || max_size < 5) {
        fold_plane_partitions(max_size,
                              [&](const std::vector<Box> &b) { visit(acc, b); });
        return acc;
    }

    // Shallow part (< prefix_size boxes) in the calling thread, deep subtrees
    // rooted at exactly prefix_size boxes distributed round-robin.
    const int prefix_size = 4;
    std::vector<std::vector<Box>> roots;
    detail::split_plane_partitions(
        max_size, prefix_size,
        [&](const std::vector<Box> &b) { visit(acc, b); }, roots);

    std::vector<Acc> partial;
    partial.reserve(threads);
    for (int t = 0; t < threads; ++t) partial.push_back(make());
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (size_t i = t; i < roots.size(); i += threads) {
                std::vector<Box> state = roots[i];
                detail::dfs_subtree(state, max_size, [&](const std::vector<Box> &b) {
                    visit(partial[t], b);
                });
            }
        });
    }
    for (auto &th : pool) th.join();
    for (auto &p : partial) merge(acc, std::move(p));
    return acc;
}

}  // namespace qfq
