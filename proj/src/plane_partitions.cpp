#include "plane_partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfq {

/*
 * A plane partition is identified with its finite, downward-closed set of
 * boxes (i,j,k) in Z_{>=0}^3: downward-closed meaning each of (i-1,j,k),
 * (i,j-1,k), (i,j,k-1) with nonnegative coordinates is again a box.
 *
 * Canonical generation: removing the lex-greatest box of a nonempty plane
 * partition leaves a plane partition (all three coordinate successors of the
 * lex-greatest box are lex-greater, hence absent), so every plane partition
 * has a unique ancestry ending at the empty one.  The DFS below inverts that
 * rule: a child adds one box that is lex-greater than everything present and
 * whose predecessors are all present.  Each state's box list, in insertion
 * order, is therefore already sorted.
 */

namespace {

bool contains(const std::vector<Box> &sorted, const Box &b) {
    return std::binary_search(sorted.begin(), sorted.end(), b);
}

bool predecessors_present(const std::vector<Box> &sorted, const Box &b) {
    for (int d = 0; d < 3; ++d) {
        if (b[d] == 0) continue;
        Box p = b;
        --p[d];
        if (!contains(sorted, p)) return false;
    }
    return true;
}

// Children of `state` in lex order: candidate boxes are the coordinate
// successors of present boxes (plus the origin for the empty state), filtered
// to those lex-greater than the current maximum with all predecessors present.
std::vector<Box> child_boxes(const std::vector<Box> &state) {
    std::vector<Box> cand;
    if (state.empty()) {
        cand.push_back({0, 0, 0});
        return cand;
    }
    const Box &last = state.back();
    for (const Box &s : state) {
        for (int d = 0; d < 3; ++d) {
            Box b = s;
            ++b[d];
            if (b <= last) continue;
            if (contains(state, b)) continue;
            if (!predecessors_present(state, b)) continue;
            cand.push_back(b);
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    return cand;
}

void dfs_all(std::vector<Box> &state, int max_size,
             const std::function<void(const std::vector<Box> &)> &visit) {
    visit(state);
    if (static_cast<int>(state.size()) >= max_size) return;
    for (const Box &b : child_boxes(state)) {
        state.push_back(b);
        dfs_all(state, max_size, visit);
        state.pop_back();
    }
}

// Visits only the states with exactly `target` boxes, in lex order of their
// sorted box lists (the DFS path is the box list, and children come in lex
// order, so depth-`target` states appear in lex order of the lists).
void dfs_exact(std::vector<Box> &state, int target,
               const std::function<void(const std::vector<Box> &)> &visit) {
    if (static_cast<int>(state.size()) == target) {
        visit(state);
        return;
    }
    for (const Box &b : child_boxes(state)) {
        state.push_back(b);
        dfs_exact(state, target, visit);
        state.pop_back();
    }
}

}  // namespace

bool is_plane_partition(const std::vector<Box> &boxes) {
    std::vector<Box> sorted = boxes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (const Box &b : sorted) {
        if (b[0] < 0 || b[1] < 0 || b[2] < 0) return false;
        if (!predecessors_present(sorted, b)) return false;
    }
    return true;
}

void stream_plane_partitions(
    int max_size, const std::function<void(const std::vector<Box> &)> &visit) {
    if (max_size < 0) throw std::invalid_argument("max_size must be >= 0");
    // Iterative deepening keeps the public by-size-then-lex order without
    // buffering a level; the shallow levels it replays are a vanishing
    // fraction of the leaves.
    for (int n = 0; n <= max_size; ++n) {
        std::vector<Box> state;
        dfs_exact(state, n, visit);
    }
}

void fold_plane_partitions(
    int max_size, const std::function<void(const std::vector<Box> &)> &visit) {
    if (max_size < 0) throw std::invalid_argument("max_size must be >= 0");
    std::vector<Box> state;
    dfs_all(state, max_size, visit);
}

namespace detail {

void split_plane_partitions(
    int max_size, int prefix_size,
    const std::function<void(const std::vector<Box> &)> &visit_shallow,
    std::vector<std::vector<Box>> &roots) {
    std::vector<Box> state;
    std::function<void()> rec = [&] {
        if (static_cast<int>(state.size()) == prefix_size) {
            roots.push_back(state);
            return;
        }
        visit_shallow(state);
        if (static_cast<int>(state.size()) >= max_size) return;
        for (const Box &b : child_boxes(state)) {
            state.push_back(b);
            rec();
            state.pop_back();
        }
    };
    rec();
}

void dfs_subtree(std::vector<Box> &state, int max_size,
                 const std::function<void(const std::vector<Box> &)> &visit) {
    dfs_all(state, max_size, visit);
}

}  // namespace detail

std::vector<long long> pp_counts_by_size(int max_size, int threads) {
    using Acc = std::vector<long long>;
    return fold_plane_partitions_parallel<Acc>(
        max_size, threads, [&] { return Acc(max_size + 1, 0); },
        [](Acc &a, const std::vector<Box> &b) { ++a[b.size()]; },
        [](Acc &a, Acc &&p) {
            for (size_t i = 0; i < a.size(); ++i) a[i] += p[i];
        });
}

ColorWeights normalize(const ColorWeights &w) {
    if (w.r < 1) throw std::invalid_argument("color modulus r must be >= 1");
    auto red = [&](int v) { return ((v % w.r) + w.r) % w.r; };
    return ColorWeights{w.r, red(w.a), red(w.b), red(w.c)};
}

std::vector<int> color_counts(const std::vector<Box> &boxes,
                              const ColorWeights &weights) {
    ColorWeights w = normalize(weights);
    std::vector<int> counts(w.r, 0);
    for (const Box &b : boxes) {
        long m = (static_cast<long>(w.a) * b[0] + static_cast<long>(w.b) * b[1] +
                  static_cast<long>(w.c) * b[2]) %
                 w.r;
        ++counts[m];
    }
    return counts;
}

Series colored_gf(const ColorWeights &weights, int trunc, int threads) {
    ColorWeights w = normalize(weights);
    if (trunc < 0) throw std::invalid_argument("trunc must be >= 0");
    return fold_plane_partitions_parallel<Series>(
        trunc, threads, [&] { return Series(w.r, trunc); },
        [&](Series &s, const std::vector<Box> &b) {
            std::vector<int> counts = color_counts(b, w);
            s.add(Exponent(counts.begin(), counts.end()), 1);
        },
        [](Series &s, Series &&p) {
            for (const auto &[e, c] : p.terms()) s.add(e, c);
        });
}

}  // namespace qfq
