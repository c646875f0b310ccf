#include "counting.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qfq {

namespace {

unsigned rotl_mask(unsigned m, int s, int r) {
    s %= r;
    unsigned full = (1u << r) - 1;
    if (s == 0) return m & full;
    return ((m << s) | (m >> (r - s))) & full;
}

int find_box(const std::vector<Box> &sorted, const Box &b) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), b);
    if (it == sorted.end() || *it != b) return -1;
    return static_cast<int>(it - sorted.begin());
}

// pred_idx[i][dir] = position of box i minus e_dir, or -1 at the boundary.
// Lex order guarantees predecessors precede their box.
std::vector<std::array<int, 3>> predecessor_indices(
    const std::vector<Box> &boxes) {
    std::vector<std::array<int, 3>> pred(boxes.size());
    for (size_t i = 0; i < boxes.size(); ++i)
        for (int d = 0; d < 3; ++d) {
            if (boxes[i][d] == 0) {
                pred[i][d] = -1;
                continue;
            }
            Box p = boxes[i];
            --p[d];
            pred[i][d] = find_box(boxes, p);
        }
    return pred;
}

/*
 * Box-by-box coloring DFS.  At box `idx` the admissible color sets are the
 * nonempty submasks of the intersection, over existing predecessor boxes, of
 * that predecessor's mask shifted by the arrow step for its direction (color
 * w needs w-step in the predecessor's set).  Constraints only ever look
 * backwards, so each admissible submask extends independently.
 */
template <class Leaf>
void color_dfs(const std::vector<Box> &boxes,
               const std::vector<std::array<int, 3>> &pred, int r,
               const std::array<int, 3> &steps, int max_total,
               std::vector<unsigned> &masks, DimVector &dim, int total,
               size_t idx, Leaf &&leaf) {
    int remaining = static_cast<int>(boxes.size() - idx);
    if (total + remaining > max_total) return;  // every box adds >= 1 color
    if (idx == boxes.size()) {
        leaf(masks, dim);
        return;
    }
    unsigned allowed = (1u << r) - 1;
    for (int d = 0; d < 3; ++d)
        if (pred[idx][d] >= 0)
            allowed &= rotl_mask(masks[pred[idx][d]], steps[d], r);
    int budget = max_total - total - (remaining - 1);
    for (unsigned sub = allowed; sub; sub = (sub - 1) & allowed) {
        int pc = std::popcount(sub);
        if (pc > budget) continue;
        masks[idx] = sub;
        for (int w = 0; w < r; ++w)
            if (sub & (1u << w)) ++dim[w];
        color_dfs(boxes, pred, r, steps, max_total, masks, dim, total + pc,
                  idx + 1, leaf);
        for (int w = 0; w < r; ++w)
            if (sub & (1u << w)) --dim[w];
    }
}

ColorWeights require_mckay(const Quiver &q) {
    std::optional<ColorWeights> w = mckay_steps(q);
    if (!w) throw UnsupportedQuiver("quiver is not a labeled McKay quiver");
    return *w;
}

}  // namespace

DimVector dimension_vector(const MultiColoredPartition &m, int r) {
    DimVector dim(r, 0);
    for (unsigned mask : m.colors)
        for (int w = 0; w < r; ++w)
            if (mask & (1u << w)) ++dim[w];
    return dim;
}

bool is_valid_multicoloring(const Quiver &q, const MultiColoredPartition &m) {
    if (m.boxes.size() != m.colors.size()) return false;
    if (!std::is_sorted(m.boxes.begin(), m.boxes.end())) return false;
    if (!is_plane_partition(m.boxes)) return false;
    int r = q.num_vertices;
    unsigned full = (1u << r) - 1;
    for (unsigned mask : m.colors)
        if (mask == 0 || (mask & ~full)) return false;
    for (size_t i = 0; i < m.boxes.size(); ++i) {
        for (const Arrow &a : q.arrows) {
            int dir = a.label == 'x' ? 0 : a.label == 'y' ? 1 : 2;
            if (!(m.colors[i] & (1u << a.target))) continue;
            if (m.boxes[i][dir] == 0) continue;
            Box p = m.boxes[i];
            --p[dir];
            int pi = find_box(m.boxes, p);
            if (pi < 0) return false;  // unreachable once is_plane_partition held
            if (!(m.colors[pi] & (1u << a.source))) return false;
        }
    }
    return true;
}

std::optional<ColorWeights> mckay_steps(const Quiver &q) {
    int r = q.num_vertices;
    if (r < 1 || static_cast<int>(q.arrows.size()) != 3 * r)
        return std::nullopt;
    int step[3] = {-1, -1, -1};
    std::vector<std::array<bool, 3>> seen(r, {false, false, false});
    for (const Arrow &a : q.arrows) {
        int l = a.label == 'x' ? 0 : a.label == 'y' ? 1 : a.label == 'z' ? 2 : -1;
        if (l < 0) return std::nullopt;
        if (a.source < 0 || a.source >= r || a.target < 0 || a.target >= r)
            return std::nullopt;
        if (seen[a.source][l]) return std::nullopt;
        seen[a.source][l] = true;
        int s = (a.target - a.source + r) % r;
        if (step[l] < 0) step[l] = s;
        if (step[l] != s) return std::nullopt;
    }
    return ColorWeights{r, step[0], step[1], step[2]};
}

namespace {

void stream_colorings(const Quiver &q, int max_boxes, int max_total,
                      const std::function<void(const MultiColoredPartition &)>
                          &visit) {
    ColorWeights w = require_mckay(q);
    std::array<int, 3> steps = {w.a, w.b, w.c};
    fold_plane_partitions(max_boxes, [&](const std::vector<Box> &boxes) {
        auto pred = predecessor_indices(boxes);
        std::vector<unsigned> masks(boxes.size(), 0);
        DimVector dim(w.r, 0);
        color_dfs(boxes, pred, w.r, steps, max_total, masks, dim, 0, 0,
                  [&](const std::vector<unsigned> &ms, const DimVector &) {
                      visit(MultiColoredPartition{boxes, ms});
                  });
    });
}

}  // namespace

void stream_multicolored(
    const Quiver &q, int max_total,
    const std::function<void(const MultiColoredPartition &)> &visit) {
    stream_colorings(q, max_total, max_total, visit);
}

void stream_multicolored_boxes(
    const Quiver &q, int max_boxes,
    const std::function<void(const MultiColoredPartition &)> &visit) {
    if (max_boxes < 0) throw std::invalid_argument("max_boxes must be >= 0");
    stream_colorings(q, max_boxes, max_boxes * q.num_vertices, visit);
}

CountTable multicolor_oracle(const Quiver &q, int max_total, int threads) {
    ColorWeights w = require_mckay(q);
    if (w.r != 5 || w.a != 1 || w.b != 1 || w.c != 3)
        throw UnsupportedQuiver(
            "direct enumeration supports only the McKay quiver of mu_5(1,1,3)");
    if (max_total < 0) throw std::invalid_argument("max_total must be >= 0");
    std::array<int, 3> steps = {w.a, w.b, w.c};
    using Map = std::map<DimVector, long long>;
    Map counts = fold_plane_partitions_parallel<Map>(
        max_total, threads, [] { return Map{}; },
        [&](Map &acc, const std::vector<Box> &boxes) {
            auto pred = predecessor_indices(boxes);
            std::vector<unsigned> masks(boxes.size(), 0);
            DimVector dim(w.r, 0);
            color_dfs(boxes, pred, w.r, steps, max_total, masks, dim, 0, 0,
                      [&](const std::vector<unsigned> &, const DimVector &d) {
                          ++acc[d];
                      });
        },
        [](Map &acc, Map &&part) {
            for (auto &[d, c] : part) acc[d] += c;
        });
    return CountTable{max_total, std::move(counts)};
}

Series multicolor_product(int trunc, int threads) {
    Series base = colored_gf(ColorWeights{5, 1, 1, 3}, trunc, threads);
    Series acc = Series::one(5, trunc);
    for (int s = 0; s < 5; ++s) acc = acc.mul(base.cyclic_shift(s));
    return acc;
}

CountTable table_from_series(const Series &s) {
    CountTable t;
    t.trunc = s.trunc();
    for (const auto &[e, c] : s.terms()) {
        if (c <= 0 || !c.fits_slong_p())
            throw std::runtime_error("count table coefficient out of range");
        t.counts.emplace(e, mpz_get_si(c.get_mpz_t()));
    }
    return t;
}

std::array<std::vector<Box>, 5> decompose(const MultiColoredPartition &m) {
    std::array<std::vector<Box>, 5> parts;
    for (size_t i = 0; i < m.boxes.size(); ++i) {
        const Box &b = m.boxes[i];
        for (int v = 0; v < 5; ++v) {
            int kv = (v + b[0] + b[1] + 3 * b[2]) % 5;
            if (m.colors[i] & (1u << kv)) parts[v].push_back(b);
        }
    }
    if (!(recompose(parts) == m))
        throw std::runtime_error(
            "multi-coloring decomposition failed to reassemble");
    return parts;
}

MultiColoredPartition recompose(const std::array<std::vector<Box>, 5> &parts) {
    std::vector<Box> all;
    for (int v = 0; v < 5; ++v) {
        if (!is_plane_partition(parts[v]))
            throw std::invalid_argument(
                "recompose requires five plane partitions");
        all.insert(all.end(), parts[v].begin(), parts[v].end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    MultiColoredPartition m{all, std::vector<unsigned>(all.size(), 0)};
    for (int v = 0; v < 5; ++v)
        for (const Box &b : parts[v]) {
            int kv = (v + b[0] + b[1] + 3 * b[2]) % 5;
            m.colors[find_box(all, b)] |= 1u << kv;
        }
    return m;
}

}  // namespace qfq
