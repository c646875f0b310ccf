#include "quiver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qfq {

namespace {

int mod(long v, int r) {
    long m = v % r;
    if (m < 0) m += r;
    return static_cast<int>(m);
}

void require_length(const Quiver &q, const DimVector &d) {
    if (static_cast<int>(d.size()) != q.num_vertices)
        throw DimensionMismatch("dimension vector length " +
                                std::to_string(d.size()) +
                                " does not match vertex count " +
                                std::to_string(q.num_vertices));
}

}  // namespace

Quiver mckay_quiver(const ColorWeights &weights) {
    ColorWeights w = normalize(weights);
    Quiver q{w.r, {}};
    for (int i = 0; i < w.r; ++i) {
        q.arrows.push_back({i, mod(i + w.a, w.r), 'x'});
        q.arrows.push_back({i, mod(i + w.b, w.r), 'y'});
        q.arrows.push_back({i, mod(i + w.c, w.r), 'z'});
    }
    std::sort(q.arrows.begin(), q.arrows.end(),
              [](const Arrow &l, const Arrow &r_) {
                  return std::tie(l.source, l.label) <
                         std::tie(r_.source, r_.label);
              });
    return q;
}

long long bilinear_form(const Quiver &q, const DimVector &d,
                        const DimVector &d2) {
    require_length(q, d);
    require_length(q, d2);
    long long v = 0;
    for (int i = 0; i < q.num_vertices; ++i)
        v += static_cast<long long>(d[i]) * d2[i];
    for (const Arrow &a : q.arrows)
        v -= static_cast<long long>(d[a.source]) * d2[a.target];
    return v;
}

long long euler_pairing(const Quiver &q, const DimVector &d,
                        const DimVector &d2) {
    return bilinear_form(q, d, d2) - bilinear_form(q, d2, d);
}

long long framed_moduli_dim(const Quiver &q, const DimVector &d) {
    long long total = std::accumulate(d.begin(), d.end(), 0LL);
    return total - bilinear_form(q, d, d);
}

QuantumMatrix make_quantum_matrix(int r,
                                  std::vector<std::vector<int>> exponents) {
    if (r < 1) throw std::invalid_argument("quantum matrix modulus must be >= 1");
    size_t n = exponents.size();
    for (auto &row : exponents) {
        if (row.size() != n)
            throw std::invalid_argument("quantum matrix must be square");
        for (int &e : row) e = mod(e, r);
    }
    for (size_t i = 0; i < n; ++i) {
        if (exponents[i][i] != 0)
            throw std::invalid_argument("quantum matrix diagonal must vanish");
        for (size_t j = i + 1; j < n; ++j)
            if (mod(exponents[i][j] + exponents[j][i], r) != 0)
                throw std::invalid_argument(
                    "quantum matrix must be antisymmetric mod r");
    }
    return QuantumMatrix{r, std::move(exponents)};
}

QuantumMatrix local_quantum_matrix(const QuantumMatrix &global, int base) {
    int n1 = static_cast<int>(global.exponents.size());
    if (base < 0 || base >= n1)
        throw std::invalid_argument("base vertex out of range");
    std::vector<int> keep;
    for (int i = 0; i < n1; ++i)
        if (i != base) keep.push_back(i);
    std::vector<std::vector<int>> local(keep.size(),
                                        std::vector<int>(keep.size(), 0));
    const auto &M = global.exponents;
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            // (e_i - e_base)^T M (e_j - e_base); the M[base][base] term is 0.
            local[i][j] = mod(static_cast<long>(M[keep[i]][keep[j]]) -
                                  M[keep[i]][base] - M[base][keep[j]],
                              global.r);
    return make_quantum_matrix(global.r, std::move(local));
}

Quiver ext_quiver(const QuantumMatrix &local) {
    if (local.exponents.size() != 4)
        throw std::invalid_argument(
            "ext_quiver expects the 4x4 local exponent matrix");
    int r = local.r;
    // Row 1 of the local matrix (index 0 here) holds m_{1k} for k = 2,3,4.
    const int steps[3] = {local.exponents[0][1], local.exponents[0][2],
                          local.exponents[0][3]};
    const char labels[3] = {'x', 'y', 'z'};
    Quiver q{r, {}};
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < 3; ++k)
            q.arrows.push_back({i, mod(i + steps[k], r), labels[k]});
    return q;
}

std::optional<LabelIso> find_label_isomorphism(const Quiver &a,
                                               const Quiver &b) {
    if (a.num_vertices != b.num_vertices ||
        a.arrows.size() != b.arrows.size())
        return std::nullopt;
    if (a.num_vertices > 9)
        throw std::invalid_argument(
            "label-isomorphism search is exhaustive; vertex count too large");

    auto key = [](std::vector<Arrow> arrows) {
        std::sort(arrows.begin(), arrows.end());
        return arrows;
    };
    const std::vector<Arrow> target = key(b.arrows);

    std::vector<int> phi(a.num_vertices);
    std::iota(phi.begin(), phi.end(), 0);
    do {
        std::array<char, 3> sigma = {'x', 'y', 'z'};
        do {
            std::vector<Arrow> mapped;
            mapped.reserve(a.arrows.size());
            for (const Arrow &ar : a.arrows) {
                char l = sigma[ar.label == 'x' ? 0 : ar.label == 'y' ? 1 : 2];
                mapped.push_back({phi[ar.source], phi[ar.target], l});
            }
            if (key(std::move(mapped)) == target)
                return LabelIso{phi, sigma};
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    } while (std::next_permutation(phi.begin(), phi.end()));
    return std::nullopt;
}

}  // namespace qfq
