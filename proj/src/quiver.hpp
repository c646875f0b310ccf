#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "plane_partitions.hpp"
#include "series.hpp"

namespace qfq {

using DimVector = std::vector<int>;

struct UnsupportedQuiver : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Arrow {
    int source;
    int target;
    char label;  // 'x', 'y' or 'z'

    auto operator<=>(const Arrow &) const = default;
};

// Vertices are the residues 0..num_vertices-1; arrows stay sorted by
// (source, label).
struct Quiver {
    int num_vertices;
    std::vector<Arrow> arrows;

    bool operator==(const Quiver &) const = default;
};

// McKay quiver of mu_r(a,b,c) acting on C^3: x_i: i -> i+a, y_i: i -> i+b,
// z_i: i -> i+c, all mod r.
Quiver mckay_quiver(const ColorWeights &w);

// <d,d'>_Q = sum_i d_i d'_i - sum_{arrows} d_{source} d'_{target}.
long long bilinear_form(const Quiver &q, const DimVector &d,
                        const DimVector &d2);
// chi_Q(d,d') = <d,d'> - <d',d>.
long long euler_pairing(const Quiver &q, const DimVector &d,
                        const DimVector &d2);
// |d| - <d,d>_Q, for the framing (1,...,1); its parity is the DT sign.
long long framed_moduli_dim(const Quiver &q, const DimVector &d);

// Commutation exponents q_ij = q^{m_ij} with q a primitive r-th root of
// unity; stored as the integer matrix (m_ij) mod r, antisymmetric with zero
// diagonal.
struct QuantumMatrix {
    int r;
    std::vector<std::vector<int>> exponents;

    bool operator==(const QuantumMatrix &) const = default;
};

// Normalizes entries into 0..r-1 and validates antisymmetry / zero diagonal.
QuantumMatrix make_quantum_matrix(int r,
                                  std::vector<std::vector<int>> exponents);

// Exponent matrix of the generators u_i = t_i t_base^{-1} (i != base):
// entry (i,j) = (e_i - e_base)^T M (e_j - e_base) mod r.
QuantumMatrix local_quantum_matrix(const QuantumMatrix &global, int base);

// Ext-quiver of the 4x4 local matrix: for each generator index k = 2,3,4 one
// arrow i -> i + m_{1k} at every vertex i in Z/r, labeled x/y/z by k.
Quiver ext_quiver(const QuantumMatrix &local);

struct LabelIso {
    std::vector<int> vertex_map;   // image of vertex i
    std::array<char, 3> label_map;  // images of x, y, z

    bool operator==(const LabelIso &) const = default;
};

// First witness in lex order (vertex permutations outer, label permutations
// inner), or nullopt.  Exhaustive search; guarded to small vertex counts.
std::optional<LabelIso> find_label_isomorphism(const Quiver &a,
                                               const Quiver &b);

}  // namespace qfq
