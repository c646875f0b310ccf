#pragma once

#include <string>

#include "counting.hpp"

namespace qfq {

struct SignedSeriesReport {
    Series multivariate;             // 5 variables, signed n_Q table
    Series univariate;               // its specialization
    std::vector<OrbitTerm> orbits;   // orbit-compressed view
    std::vector<std::string> anomalies;  // diffs against the published table
};

// Z^{Q,W}(t0..t4) = sum_d (-1)^{|d| + <d,d>_Q} n_Q(d) t^d for the McKay
// quiver Q of mu_5(1,1,3), with each published coefficient that disagrees
// with the enumerated table reported as an anomaly.
SignedSeriesReport dt_quiver_series(int trunc, int threads);

// Z^{[C^3/mu_r(a,b,c)]}: sum over colored plane partitions of
// (-1)^{|pi|_0 + <|pi|,|pi|>} t^{|pi|}, bilinear form of mckay_quiver(w).
Series dt_orbifold_series(const ColorWeights &w, int trunc, int threads);

// M(-t)^5, the Quot-scheme factor of the commutative strata.
Series quot_factor(int trunc);

struct EulerStrata {
    std::vector<long long> chis;  // chi(X_(0)) .. chi(X_(ambient-1))
    long long weighted;           // sum_{i>=1} 5^{i-1} chi(X_(i))
};

// Strata of the hyperplane sum x = 0 in P^ambient by number of nonzero
// coordinates: chi(T_2) = 1, chi(T_k) = (k-1) - sum_{j<k} C(k,j) chi(T_j),
// and chi(X_(i)) = C(ambient+1, i+2) chi(T_{i+2}).
EulerStrata stratum_euler_chars(int ambient);

// Z^A(t) = (Z^{Q,W}(t))^10 * M(-t^5)^{-50}.
Series quintic_series(int trunc, int threads);

// Derivation chain from the global quantum parameters down to the McKay
// presentation, with the labeled-quiver isomorphism witness.
struct ExtChain {
    QuantumMatrix global;
    QuantumMatrix local;
    Quiver ext;
    Quiver mckay;
    std::optional<LabelIso> iso;
};

ExtChain ext_chain();

}  // namespace qfq
