#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfq {

using Exponent = std::vector<int>;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotInvertible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SymmetryViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Multivariate integer power series truncated by total degree.  Terms are a
// lex-sorted exponent -> coefficient map; zero is never stored, so equality
// is structural.  Coefficients are exact (GMP): no wraparound, ever.
class Series {
public:
    Series(int num_vars, int trunc);
    static Series one(int num_vars, int trunc);

    int num_vars() const { return num_vars_; }
    int trunc() const { return trunc_; }
    const std::map<Exponent, mpz_class> &terms() const { return terms_; }

    void add(const Exponent &e, const mpz_class &c);
    mpz_class coeff(const Exponent &e) const;
    bool operator==(const Series &rhs) const = default;

    Series mul(const Series &rhs) const;
    // e < 0 requires a unit (+-1) constant term; inversion is the
    // degree-by-degree recurrence c_0 b_n = -sum_{0<k<=n} a_k b_{n-k}.
    Series int_pow(long e) const;
    Series inverse() const;
    // t_i -> t for all i: coefficient of t^n sums the degree-n slice.
    Series specialize() const;
    // Univariate only: t -> sign * t^m under a new truncation.
    Series substitute_power(int sign, int m, int new_trunc) const;
    // Relabels variable t_j as t_{j+s mod num_vars}.
    Series cyclic_shift(int s) const;

private:
    int num_vars_;
    int trunc_;
    std::map<Exponent, mpz_class> terms_;
};

// One orbit of the cyclic variable-relabeling action; rep is the lex-least
// rotation of the shared exponent.
struct OrbitTerm {
    Exponent rep;
    mpz_class coeff;
    int orbit_size;

    bool operator==(const OrbitTerm &rhs) const = default;
};

// Requires cyclic invariance (throws SymmetryViolation naming a witness
// exponent otherwise).  Orbits come out sorted by (total degree, rep).
std::vector<OrbitTerm> orbit_compress(const Series &s);
Series orbit_expand(const std::vector<OrbitTerm> &orbits, int num_vars,
                    int trunc);

Series macmahon(int trunc);

int total_degree(const Exponent &e);
Exponent rotate_exponent(const Exponent &e, int s);
Exponent min_rotation(const Exponent &e);

}  // namespace qfq
