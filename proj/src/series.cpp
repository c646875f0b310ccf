#include "series.hpp"

#include <algorithm>
#include <numeric>

namespace qfq {

int total_degree(const Exponent &e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

Exponent rotate_exponent(const Exponent &e, int s) {
    const int k = static_cast<int>(e.size());
    s = ((s % k) + k) % k;
    Exponent out(k);
    for (int j = 0; j < k; ++j) out[(j + s) % k] = e[j];
    return out;
}

Exponent min_rotation(const Exponent &e) {
    Exponent best = e;
    for (int s = 1; s < static_cast<int>(e.size()); ++s)
        best = std::min(best, rotate_exponent(e, s));
    return best;
}

Series::Series(int num_vars, int trunc) : num_vars_(num_vars), trunc_(trunc) {
    if (num_vars < 1) throw std::invalid_argument("series needs >= 1 variable");
    if (trunc < 0) throw std::invalid_argument("negative truncation");
}

Series Series::one(int num_vars, int trunc) {
    Series s(num_vars, trunc);
    s.add(Exponent(num_vars, 0), 1);
    return s;
}

void Series::add(const Exponent &e, const mpz_class &c) {
    if (static_cast<int>(e.size()) != num_vars_)
        throw DimensionMismatch("exponent length != num_vars");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
    if (total_degree(e) > trunc_ || c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class Series::coeff(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

Series Series::mul(const Series &rhs) const {
    if (num_vars_ != rhs.num_vars_ || trunc_ != rhs.trunc_)
        throw DimensionMismatch("mul: mismatched num_vars or truncation");
    Series out(num_vars_, trunc_);
    Exponent e(num_vars_);
    for (const auto &[ea, ca] : terms_) {
        const int da = total_degree(ea);
        for (const auto &[eb, cb] : rhs.terms_) {
            if (da + total_degree(eb) > trunc_) continue;
            for (int j = 0; j < num_vars_; ++j) e[j] = ea[j] + eb[j];
            out.add(e, ca * cb);
        }
    }
    return out;
}

Series Series::int_pow(long e) const {
    if (e < 0) return inverse().int_pow(-e);
    Series result = one(num_vars_, trunc_);
    Series base = *this;
    while (e > 0) {
        if (e & 1) result = result.mul(base);
        base = base.mul(base);
        e >>= 1;
    }
    return result;
}

Series Series::inverse() const {
    const mpz_class c0 = coeff(Exponent(num_vars_, 0));
    if (c0 != 1 && c0 != -1)
        throw NotInvertible("constant term must be a unit (+1 or -1)");

    // b_0 = 1/c_0; the degree-d slice of b satisfies
    // c_0 b_d = -(slice_d of (a - c_0) * b_{<d}).
    Series b(num_vars_, trunc_);
    b.add(Exponent(num_vars_, 0), c0);  // c0 is its own inverse
    Series tail = *this;
    tail.add(Exponent(num_vars_, 0), -c0);  // a - constant
    for (int d = 1; d <= trunc_; ++d) {
        Series conv = tail.mul(b);
        for (const auto &[e, c] : conv.terms())
            if (total_degree(e) == d) b.add(e, -c0 * c);
    }
    return b;
}

Series Series::specialize() const {
    Series out(1, trunc_);
    for (const auto &[e, c] : terms_) out.add({total_degree(e)}, c);
    return out;
}

Series Series::substitute_power(int sign, int m, int new_trunc) const {
    if (num_vars_ != 1)
        throw DimensionMismatch("substitute_power requires a univariate series");
    if ((sign != 1 && sign != -1) || m < 1)
        throw std::invalid_argument("substitute_power: sign must be +-1, m >= 1");
    Series out(1, new_trunc);
    for (const auto &[e, c] : terms_) {
        const long n = e[0];
        if (n * m > new_trunc) continue;
        out.add({static_cast<int>(n * m)}, (sign < 0 && (n & 1)) ? -c : c);
    }
    return out;
}

Series Series::cyclic_shift(int s) const {
    Series out(num_vars_, trunc_);
    for (const auto &[e, c] : terms_) out.add(rotate_exponent(e, s), c);
    return out;
}

std::vector<OrbitTerm> orbit_compress(const Series &s) {
    const Series shifted = s.cyclic_shift(1);
    if (!(shifted == s)) {
        // name a witness exponent whose coefficient moves under the shift
        for (const auto &[e, c] : s.terms()) {
            if (shifted.coeff(e) != c) {
                std::string msg = "series is not cyclic-invariant at exponent (";
                for (size_t j = 0; j < e.size(); ++j)
                    msg += (j ? "," : "") + std::to_string(e[j]);
                msg += ")";
                throw SymmetryViolation(msg);
            }
        }
        throw SymmetryViolation("series is not cyclic-invariant");
    }

    std::vector<OrbitTerm> orbits;
    for (const auto &[e, c] : s.terms()) {
        if (min_rotation(e) != e) continue;  // only emit at the lex-least rep
        std::vector<Exponent> rots;
        for (int r = 0; r < s.num_vars(); ++r) rots.push_back(rotate_exponent(e, r));
        std::sort(rots.begin(), rots.end());
        rots.erase(std::unique(rots.begin(), rots.end()), rots.end());
        orbits.push_back({e, c, static_cast<int>(rots.size())});
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const OrbitTerm &a, const OrbitTerm &b) {
                  const int da = total_degree(a.rep), db = total_degree(b.rep);
                  return da != db ? da < db : a.rep < b.rep;
              });
    return orbits;
}

Series orbit_expand(const std::vector<OrbitTerm> &orbits, int num_vars,
                    int trunc) {
    Series out(num_vars, trunc);
    for (const auto &o : orbits) {
        std::vector<Exponent> rots;
        for (int r = 0; r < num_vars; ++r) rots.push_back(rotate_exponent(o.rep, r));
        std::sort(rots.begin(), rots.end());
        rots.erase(std::unique(rots.begin(), rots.end()), rots.end());
        for (const auto &e : rots) out.add(e, o.coeff);
    }
    return out;
}

Series macmahon(int trunc) {
    // prod_{n=1..trunc} (1 - t^n)^{-n};  (1-u)^{-n} = sum_k C(n+k-1,k) u^k.
    Series result = Series::one(1, trunc);
    for (int n = 1; n <= trunc; ++n) {
        Series factor(1, trunc);
        mpz_class binom;
        for (int k = 0; n * k <= trunc; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), n + k - 1, k);
            factor.add({n * k}, binom);
        }
        result = result.mul(factor);
    }
    return result;
}

}  // namespace qfq
