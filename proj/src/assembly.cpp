#include "assembly.hpp"

#include <algorithm>
#include <numeric>

#include "reference.hpp"

namespace qfq {

namespace {

std::string exponent_str(const Exponent &e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

// Diffs of the engine's orbit table against the published rows (total degree
// <= 5), then of the univariate coefficients, each in (degree, rep) order.
std::vector<std::string> published_diffs(const std::vector<OrbitTerm> &orbits,
                                         const Series &univariate, int trunc) {
    struct Diff {
        int degree;
        Exponent rep;
        std::string text;
    };
    std::vector<Diff> diffs;
    std::map<Exponent, mpz_class> engine;
    for (const OrbitTerm &o : orbits)
        if (total_degree(o.rep) >= 1 && total_degree(o.rep) <= 5)
            engine[o.rep] = o.coeff;
    for (const auto &[rep, pub] : reference::published_orbits()) {
        int deg = total_degree(rep);
        if (deg > trunc) continue;
        mpz_class eng = 0;
        if (auto it = engine.find(rep); it != engine.end()) eng = it->second;
        if (eng != static_cast<long>(pub))
            diffs.push_back({deg, rep,
                             "degree " + std::to_string(deg) + " orbit t^" +
                                 exponent_str(rep) + ": enumerated " +
                                 eng.get_str() + ", published " +
                                 std::to_string(pub)});
    }
    for (const auto &[rep, coeff] : engine) {
        if (total_degree(rep) > trunc) continue;
        if (!reference::published_orbits().count(rep))
            diffs.push_back({total_degree(rep), rep,
                             "degree " + std::to_string(total_degree(rep)) +
                                 " orbit t^" + exponent_str(rep) +
                                 ": enumerated " + coeff.get_str() +
                                 ", published absent"});
    }
    std::sort(diffs.begin(), diffs.end(), [](const Diff &a, const Diff &b) {
        return std::tie(a.degree, a.rep) < std::tie(b.degree, b.rep);
    });
    std::vector<std::string> out;
    for (const Diff &d : diffs) out.push_back(d.text);
    const auto &pub_uni = reference::published_univariate();
    for (int k = 0; k <= std::min<int>(trunc, 5); ++k) {
        mpz_class eng = univariate.coeff({k});
        if (eng != static_cast<long>(pub_uni[k]))
            out.push_back("degree " + std::to_string(k) +
                          " univariate coefficient: enumerated " +
                          eng.get_str() + ", published " +
                          std::to_string(pub_uni[k]));
    }
    return out;
}

}  // namespace

SignedSeriesReport dt_quiver_series(int trunc, int threads) {
    if (trunc < 0) throw std::invalid_argument("trunc must be >= 0");
    Series table = multicolor_product(trunc, threads);
    Quiver q = mckay_quiver(ColorWeights{5, 1, 1, 3});
    Series multi(5, trunc);
    for (const auto &[e, n] : table.terms()) {
        long long total = std::accumulate(e.begin(), e.end(), 0LL);
        long long m = total + bilinear_form(q, e, e);
        multi.add(e, (m % 2 == 0) ? n : mpz_class(-n));
    }
    SignedSeriesReport report{multi, multi.specialize(), orbit_compress(multi),
                              {}};
    report.anomalies = published_diffs(report.orbits, report.univariate, trunc);
    return report;
}

Series dt_orbifold_series(const ColorWeights &weights, int trunc,
                          int threads) {
    ColorWeights w = normalize(weights);
    if (trunc < 0) throw std::invalid_argument("trunc must be >= 0");
    Quiver q = mckay_quiver(w);
    return fold_plane_partitions_parallel<Series>(
        trunc, threads, [&] { return Series(w.r, trunc); },
        [&](Series &s, const std::vector<Box> &boxes) {
            std::vector<int> counts = color_counts(boxes, w);
            Exponent d(counts.begin(), counts.end());
            long long m = d[0] + bilinear_form(q, d, d);
            s.add(d, (m % 2 == 0) ? 1 : -1);
        },
        [](Series &s, Series &&p) {
            for (const auto &[e, c] : p.terms()) s.add(e, c);
        });
}

Series quot_factor(int trunc) {
    return macmahon(trunc).substitute_power(-1, 1, trunc).int_pow(5);
}

EulerStrata stratum_euler_chars(int ambient) {
    if (ambient < 2)
        throw std::invalid_argument("ambient projective dimension must be >= 2");
    // chi of the open torus part of {sum x = 0} with exactly k nonzero
    // coordinates, by inclusion-exclusion inside the (k-1)-torus of P^{k-1}.
    std::vector<mpz_class> chi_t(ambient + 2, 0);
    chi_t[2] = 1;
    for (int k = 3; k <= ambient + 1; ++k) {
        mpz_class v = k - 1;
        for (int j = 2; j < k; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), k, j);
            v -= binom * chi_t[j];
        }
        chi_t[k] = v;
    }
    EulerStrata out;
    mpz_class weighted = 0, pow5 = 1;
    for (int i = 0; i < ambient; ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), ambient + 1, i + 2);
        mpz_class chi = binom * chi_t[i + 2];
        if (!chi.fits_slong_p())
            throw std::invalid_argument(
                "stratum Euler characteristic exceeds 64-bit range");
        out.chis.push_back(mpz_get_si(chi.get_mpz_t()));
        if (i >= 1) {
            weighted += pow5 * chi;
            pow5 *= 5;
        }
    }
    if (!weighted.fits_slong_p())
        throw std::invalid_argument(
            "weighted Euler combination exceeds 64-bit range");
    out.weighted = mpz_get_si(weighted.get_mpz_t());
    return out;
}

Series quintic_series(int trunc, int threads) {
    Series uni = dt_quiver_series(trunc, threads).univariate;
    Series factor =
        macmahon((trunc + 4) / 5).substitute_power(-1, 5, trunc).int_pow(-50);
    return uni.int_pow(10).mul(factor);
}

ExtChain ext_chain() {
    ExtChain c{reference::global_quantum_matrix(), {}, {}, {}, {}};
    c.local = local_quantum_matrix(c.global, 0);
    c.ext = ext_quiver(c.local);
    c.mckay = mckay_quiver(ColorWeights{5, 1, 1, 3});
    c.iso = find_label_isomorphism(c.ext, c.mckay);
    return c;
}

}  // namespace qfq
