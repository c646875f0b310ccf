#include <random>
#include <vector>

#include "doctest.h"
#include "series.hpp"

using qfq::Exponent;
using qfq::Series;

namespace {

Series geometric(int trunc) {
    // 1/(1-t)
    Series s(1, trunc);
    for (int n = 0; n <= trunc; ++n) s.add({n}, 1);
    return s;
}

Series random_series(std::mt19937 &rng, int num_vars, int trunc) {
    std::uniform_int_distribution<int> coef(-4, 4);
    Series s(num_vars, trunc);
    for (int tries = 0; tries < 12; ++tries) {
        Exponent e(num_vars);
        int left = trunc;
        for (int j = 0; j < num_vars; ++j) {
            std::uniform_int_distribution<int> part(0, left);
            e[j] = part(rng);
            left -= e[j];
        }
        s.add(e, coef(rng));
    }
    return s;
}

}  // namespace

TEST_CASE("series construction and term storage") {
    Series s(3, 4);
    CHECK(s.num_vars() == 3);
    CHECK(s.trunc() == 4);
    CHECK(s.terms().empty());

    s.add({1, 0, 2}, 5);
    s.add({1, 0, 2}, -5);
    CHECK(s.terms().empty());  // cancelled terms are erased

    s.add({0, 0, 0}, 1);
    s.add({4, 1, 0}, 9);  // beyond truncation: silently dropped
    CHECK(s.terms().size() == 1);
    CHECK(s.coeff({0, 0, 0}) == 1);
    CHECK(s.coeff({1, 1, 1}) == 0);

    CHECK_THROWS_AS(s.add({1, 2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(s.add({-1, 0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(Series(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Series(1, -1), std::invalid_argument);
}

TEST_CASE("one is the multiplicative identity") {
    std::mt19937 rng(2024);
    for (int num_vars : {1, 3, 5}) {
        Series s = random_series(rng, num_vars, 4);
        Series id = Series::one(num_vars, 4);
        CHECK(s.mul(id) == s);
        CHECK(id.mul(s) == s);
    }
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        Series a = random_series(rng, 2, 5);
        Series b = random_series(rng, 2, 5);
        Series c = random_series(rng, 2, 5);
        CHECK(a.mul(b) == b.mul(a));
        CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));
        CHECK(a.mul(b.mul(c)) == a.mul(b).mul(c));
    }
}

TEST_CASE("multiplication validates arity and truncation") {
    Series a(2, 3), b(3, 3), c(2, 4);
    CHECK_THROWS_AS(a.mul(b), qfq::DimensionMismatch);
    CHECK_THROWS_AS(a.mul(c), qfq::DimensionMismatch);
}

TEST_CASE("geometric series inverts 1 - t") {
    Series one_minus_t(1, 8);
    one_minus_t.add({0}, 1);
    one_minus_t.add({1}, -1);
    CHECK(one_minus_t.inverse() == geometric(8));
    CHECK(one_minus_t.mul(one_minus_t.inverse()) == Series::one(1, 8));
    CHECK(one_minus_t.int_pow(-1) == geometric(8));
}

TEST_CASE("inverse requires a unit constant term") {
    Series no_const(1, 3);
    no_const.add({1}, 1);
    CHECK_THROWS_AS(no_const.inverse(), qfq::NotInvertible);

    Series two(1, 3);
    two.add({0}, 2);
    CHECK_THROWS_AS(two.inverse(), qfq::NotInvertible);

    Series neg(2, 3);  // constant -1 works, and in any arity
    neg.add({0, 0}, -1);
    neg.add({1, 1}, 3);
    CHECK(neg.mul(neg.inverse()) == Series::one(2, 3));
}

TEST_CASE("integer powers match repeated multiplication") {
    std::mt19937 rng(99);
    Series s = random_series(rng, 3, 4);
    CHECK(s.int_pow(0) == Series::one(3, 4));
    CHECK(s.int_pow(1) == s);
    CHECK(s.int_pow(3) == s.mul(s).mul(s));

    Series u = geometric(6);
    CHECK(u.int_pow(-2) == u.inverse().mul(u.inverse()));
    CHECK(u.int_pow(5).int_pow(-1) == u.int_pow(-5));
}

TEST_CASE("specialize sums total-degree slices") {
    Series s(3, 3);
    s.add({0, 0, 0}, 1);
    s.add({1, 0, 0}, 2);
    s.add({0, 1, 0}, -1);
    s.add({1, 1, 1}, 7);
    s.add({3, 0, 0}, 1);
    Series u = s.specialize();
    CHECK(u.num_vars() == 1);
    CHECK(u.trunc() == 3);
    CHECK(u.coeff({0}) == 1);
    CHECK(u.coeff({1}) == 1);
    CHECK(u.coeff({2}) == 0);
    CHECK(u.coeff({3}) == 8);

    // specializing a univariate series is the identity
    CHECK(u.specialize() == u);
}

TEST_CASE("substitute_power maps t to sign * t^m") {
    Series u(1, 3);
    u.add({0}, 1);
    u.add({1}, 2);
    u.add({2}, 3);
    u.add({3}, 4);

    Series alt = u.substitute_power(-1, 1, 3);
    CHECK(alt.coeff({0}) == 1);
    CHECK(alt.coeff({1}) == -2);
    CHECK(alt.coeff({2}) == 3);
    CHECK(alt.coeff({3}) == -4);

    Series sq = u.substitute_power(1, 2, 7);
    CHECK(sq.trunc() == 7);
    CHECK(sq.coeff({2}) == 2);
    CHECK(sq.coeff({4}) == 3);
    CHECK(sq.coeff({6}) == 4);
    CHECK(sq.coeff({3}) == 0);

    Series neg_sq = u.substitute_power(-1, 2, 6);
    CHECK(neg_sq.coeff({2}) == -2);
    CHECK(neg_sq.coeff({4}) == 3);
    CHECK(neg_sq.coeff({6}) == -4);

    CHECK_THROWS_AS(Series(2, 3).substitute_power(-1, 1, 3),
                    qfq::DimensionMismatch);
    CHECK_THROWS_AS(u.substitute_power(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(u.substitute_power(1, 0, 3), std::invalid_argument);
}

TEST_CASE("cyclic_shift relabels variables") {
    Series s(5, 4);
    s.add({1, 0, 0, 2, 0}, 3);
    s.add({0, 0, 0, 0, 1}, -1);

    Series t = s.cyclic_shift(1);
    CHECK(t.coeff({0, 1, 0, 0, 2}) == 3);
    CHECK(t.coeff({1, 0, 0, 0, 0}) == -1);

    CHECK(s.cyclic_shift(0) == s);
    CHECK(s.cyclic_shift(5) == s);
    CHECK(s.cyclic_shift(2).cyclic_shift(3) == s);
    CHECK(s.cyclic_shift(1).cyclic_shift(1) == s.cyclic_shift(2));
}

TEST_CASE("exponent rotation helpers") {
    Exponent e = {0, 1, 2, 0, 0};
    CHECK(qfq::total_degree(e) == 3);
    CHECK(qfq::rotate_exponent(e, 1) == Exponent{0, 0, 1, 2, 0});
    CHECK(qfq::rotate_exponent(e, 5) == e);
    CHECK(qfq::min_rotation(e) == Exponent{0, 0, 0, 1, 2});
    CHECK(qfq::min_rotation(Exponent{1, 1, 1}) == Exponent{1, 1, 1});
}

TEST_CASE("orbit_compress groups rotation classes") {
    Series s(5, 2);
    s.add({0, 0, 0, 0, 0}, 4);
    for (int v = 0; v < 5; ++v) {
        Exponent e(5, 0);
        e[v] = 1;
        s.add(e, 2);
    }
    auto orbits = qfq::orbit_compress(s);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].rep == Exponent{0, 0, 0, 0, 0});
    CHECK(orbits[0].coeff == 4);
    CHECK(orbits[0].orbit_size == 1);
    CHECK(orbits[1].rep == Exponent{0, 0, 0, 0, 1});
    CHECK(orbits[1].coeff == 2);
    CHECK(orbits[1].orbit_size == 5);

    CHECK(qfq::orbit_expand(orbits, 5, 2) == s);
}

TEST_CASE("orbit_compress rejects asymmetric series") {
    Series s(3, 2);
    s.add({1, 0, 0}, 1);
    CHECK_THROWS_AS(qfq::orbit_compress(s), qfq::SymmetryViolation);
    CHECK_THROWS_WITH(
        qfq::orbit_compress(s),
        doctest::Contains("not cyclic-invariant at exponent (1,0,0)"));
}

TEST_CASE("orbit round-trip on symmetrized random series") {
    std::mt19937 rng(41);
    for (int round = 0; round < 10; ++round) {
        Series raw = random_series(rng, 5, 4);
        Series sym(5, 4);
        for (int v = 0; v < 5; ++v) {
            Series rot = raw.cyclic_shift(v);
            for (const auto &[e, c] : rot.terms()) sym.add(e, c);
        }
        CHECK(qfq::orbit_expand(qfq::orbit_compress(sym), 5, 4) == sym);
    }
}

TEST_CASE("macmahon series") {
    Series m = qfq::macmahon(10);
    std::vector<long> expected = {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};
    for (int n = 0; n <= 10; ++n) CHECK(m.coeff({n}) == expected[n]);
    CHECK_THROWS_AS(qfq::macmahon(-1), std::invalid_argument);

    // M(t)^5 opens 1, 5, 25, 100, 370, 1251
    Series m5 = qfq::macmahon(5).int_pow(5);
    std::vector<long> fifth = {1, 5, 25, 100, 370, 1251};
    for (int n = 0; n <= 5; ++n) CHECK(m5.coeff({n}) == fifth[n]);

    // M(-t)^5 alternates: 1, -5, 25, -100, 370, -1251
    Series malt5 = qfq::macmahon(5).substitute_power(-1, 1, 5).int_pow(5);
    for (int n = 0; n <= 5; ++n)
        CHECK(malt5.coeff({n}) == (n % 2 == 0 ? fifth[n] : -fifth[n]));
}
