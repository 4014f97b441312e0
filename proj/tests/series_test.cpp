#include <doctest.h>

#include <random>

#include "kps/series.hpp"

using namespace kps;

namespace {

ScaledSeries poly_series(std::initializer_list<long> coeffs, long scale, long order) {
    return ScaledSeries::from_poly(Poly(coeffs, Var::t), scale, order);
}

}  // namespace

TEST_CASE("series_mul basics") {
    const auto one_plus_t = poly_series({1, 1}, 1, 10);
    const auto sq = series_mul(one_plus_t, one_plus_t);
    CHECK(sq.coeff_t(0) == BigRat(1));
    CHECK(sq.coeff_t(1) == BigRat(2));
    CHECK(sq.coeff_t(2) == BigRat(1));
    CHECK(sq.coeff_t(3) == BigRat(0));

    const auto s = poly_series({3, 1, 4, 1, 5}, 1, 10);
    CHECK(series_mul(s, ScaledSeries::one(1, 10)) == s);

    // geometric series times (1 - t) telescopes to 1
    const auto geo = inv_one_minus_power(1, 1, 5);
    CHECK(series_mul(geo, poly_series({1, -1}, 1, 5)) == ScaledSeries::one(1, 5));
}

TEST_CASE("series_mul scale mismatch") {
    CHECK_THROWS_AS(series_mul(poly_series({1}, 1, 4), poly_series({1}, 2, 4)),
                    std::invalid_argument);
}

TEST_CASE("inv_one_minus_power") {
    const auto s = inv_one_minus_power(2, 1, 6);
    for (long k = 0; k <= 6; ++k) CHECK(s.coeff_t(k) == BigRat(k % 2 == 0 ? 1 : 0));

    const auto s1 = inv_one_minus_power(1, 1, 3);
    for (long k = 0; k <= 3; ++k) CHECK(s1.coeff_t(k) == BigRat(1));

    CHECK_THROWS_AS(inv_one_minus_power(0, 1, 4), std::invalid_argument);
}

TEST_CASE("inverse property: inv(1 - t^k) * (1 - t^k) = 1") {
    for (long k = 1; k <= 5; ++k) {
        for (long scale : {1L, 2L, 3L}) {
            const auto inv = inv_one_minus_power(k, scale, 12);
            Poly one_minus(Var::t);
            one_minus = poly_sub(Poly({1}, Var::t), Poly::monomial(k, BigRat(1), Var::t));
            const auto prod = series_mul(inv, ScaledSeries::from_poly(one_minus.inflated(scale), scale, 12));
            CHECK(prod == ScaledSeries::one(scale, 12));
        }
    }
}

TEST_CASE("binom_power") {
    const auto a = binom_power(1, 2, 1, 8);
    CHECK(a.coeff_t(0) == BigRat(1));
    CHECK(a.coeff_t(1) == BigRat(2));
    CHECK(a.coeff_t(2) == BigRat(1));

    CHECK(binom_power(3, 0, 1, 8) == ScaledSeries::one(1, 8));

    const auto c = binom_power(2, 3, 1, 6);
    CHECK(c.coeff_t(0) == BigRat(1));
    CHECK(c.coeff_t(2) == BigRat(3));
    CHECK(c.coeff_t(4) == BigRat(3));
    CHECK(c.coeff_t(6) == BigRat(1));
    CHECK(c.coeff_t(1) == BigRat(0));
}

TEST_CASE("monomial_frac") {
    const auto half = monomial_frac(BigRat(1, 2), 2, 4);
    CHECK(half.coeff_u(1) == BigRat(1));
    CHECK(half.coeff_u(0) == BigRat(0));
    CHECK(half.coeff_u(2) == BigRat(0));

    CHECK(monomial_frac(BigRat(0), 3, 4).coeff_u(0) == BigRat(1));
    // 3/2 * 3 = 9/2 is not an integer: the scale cannot represent it
    CHECK_THROWS_AS(monomial_frac(BigRat(3, 2), 3, 4), std::invalid_argument);
}

TEST_CASE("descale") {
    const auto u2 = monomial_frac(BigRat(1), 2, 4);  // t^1 at scale 2, u-exponent 2
    const auto d = descale(u2);
    CHECK(d.scale() == 1);
    CHECK(d.coeff_t(1) == BigRat(1));

    CHECK(descale(ScaledSeries::one(5, 3)) == ScaledSeries::one(1, 3));

    const auto off = monomial_frac(BigRat(1, 2), 2, 4);  // u^1 sits off the t-lattice
    CHECK_THROWS_AS(descale(off), std::domain_error);
}

TEST_CASE("descale of monomial_frac at integral exponents") {
    for (long c = 0; c <= 6; ++c) {
        for (long scale : {1L, 2L, 4L}) {
            const auto m = descale(monomial_frac(BigRat(c), scale, 8));
            for (long k = 0; k <= 8; ++k) CHECK(m.coeff_t(k) == BigRat(k == c ? 1 : 0));
        }
    }
}

TEST_CASE("series_mul agrees with poly_mul below the order") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<BigRat> ca, cb;
        for (int k = 0; k < 5; ++k) ca.emplace_back(coeff(rng));
        for (int k = 0; k < 4; ++k) cb.emplace_back(coeff(rng));
        const Poly a(ca, Var::t), b(cb, Var::t);
        const Poly ab = poly_mul(a, b);
        const long order = 12;
        const auto sab = series_mul(ScaledSeries::from_poly(a, 1, order),
                                    ScaledSeries::from_poly(b, 1, order));
        CHECK(sab == ScaledSeries::from_poly(ab, 1, order));
    }
}

TEST_CASE("truncation drops nothing below the order") {
    const auto s = inv_one_minus_power(1, 2, 6);
    const auto t4 = s.truncated(4);
    CHECK(t4.order() == 4);
    for (long k = 0; k <= 4; ++k) CHECK(t4.coeff_t(k) == s.coeff_t(k));
}
