#include <doctest.h>

#include <random>

#include "kps/rational_fn.hpp"

using namespace kps;

namespace {

RationalFn rf(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RationalFn(Poly(num, Var::t), Poly(den, Var::t), 1);
}

BigRat eval_rf(const RationalFn& f, const BigRat& x) {
    return f.num().eval(x) / f.den().eval(x);
}

}  // namespace

TEST_CASE("field operations") {
    const auto a = rf({1, 2}, {1, 0, 3});
    CHECK(rf_add(a, RationalFn::zero(1)) == a);
    CHECK(rf_mul(a, rf_div(RationalFn::one(1), a)) == RationalFn::one(1));
    // 1/(1-t) + 1/(1+t) = 2/(1-t^2)
    CHECK(rf_add(rf({1}, {1, -1}), rf({1}, {1, 1})) == rf({2}, {1, 0, -1}));
    CHECK_THROWS_AS(rf_div(a, RationalFn::zero(1)), std::domain_error);
}

TEST_CASE("rf_to_series") {
    const auto geo = rf_to_series(rf({1}, {1, -1}), 3);
    for (long k = 0; k <= 3; ++k) CHECK(geo.coeff_t(k) == BigRat(1));

    const auto lin = rf_to_series(rf({1, 1}, {1}), 5);
    CHECK(lin.coeff_t(0) == BigRat(1));
    CHECK(lin.coeff_t(1) == BigRat(1));
    CHECK(lin.coeff_t(2) == BigRat(0));

    // (1+t)^4 / (1-t^2)^2 = 1 + 4t + 8t^2 + ..., cross-checked against the
    // series-ring product of the factors
    const Poly num4 = poly_pow(Poly({1, 1}, Var::t), 4);
    const Poly den22 = poly_pow(Poly({1, 0, -1}, Var::t), 2);
    const auto s = rf_to_series(RationalFn(num4, den22, 1), 2);
    CHECK(s.coeff_t(0) == BigRat(1));
    CHECK(s.coeff_t(1) == BigRat(4));
    CHECK(s.coeff_t(2) == BigRat(8));
    const auto oracle =
        series_mul(ScaledSeries::from_poly(num4, 1, 2),
                   series_mul(inv_one_minus_power(2, 1, 2), inv_one_minus_power(2, 1, 2)));
    CHECK(s == oracle);

    CHECK_THROWS_AS(rf_to_series(rf({1}, {0, 1}), 3), std::domain_error);
}

TEST_CASE("rf_to_series is multiplicative") {
    std::mt19937_64 rng(9001);
    std::uniform_int_distribution<long> coeff(-4, 4);
    auto random_rf = [&]() {
        std::vector<BigRat> n, d;
        for (int k = 0; k < 4; ++k) n.emplace_back(coeff(rng));
        d.emplace_back(1 + std::abs(coeff(rng)));
        for (int k = 0; k < 3; ++k) d.emplace_back(coeff(rng));
        return RationalFn(Poly(n, Var::t), Poly(d, Var::t), 1);
    };
    for (int iter = 0; iter < 30; ++iter) {
        const auto f = random_rf(), g = random_rf();
        const long order = 10;
        CHECK(rf_to_series(rf_mul(f, g), order) ==
              series_mul(rf_to_series(f, order), rf_to_series(g, order)));
    }
}

TEST_CASE("rf_reciprocal") {
    // f = 1/(1-t): f(1/t) = t/(t-1), i.e. e = 1 and g = 1/(t-1)
    auto [g1, e1] = rf_reciprocal(rf({1}, {1, -1}));
    CHECK(e1 == 1);
    CHECK(g1 == rf({1}, {-1, 1}));

    auto [g2, e2] = rf_reciprocal(rf({0, 0, 1}, {1}));
    CHECK(e2 == -2);
    CHECK(g2 == RationalFn::one(1));

    auto [g3, e3] = rf_reciprocal(rf({1, 1}, {1, -1}));
    CHECK(e3 == 0);
    CHECK(g3 == rf({1, 1}, {-1, 1}));

    CHECK_THROWS_AS(rf_reciprocal(RationalFn::zero(1)), std::domain_error);
}

TEST_CASE("rf_reciprocal evaluation identity at sample points") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<BigRat> n{BigRat(1 + std::abs(coeff(rng)))}, d{BigRat(1)};
        for (int k = 0; k < 3; ++k) n.emplace_back(coeff(rng));
        for (int k = 0; k < 3; ++k) d.emplace_back(coeff(rng));
        const RationalFn f(Poly(n, Var::t), Poly(d, Var::t), 1);
        auto [g, e] = rf_reciprocal(f);
        int checked = 0;
        for (long p = 2; checked < 5; ++p) {
            const BigRat x(p, 1);
            const BigRat inv_x(1, p);
            if (f.den().eval(inv_x).is_zero() || g.den().eval(x).is_zero()) continue;
            // f(1/x) = x^e g(x) with e possibly negative
            BigRat xe(1);
            for (long k = 0; k < std::abs(e); ++k) xe *= x;
            const BigRat lhs = eval_rf(f, inv_x);
            const BigRat rhs = e >= 0 ? eval_rf(g, x) * xe : eval_rf(g, x) / xe;
            CHECK(lhs == rhs);
            ++checked;
        }
    }
}

TEST_CASE("duality_check") {
    CHECK(duality_check(rf({1, 1}, {1}), 1));
    CHECK_FALSE(duality_check(rf({1, 0, 1}, {1}), 1));
    // (1+t)(1+t^3)^2 / (1+t^2) with dual degree 2^2(2-1)+1 = 5
    const Poly num = poly_mul(Poly({1, 1}, Var::t), poly_pow(Poly({1, 0, 0, 1}, Var::t), 2));
    CHECK(duality_check(RationalFn(num, Poly({1, 0, 1}, Var::t), 1), 5));
}

TEST_CASE("duality implies palindromic coefficients for polynomials") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int iter = 0; iter < 25; ++iter) {
        // build a palindromic polynomial of degree 7
        std::vector<BigRat> c(8, BigRat(0));
        for (int k = 0; k < 4; ++k) {
            c[static_cast<size_t>(k)] = BigRat(coeff(rng));
            c[static_cast<size_t>(7 - k)] = c[static_cast<size_t>(k)];
        }
        if (c[0].is_zero()) c[0] = c[7] = BigRat(1);
        const RationalFn f = RationalFn::from_poly(Poly(c, Var::t), 1);
        CHECK(duality_check(f, 7));
        const auto s = rf_to_series(f, 7);
        for (long k = 0; k <= 7; ++k) CHECK(s.coeff_t(k) == s.coeff_t(7 - k));
    }
}

TEST_CASE("limit_at_one") {
    CHECK(limit_at_one(rf({1, 0, -1}, {1, -1})) == BigRat(2));
    CHECK(limit_at_one(rf_mul(rf({1, -1}, {1}), rf({1, -1}, {1, -1}))) == BigRat(0));
    // (1 - t - t^2 + t^3)/(1-t)^2 = (1-t)^2 (1+t)/(1-t)^2 -> 2
    CHECK(limit_at_one(rf({1, -1, -1, 1}, {1, -2, 1})) == BigRat(2));
    CHECK_THROWS_AS(limit_at_one(rf({1}, {1, -1})), std::domain_error);
}

TEST_CASE("limit_at_one agrees with expansion around t = 1") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coeff(-5, 5);
    const Poly shift({1, -1}, Var::t);  // t -> 1 - s
    auto compose = [&](const Poly& p) {
        Poly acc(Var::t);
        for (long k = p.degree(); k >= 0; --k)
            acc = poly_add(poly_mul(acc, shift), Poly::constant(p.coeff(k), Var::t));
        return acc;
    };
    for (int iter = 0; iter < 25; ++iter) {
        // f = (1-t)^2 * n / ((1-t) * d) with d(1) != 0: removable at t = 1
        std::vector<BigRat> nc, dc;
        for (int k = 0; k < 3; ++k) nc.emplace_back(coeff(rng));
        dc.emplace_back(1 + std::abs(coeff(rng)));
        dc.emplace_back(coeff(rng));
        Poly n(nc, Var::t), d(dc, Var::t);
        if (n.is_zero()) n = Poly{1};
        if (!d.eval_at_one().is_zero()) {
            const Poly one_minus_t({1, -1}, Var::t);
            const RationalFn f(poly_mul(poly_pow(one_minus_t, 2), n), poly_mul(one_minus_t, d), 1);
            // substitute t = 1 - s and read the constant term
            const RationalFn in_s(compose(f.num()), compose(f.den()), 1);
            CHECK(limit_at_one(f) == rf_to_series(in_s, 0).coeff_t(0));
        }
    }
}

TEST_CASE("rf_is_polynomial") {
    auto p = rf_is_polynomial(rf({1, 0, -1}, {1, -1}));
    REQUIRE(p.has_value());
    CHECK(*p == Poly{1, 1});
    CHECK_FALSE(rf_is_polynomial(rf({1}, {1, -1})).has_value());
}

TEST_CASE("descale of a scaled rational function") {
    // u^2 / (1 - u^2) at scale 2 is t/(1-t)
    const RationalFn f(Poly({0, 0, 1}, Var::u), Poly({1, 0, -1}, Var::u), 2);
    const RationalFn d = rf_descale(f);
    CHECK(d.scale() == 1);
    CHECK(d == rf({0, 1}, {1, -1}));

    const RationalFn off(Poly({0, 1}, Var::u), Poly({1}, Var::u), 2);
    CHECK_THROWS_AS(rf_descale(off), std::domain_error);
}
