#include <doctest.h>

#include <random>

#include "kps/poly.hpp"

using namespace kps;

namespace {

Poly random_poly(std::mt19937_64& rng, long max_deg) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<BigRat> c;
    const long d = deg(rng);
    for (long k = 0; k <= d; ++k) c.emplace_back(num(rng), den(rng));
    return Poly(std::move(c), Var::t);
}

}  // namespace

TEST_CASE("poly_add identities") {
    const Poly one_plus_t{1, 1};
    CHECK(poly_add(one_plus_t, Poly::zero()) == one_plus_t);
    CHECK(poly_add(one_plus_t, Poly{-1, -1}).is_zero());
    CHECK(poly_add(one_plus_t, Poly{1, -1}) == Poly{2});
}

TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(Poly{1, 1}, Poly{1, -1}) == Poly{1, 0, -1});
    const Poly p{3, 0, 2, 7};
    CHECK(poly_mul(p, Poly{1}) == p);
    CHECK(poly_mul(Poly{1, 1}, Poly{1, 1}) == Poly{1, 2, 1});
    CHECK(poly_mul(Poly{1, 1}, Poly{1, -1}).degree() == 2);
}

TEST_CASE("variable tag mismatch is rejected") {
    const Poly a({1, 1}, Var::t);
    const Poly b({1, 1}, Var::u);
    CHECK_THROWS_AS(poly_add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(poly_mul(a, b), std::invalid_argument);
}

TEST_CASE("poly_divrem examples") {
    auto [q1, r1] = poly_divrem(Poly{1, 0, -1}, Poly{1, -1});
    CHECK(q1 == Poly{1, 1});
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divrem(Poly{0, 1}, Poly{1, 1});
    CHECK(q2 == Poly{1});
    CHECK(r2 == Poly{-1});

    auto [q3, r3] = poly_divrem(Poly::zero(), Poly{1, 1});
    CHECK(q3.is_zero());
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(poly_divrem(Poly{1}, Poly::zero()), std::domain_error);
}

TEST_CASE("poly_gcd examples, monic convention") {
    // gcd(1 - t^2, 1 - t) is the monic associate t - 1
    CHECK(poly_gcd(Poly{1, 0, -1}, Poly{1, -1}) == Poly{-1, 1});
    // gcd(p, 0) = monic(p)
    CHECK(poly_gcd(Poly{2, 2}, Poly::zero()) == Poly{1, 1});
    // coprime pair
    CHECK(poly_gcd(Poly{1, 1}, Poly{1, -1}) == Poly{1});
    CHECK_THROWS_AS(poly_gcd(Poly::zero(), Poly::zero()), std::domain_error);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 60; ++iter) {
        const Poly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
        CHECK(poly_add(a, b) == poly_add(b, a));
    }
}

TEST_CASE("divrem recomposition and gcd divisibility on random pairs") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 60; ++iter) {
        const Poly a = random_poly(rng, 8);
        Poly b = random_poly(rng, 5);
        if (b.is_zero()) b = Poly{1, 2};
        auto [q, r] = poly_divrem(a, b);
        CHECK(poly_add(poly_mul(q, b), r) == a);
        CHECK(r.degree() < b.degree());
        if (!a.is_zero()) {
            const Poly g = poly_gcd(a, b);
            CHECK(poly_divrem(a, g).second.is_zero());
            CHECK(poly_divrem(b, g).second.is_zero());
            CHECK(g.leading() == BigRat(1));
        }
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1, Var::t) == Poly{-1, 1});
    CHECK(cyclotomic(2, Var::t) == Poly{1, 1});
    CHECK(cyclotomic(4, Var::t) == Poly{1, 0, 1});
    CHECK(cyclotomic(6, Var::t) == Poly{1, -1, 1});
    // product over divisors of 12 recovers t^12 - 1
    Poly prod({1}, Var::t);
    for (long m : {1, 2, 3, 4, 6, 12}) prod = poly_mul(prod, cyclotomic(m, Var::t));
    Poly expect = poly_sub(Poly::monomial(12, BigRat(1), Var::t), Poly({1}, Var::t));
    CHECK(prod == expect);
}
