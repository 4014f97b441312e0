#include "kps/factored.hpp"

#include <numeric>
#include <stdexcept>

namespace kps {

Poly one_plus_pow(long k, long e) {
    Poly base = poly_add(Poly({1}, Var::t), Poly::monomial(k, BigRat(1), Var::t));
    return poly_pow(base, e);
}

Poly one_minus_pow(long k, long e) {
    Poly base = poly_sub(Poly({1}, Var::t), Poly::monomial(k, BigRat(1), Var::t));
    return poly_pow(base, e);
}

Poly factor_map_poly(const FactorMap& m) {
    Poly out({1}, Var::t);
    for (const auto& [k, e] : m) out = poly_mul(out, one_minus_pow(k, e));
    return out;
}

void merge_factors(FactorMap& into, const FactorMap& more) {
    for (const auto& [k, e] : more) into[k] += e;
}

RationalFn factored_sum(const std::vector<FactoredTerm>& terms) {
    if (terms.empty()) return RationalFn::zero(1);

    long scale = 1;
    for (const auto& term : terms) {
        const mpz_class den = term.t_expo.denominator();
        if (!den.fits_slong_p())
            throw std::domain_error("factored_sum: exponent denominator too large");
        scale = std::lcm(scale, den.get_si());
    }

    FactorMap common;
    for (const auto& term : terms)
        for (const auto& [k, e] : term.den)
            common[k] = std::max(common[k], e);

    const Var var = scale == 1 ? Var::t : Var::u;
    auto to_scaled = [&](const Poly& q) {
        return scale == 1 ? q : q.inflated(scale).retagged(var);
    };

    Poly num_sum(var);
    for (const auto& term : terms) {
        Poly adjust({1}, Var::t);
        for (const auto& [k, e] : common) {
            auto it = term.den.find(k);
            const long have = it == term.den.end() ? 0 : it->second;
            if (e > have) adjust = poly_mul(adjust, one_minus_pow(k, e - have));
        }
        Poly num_t = poly_scale(poly_mul(term.num, adjust), term.coeff);
        const BigRat ue = term.t_expo * BigRat(scale);
        if (!ue.is_integer() || ue.is_negative())
            throw std::domain_error("factored_sum: exponent not integral at the working scale");
        num_sum = poly_add(num_sum, to_scaled(num_t).shifted(ue.to_long()));
    }

    // cyclotomic factorization of the common denominator, then maximal
    // cancellation; cyclotomics are irreducible over Q, so afterwards the
    // fraction is genuinely in lowest terms. Each (1 - u^k) is -(u^k - 1),
    // i.e. minus the product of the cyclotomics dividing k, so the rewrite
    // contributes a sign per denominator factor.
    std::map<long, long> cyc;
    long factor_count = 0;
    for (const auto& [k, e] : common) {
        factor_count += e;
        for (long m = 1; m <= k * scale; ++m)
            if ((k * scale) % m == 0) cyc[m] += e;
    }
    if (factor_count % 2 != 0) num_sum = -num_sum;
    if (!num_sum.is_zero()) {
        for (auto& [m, e] : cyc) {
            const Poly phi = cyclotomic(m, var);
            while (e > 0) {
                auto [q, rem] = poly_divrem(num_sum, phi);
                if (!rem.is_zero()) break;
                num_sum = std::move(q);
                --e;
            }
        }
    }
    Poly den_poly = Poly::constant(BigRat(1), var);
    for (const auto& [m, e] : cyc)
        if (e > 0) den_poly = poly_mul(den_poly, poly_pow(cyclotomic(m, var), e));

    RationalFn f = RationalFn::from_reduced(std::move(num_sum), std::move(den_poly), scale);
    return scale == 1 ? f : rf_descale(f);
}

}  // namespace kps
