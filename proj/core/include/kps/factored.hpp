#pragma once

#include <map>
#include <vector>

#include "kps/rational_fn.hpp"

namespace kps {

/// Multiplicity map k -> e for a product prod_k (1 - t^k)^e.
using FactorMap = std::map<long, long>;

/// (1 + t^k)^e as a polynomial in t.
Poly one_plus_pow(long k, long e);
/// (1 - t^k)^e as a polynomial in t.
Poly one_minus_pow(long k, long e);
/// Expands a factor map into a polynomial.
Poly factor_map_poly(const FactorMap& m);
void merge_factors(FactorMap& into, const FactorMap& more);

/// One summand coeff * t^expo * num / prod (1-t^k)^e. The exponent may be a
/// non-integral rational; the sum is then assembled in the scaled variable u
/// with t = u^L for the minimal L clearing every exponent.
struct FactoredTerm {
    BigRat coeff{1};
    BigRat t_expo{0};
    Poly num{{1}, Var::t};
    FactorMap den;
};

/// Exact sum of the terms over a common denominator, fully reduced by
/// cyclotomic cancellation (the denominators' irreducible factors are all
/// cyclotomic, so the result is in lowest terms), then re-expressed in t.
/// Throws when the combined sum cannot be written with integral t-exponents.
RationalFn factored_sum(const std::vector<FactoredTerm>& terms);

}  // namespace kps
