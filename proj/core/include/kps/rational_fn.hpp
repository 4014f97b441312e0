#pragma once

#include <optional>
#include <string>
#include <utility>

#include "kps/poly.hpp"
#include "kps/series.hpp"

namespace kps {

/// Exact rational function num/den in one variable, at an explicit scale L
/// (the variable is u with t = u^L; scale 1 means the variable is t itself).
///
/// Canonical form: den nonzero, gcd(num, den) = 1, den scaled to integer
/// coefficients with content 1 and positive leading coefficient. Equality of
/// canonical representatives is syntactic; operator== nevertheless decides
/// equality by cross-multiplication so it never depends on normalization.
class RationalFn {
public:
    RationalFn(Poly num, Poly den, long scale = 1);

    static RationalFn from_poly(Poly p, long scale = 1);
    static RationalFn zero(long scale = 1);
    static RationalFn one(long scale = 1);
    /// Trusted constructor for callers that guarantee gcd(num, den) = 1;
    /// skips the gcd pass but still applies the sign/content convention.
    static RationalFn from_reduced(Poly num, Poly den, long scale);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    long scale() const { return scale_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator-() const;
    std::string str() const;

private:
    RationalFn() = default;
    void normalize_sign_and_content();

    Poly num_, den_;
    long scale_ = 1;
};

RationalFn rf_add(const RationalFn& a, const RationalFn& b);
RationalFn rf_sub(const RationalFn& a, const RationalFn& b);
RationalFn rf_mul(const RationalFn& a, const RationalFn& b);
RationalFn rf_div(const RationalFn& a, const RationalFn& b);
RationalFn rf_scale(const RationalFn& a, const BigRat& c);

inline RationalFn operator+(const RationalFn& a, const RationalFn& b) { return rf_add(a, b); }
inline RationalFn operator-(const RationalFn& a, const RationalFn& b) { return rf_sub(a, b); }
inline RationalFn operator*(const RationalFn& a, const RationalFn& b) { return rf_mul(a, b); }
inline RationalFn operator/(const RationalFn& a, const RationalFn& b) { return rf_div(a, b); }

/// Equality by cross-multiplication a.num*b.den = b.num*a.den.
bool operator==(const RationalFn& a, const RationalFn& b);
inline bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

/// Truncated power-series expansion by long division; requires den(0) != 0.
ScaledSeries rf_to_series(const RationalFn& f, long order);

/// Writes f(1/t) = t^e * g(t) with g free of monomial factors; returns (g, e).
std::pair<RationalFn, long> rf_reciprocal(const RationalFn& f);

/// True iff t^D * f(1/t) = f(t) exactly.
bool duality_check(const RationalFn& f, long d_exponent);

/// Exact limit of f at t = 1 across a removable singularity: divides num and
/// den by (1 - t) while both vanish at 1, then evaluates. Throws on a genuine
/// pole.
BigRat limit_at_one(const RationalFn& f);

/// The quotient polynomial when den divides num exactly; nullopt otherwise.
std::optional<Poly> rf_is_polynomial(const RationalFn& f);

/// Re-expresses a scale-L rational function in t (scale 1). Throws when the
/// reduced num or den has support off the t-lattice.
RationalFn rf_descale(const RationalFn& f);

}  // namespace kps
