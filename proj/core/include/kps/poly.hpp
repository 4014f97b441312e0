#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kps/rational.hpp"

namespace kps {

/// Formal variable a polynomial lives in. `t` is the Poincare-series
/// variable; `u` is the internal scaled variable with t = u^L.
enum class Var { t, u };

/// Dense univariate polynomial with exact rational coefficients.
/// Invariant: the highest-index stored coefficient is nonzero (the zero
/// polynomial stores an empty coefficient vector and has degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(Var v) : var_(v) {}
    Poly(std::vector<BigRat> coeffs, Var v = Var::t) : c_(std::move(coeffs)), var_(v) {
        trim();
    }
    Poly(std::initializer_list<long> coeffs, Var v = Var::t) : var_(v) {
        c_.reserve(coeffs.size());
        for (long x : coeffs) c_.emplace_back(x);
        trim();
    }

    static Poly zero(Var v = Var::t) { return Poly(v); }
    static Poly constant(const BigRat& c, Var v = Var::t);
    static Poly monomial(long exp, const BigRat& coeff, Var v = Var::t);

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigRat>& coeffs() const { return c_; }
    /// Coefficient of x^k (zero beyond the degree).
    const BigRat& coeff(long k) const;
    const BigRat& leading() const;

    BigRat eval(const BigRat& x) const;
    /// Sum of all coefficients, i.e. eval(1).
    BigRat eval_at_one() const;

    /// Same coefficients under the other variable tag.
    Poly retagged(Var v) const { return Poly(c_, v); }
    /// Multiplies by x^k.
    Poly shifted(long k) const;
    /// Coefficient reversal: x^deg * p(1/x).
    Poly reversed() const;
    /// Inflates exponents k -> k*m (substitutes x -> x^m), keeping the tag.
    Poly inflated(long m) const;

    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }

    std::string str(const std::string& sym = "") const;

private:
    void trim();

    std::vector<BigRat> c_;
    Var var_ = Var::t;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const BigRat& c);
/// Quotient and remainder with deg r < deg b. Throws on zero divisor.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
/// Exact quotient; throws if the remainder is nonzero.
Poly poly_divexact(const Poly& a, const Poly& b);
bool poly_divides(const Poly& b, const Poly& a);
/// Monic gcd via the Euclidean algorithm. Throws if both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& base, long e);

inline Poly operator+(const Poly& a, const Poly& b) { return poly_add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return poly_sub(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

/// n-th cyclotomic polynomial (monic, integer coefficients).
Poly cyclotomic(long n, Var v = Var::u);

}  // namespace kps
