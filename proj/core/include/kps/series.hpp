#pragma once

#include <string>
#include <vector>

#include "kps/poly.hpp"
#include "kps/rational.hpp"

namespace kps {

/// Truncated formal power series in t, stored in the scaled variable u with
/// t = u^L. Coefficients are indexed by u-exponent 0..N*L where N is the
/// truncation order in t-degrees. Truncation is a hard contract: every stored
/// coefficient is exact, and nothing beyond u-exponent N*L is represented.
class ScaledSeries {
public:
    ScaledSeries(long scale, long order);
    ScaledSeries(std::vector<BigRat> coeffs, long scale, long order);

    static ScaledSeries zero(long scale, long order) { return {scale, order}; }
    static ScaledSeries one(long scale, long order);
    static ScaledSeries from_poly(const Poly& p, long scale, long order);

    long scale() const { return scale_; }
    long order() const { return order_; }
    /// Number of stored coefficients, order()*scale() + 1.
    long size() const { return static_cast<long>(c_.size()); }

    const BigRat& coeff_u(long uexp) const;
    /// Coefficient of t^k; requires k*scale to be a stored exponent.
    const BigRat& coeff_t(long k) const { return coeff_u(k * scale_); }
    const std::vector<BigRat>& coeffs() const { return c_; }

    bool is_zero() const;
    /// True when every nonzero coefficient sits at a u-exponent divisible by
    /// the scale, i.e. the series lives in t.
    bool lives_in_t() const;

    ScaledSeries truncated(long new_order) const;
    ScaledSeries operator-() const;

    friend bool operator==(const ScaledSeries& a, const ScaledSeries& b) {
        return a.scale_ == b.scale_ && a.order_ == b.order_ && a.c_ == b.c_;
    }

    /// First t-degree (for scale 1) or u-exponent where the two series differ,
    /// comparing up to the smaller order. -1 when they agree.
    long first_mismatch(const ScaledSeries& other) const;

    std::string str() const;

private:
    std::vector<BigRat> c_;
    long scale_;
    long order_;
};

ScaledSeries series_add(const ScaledSeries& a, const ScaledSeries& b);
ScaledSeries series_sub(const ScaledSeries& a, const ScaledSeries& b);
/// Truncated convolution; requires equal scales, output order is the minimum
/// of the input orders.
ScaledSeries series_mul(const ScaledSeries& a, const ScaledSeries& b);
ScaledSeries series_scale(const ScaledSeries& a, const BigRat& c);
/// Multiplies by the monomial t^c, dropping coefficients past the order.
ScaledSeries series_shift(const ScaledSeries& a, const BigRat& c_t_units);

/// Geometric series 1/(1 - t^k) = 1 + t^k + t^{2k} + ... truncated at order N.
ScaledSeries inv_one_minus_power(long k, long scale, long order);
/// (1 + t^j)^e truncated at order N, by repeated squaring.
ScaledSeries binom_power(long j, long e, long scale, long order);
/// The single monomial t^c with c rational; c*scale must be a non-negative
/// integer, otherwise the chosen scale cannot represent the exponent.
ScaledSeries monomial_frac(const BigRat& c, long scale, long order);
/// Re-indexes a series whose support lies in t into scale 1. Throws if some
/// nonzero coefficient sits off the t-lattice (an algebra bug or wrong scale).
ScaledSeries descale(const ScaledSeries& s);

inline ScaledSeries operator+(const ScaledSeries& a, const ScaledSeries& b) { return series_add(a, b); }
inline ScaledSeries operator-(const ScaledSeries& a, const ScaledSeries& b) { return series_sub(a, b); }
inline ScaledSeries operator*(const ScaledSeries& a, const ScaledSeries& b) { return series_mul(a, b); }

}  // namespace kps
