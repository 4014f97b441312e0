#include "kps/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kps {

namespace {

void require_same_scale(const ScaledSeries& a, const ScaledSeries& b) {
    if (a.scale() != b.scale())
        throw std::invalid_argument("series: scale mismatch");
}

std::vector<BigRat> zeros(long n) { return std::vector<BigRat>(static_cast<size_t>(n), BigRat(0)); }

}  // namespace

ScaledSeries::ScaledSeries(long scale, long order) : scale_(scale), order_(order) {
    if (scale < 1) throw std::invalid_argument("series: scale must be >= 1");
    if (order < 0) throw std::invalid_argument("series: order must be >= 0");
    c_.assign(static_cast<size_t>(order * scale) + 1, BigRat(0));
}

ScaledSeries::ScaledSeries(std::vector<BigRat> coeffs, long scale, long order)
    : ScaledSeries(scale, order) {
    const size_t n = std::min(coeffs.size(), c_.size());
    for (size_t i = 0; i < n; ++i) c_[i] = std::move(coeffs[i]);
}

ScaledSeries ScaledSeries::one(long scale, long order) {
    auto c = zeros(order * scale + 1);
    c[0] = BigRat(1);
    return ScaledSeries(std::move(c), scale, order);
}

ScaledSeries ScaledSeries::from_poly(const Poly& p, long scale, long order) {
    auto c = zeros(order * scale + 1);
    const long top = std::min<long>(p.degree(), order * scale);
    for (long k = 0; k <= top; ++k) c[static_cast<size_t>(k)] = p.coeff(k);
    return ScaledSeries(std::move(c), scale, order);
}

const BigRat& ScaledSeries::coeff_u(long uexp) const {
    if (uexp < 0 || uexp >= size())
        throw std::out_of_range("series: coefficient beyond truncation order");
    return c_[static_cast<size_t>(uexp)];
}

bool ScaledSeries::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool ScaledSeries::lives_in_t() const {
    for (long k = 0; k < size(); ++k)
        if (k % scale_ != 0 && !c_[static_cast<size_t>(k)].is_zero()) return false;
    return true;
}

ScaledSeries ScaledSeries::truncated(long new_order) const {
    if (new_order > order_)
        throw std::invalid_argument("series: cannot extend truncation order");
    auto c = zeros(new_order * scale_ + 1);
    for (size_t i = 0; i < c.size(); ++i) c[i] = c_[i];
    return ScaledSeries(std::move(c), scale_, new_order);
}

ScaledSeries ScaledSeries::operator-() const {
    auto c = zeros(size());
    for (long i = 0; i < size(); ++i) c[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
    return ScaledSeries(std::move(c), scale_, order_);
}

long ScaledSeries::first_mismatch(const ScaledSeries& other) const {
    const long n = std::min(size(), other.size());
    for (long k = 0; k < n; ++k)
        if (c_[static_cast<size_t>(k)] != other.c_[static_cast<size_t>(k)]) return k;
    return -1;
}

std::string ScaledSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (long k = 0; k < size(); ++k) {
        const BigRat& c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << c.str();
        if (k > 0) os << "*u^" << k;
        first = false;
    }
    if (first) os << "0";
    os << " + O(t^" << order_ + 1 << ")";
    return os.str();
}

ScaledSeries series_add(const ScaledSeries& a, const ScaledSeries& b) {
    require_same_scale(a, b);
    const long order = std::min(a.order(), b.order());
    auto c = zeros(order * a.scale() + 1);
    for (long k = 0; k < static_cast<long>(c.size()); ++k)
        c[static_cast<size_t>(k)] = a.coeff_u(k) + b.coeff_u(k);
    return ScaledSeries(std::move(c), a.scale(), order);
}

ScaledSeries series_sub(const ScaledSeries& a, const ScaledSeries& b) {
    require_same_scale(a, b);
    const long order = std::min(a.order(), b.order());
    auto c = zeros(order * a.scale() + 1);
    for (long k = 0; k < static_cast<long>(c.size()); ++k)
        c[static_cast<size_t>(k)] = a.coeff_u(k) - b.coeff_u(k);
    return ScaledSeries(std::move(c), a.scale(), order);
}

ScaledSeries series_mul(const ScaledSeries& a, const ScaledSeries& b) {
    require_same_scale(a, b);
    const long order = std::min(a.order(), b.order());
    const long top = order * a.scale();
    auto c = zeros(top + 1);
    const long na = std::min(a.size() - 1, top);
    for (long i = 0; i <= na; ++i) {
        const BigRat& ai = a.coeff_u(i);
        if (ai.is_zero()) continue;
        const long nb = std::min(b.size() - 1, top - i);
        for (long j = 0; j <= nb; ++j) {
            const BigRat& bj = b.coeff_u(j);
            if (bj.is_zero()) continue;
            c[static_cast<size_t>(i + j)] += ai * bj;
        }
    }
    return ScaledSeries(std::move(c), a.scale(), order);
}

ScaledSeries series_scale(const ScaledSeries& a, const BigRat& s) {
    auto c = zeros(a.size());
    for (long i = 0; i < a.size(); ++i) c[static_cast<size_t>(i)] = a.coeff_u(i) * s;
    return ScaledSeries(std::move(c), a.scale(), a.order());
}

ScaledSeries series_shift(const ScaledSeries& a, const BigRat& c_t_units) {
    const BigRat ue = c_t_units * BigRat(a.scale());
    if (!ue.is_integer() || ue.is_negative())
        throw std::invalid_argument("series_shift: exponent not representable at this scale");
    const long k = ue.to_long();
    auto c = zeros(a.size());
    for (long i = 0; i + k < a.size(); ++i) c[static_cast<size_t>(i + k)] = a.coeff_u(i);
    return ScaledSeries(std::move(c), a.scale(), a.order());
}

ScaledSeries inv_one_minus_power(long k, long scale, long order) {
    if (k <= 0) throw std::invalid_argument("inv_one_minus_power: k must be >= 1");
    auto c = zeros(order * scale + 1);
    for (long e = 0; e * k * scale < static_cast<long>(c.size()); ++e)
        c[static_cast<size_t>(e * k * scale)] = BigRat(1);
    return ScaledSeries(std::move(c), scale, order);
}

ScaledSeries binom_power(long j, long e, long scale, long order) {
    if (j <= 0) throw std::invalid_argument("binom_power: j must be >= 1");
    if (e < 0) throw std::invalid_argument("binom_power: e must be >= 0");
    auto bc = zeros(order * scale + 1);
    bc[0] = BigRat(1);
    if (j * scale < static_cast<long>(bc.size())) bc[static_cast<size_t>(j * scale)] = BigRat(1);
    ScaledSeries base(std::move(bc), scale, order);
    ScaledSeries result = ScaledSeries::one(scale, order);
    while (e > 0) {
        if (e & 1) result = series_mul(result, base);
        e >>= 1;
        if (e > 0) base = series_mul(base, base);
    }
    return result;
}

ScaledSeries monomial_frac(const BigRat& c, long scale, long order) {
    const BigRat ue = c * BigRat(scale);
    if (!ue.is_integer())
        throw std::invalid_argument(
            "monomial_frac: exponent " + c.str() + " not integral at scale " + std::to_string(scale));
    if (ue.is_negative())
        throw std::invalid_argument("monomial_frac: negative exponent");
    auto coeffs = zeros(order * scale + 1);
    const long k = ue.to_long();
    if (k < static_cast<long>(coeffs.size())) coeffs[static_cast<size_t>(k)] = BigRat(1);
    return ScaledSeries(std::move(coeffs), scale, order);
}

ScaledSeries descale(const ScaledSeries& s) {
    if (!s.lives_in_t())
        throw std::domain_error("descale: nonzero coefficient off the t-lattice");
    auto c = zeros(s.order() + 1);
    for (long k = 0; k <= s.order(); ++k) c[static_cast<size_t>(k)] = s.coeff_u(k * s.scale());
    return ScaledSeries(std::move(c), 1, s.order());
}

}  // namespace kps
