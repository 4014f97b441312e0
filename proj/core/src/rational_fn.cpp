#include "kps/rational_fn.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace kps {

namespace {

void require_same_scale(const RationalFn& a, const RationalFn& b) {
    if (a.scale() != b.scale())
        throw std::invalid_argument("rational_fn: scale mismatch");
}

Var var_for_scale(long scale) { return scale == 1 ? Var::t : Var::u; }

/// Divides p by (1 - x); requires p(1) = 0. If p = (1-x) q then the
/// coefficients of q are the prefix sums q_k = p_0 + ... + p_k.
Poly divide_by_one_minus_x(const Poly& p) {
    if (p.is_zero()) return p;
    std::vector<BigRat> q(static_cast<size_t>(p.degree()), BigRat(0));
    BigRat acc(0);
    for (long k = 0; k < p.degree(); ++k) {
        acc += p.coeff(k);
        q[static_cast<size_t>(k)] = acc;
    }
    assert((acc + p.coeff(p.degree())).is_zero());
    return Poly(std::move(q), p.var());
}

}  // namespace

RationalFn::RationalFn(Poly num, Poly den, long scale)
    : num_(std::move(num)), den_(std::move(den)), scale_(scale) {
    if (scale_ < 1) throw std::invalid_argument("rational_fn: scale must be >= 1");
    if (den_.is_zero()) throw std::domain_error("rational_fn: zero denominator");
    if (num_.var() != den_.var())
        throw std::invalid_argument("rational_fn: num/den variable tag mismatch");
    if (!num_.is_zero()) {
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
    }
    normalize_sign_and_content();
}

RationalFn RationalFn::from_reduced(Poly num, Poly den, long scale) {
    if (den.is_zero()) throw std::domain_error("rational_fn: zero denominator");
    RationalFn f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    f.scale_ = scale;
    f.normalize_sign_and_content();
    return f;
}

void RationalFn::normalize_sign_and_content() {
    if (num_.is_zero()) {
        den_ = Poly::constant(BigRat(1), den_.var());
        return;
    }
    // scale both sides so den has integer coefficients, content 1 and a
    // positive leading coefficient; the same factor multiplies num
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& c : den_.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        den_lcm = l;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        num_gcd = g;
    }
    BigRat sigma(mpq_class(den_lcm, num_gcd));
    if (den_.leading().is_negative()) sigma = -sigma;
    num_ = poly_scale(num_, sigma);
    den_ = poly_scale(den_, sigma);
}

RationalFn RationalFn::from_poly(Poly p, long scale) {
    const Var v = p.var();
    return from_reduced(std::move(p), Poly::constant(BigRat(1), v), scale);
}

RationalFn RationalFn::zero(long scale) {
    const Var v = var_for_scale(scale);
    return from_reduced(Poly(v), Poly::constant(BigRat(1), v), scale);
}

RationalFn RationalFn::one(long scale) {
    const Var v = var_for_scale(scale);
    return from_reduced(Poly::constant(BigRat(1), v), Poly::constant(BigRat(1), v), scale);
}

RationalFn RationalFn::operator-() const {
    return from_reduced(-num_, den_, scale_);
}

std::string RationalFn::str() const {
    std::ostringstream os;
    os << "(" << num_.str() << ") / (" << den_.str() << ")";
    return os.str();
}

RationalFn rf_add(const RationalFn& a, const RationalFn& b) {
    require_same_scale(a, b);
    return RationalFn(a.num() * b.den() + b.num() * a.den(), a.den() * b.den(), a.scale());
}

RationalFn rf_sub(const RationalFn& a, const RationalFn& b) {
    require_same_scale(a, b);
    return RationalFn(a.num() * b.den() - b.num() * a.den(), a.den() * b.den(), a.scale());
}

RationalFn rf_mul(const RationalFn& a, const RationalFn& b) {
    require_same_scale(a, b);
    return RationalFn(a.num() * b.num(), a.den() * b.den(), a.scale());
}

RationalFn rf_div(const RationalFn& a, const RationalFn& b) {
    require_same_scale(a, b);
    if (b.is_zero()) throw std::domain_error("rf_div: division by zero");
    return RationalFn(a.num() * b.den(), a.den() * b.num(), a.scale());
}

RationalFn rf_scale(const RationalFn& a, const BigRat& c) {
    return RationalFn(poly_scale(a.num(), c), a.den(), a.scale());
}

bool operator==(const RationalFn& a, const RationalFn& b) {
    if (a.scale() != b.scale()) return false;
    return a.num() * b.den() == b.num() * a.den();
}

ScaledSeries rf_to_series(const RationalFn& f, long order) {
    if (f.den().coeff(0).is_zero())
        throw std::domain_error("rf_to_series: pole at the origin");
    const long top = order * f.scale();
    std::vector<BigRat> c(static_cast<size_t>(top) + 1, BigRat(0));
    const BigRat inv0 = BigRat(1) / f.den().coeff(0);
    for (long k = 0; k <= top; ++k) {
        BigRat acc = f.num().coeff(k);
        const long jmax = std::min<long>(k, f.den().degree());
        for (long j = 1; j <= jmax; ++j) {
            const BigRat& dj = f.den().coeff(j);
            if (dj.is_zero()) continue;
            acc -= dj * c[static_cast<size_t>(k - j)];
        }
        c[static_cast<size_t>(k)] = acc * inv0;
    }
    return ScaledSeries(std::move(c), f.scale(), order);
}

std::pair<RationalFn, long> rf_reciprocal(const RationalFn& f) {
    if (f.is_zero()) throw std::domain_error("rf_reciprocal: zero input");
    // f(1/x) = x^{deg den - deg num} * rev(num)(x) / rev(den)(x); the
    // reversals have nonzero constant terms, so g carries no monomial factor.
    const long e = f.den().degree() - f.num().degree();
    RationalFn g = RationalFn::from_reduced(f.num().reversed(), f.den().reversed(), f.scale());
    return {std::move(g), e};
}

bool duality_check(const RationalFn& f, long d_exponent) {
    if (f.is_zero()) return false;
    auto [g, e] = rf_reciprocal(f);
    // t^D f(1/t) = f  <=>  t^{D+e} g.num * f.den = f.num * g.den
    const long shift = d_exponent * f.scale() + e;
    Poly lhs = g.num() * f.den();
    Poly rhs = f.num() * g.den();
    if (shift >= 0)
        lhs = lhs.shifted(shift);
    else
        rhs = rhs.shifted(-shift);
    return lhs == rhs;
}

BigRat limit_at_one(const RationalFn& f) {
    Poly num = f.num(), den = f.den();
    while (!num.is_zero() && num.eval_at_one().is_zero() && den.eval_at_one().is_zero()) {
        num = divide_by_one_minus_x(num);
        den = divide_by_one_minus_x(den);
    }
    const BigRat dv = den.eval_at_one();
    if (dv.is_zero()) {
        if (num.is_zero()) return BigRat(0);
        throw std::domain_error("limit_at_one: genuine pole at t = 1");
    }
    return num.eval_at_one() / dv;
}

std::optional<Poly> rf_is_polynomial(const RationalFn& f) {
    auto [q, r] = poly_divrem(f.num(), f.den());
    if (!r.is_zero()) return std::nullopt;
    return q;
}

RationalFn rf_descale(const RationalFn& f) {
    if (f.scale() == 1) return f;
    const long ell = f.scale();
    auto compress = [ell](const Poly& p) {
        std::vector<BigRat> c(static_cast<size_t>(p.degree() / ell) + 1, BigRat(0));
        for (long k = 0; k <= p.degree(); ++k) {
            if (p.coeff(k).is_zero()) continue;
            if (k % ell != 0)
                throw std::domain_error("rf_descale: support off the t-lattice");
            c[static_cast<size_t>(k / ell)] = p.coeff(k);
        }
        return Poly(std::move(c), Var::t);
    };
    return RationalFn::from_reduced(compress(f.num()), compress(f.den()), 1);
}

}  // namespace kps
