#include "kps/poly.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kps {

namespace {

const BigRat kZero{0};

void require_same_var(const Poly& a, const Poly& b) {
    if (a.var() != b.var())
        throw std::invalid_argument("poly: variable tag mismatch (t vs u)");
}

}  // namespace

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const BigRat& c, Var v) {
    if (c.is_zero()) return Poly(v);
    return Poly(std::vector<BigRat>{c}, v);
}

Poly Poly::monomial(long exp, const BigRat& coeff, Var v) {
    if (exp < 0) throw std::invalid_argument("poly: negative monomial exponent");
    if (coeff.is_zero()) return Poly(v);
    std::vector<BigRat> c(static_cast<size_t>(exp) + 1, BigRat(0));
    c.back() = coeff;
    return Poly(std::move(c), v);
}

const BigRat& Poly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const BigRat& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRat Poly::eval_at_one() const {
    BigRat acc(0);
    for (const auto& c : c_) acc += c;
    return acc;
}

Poly Poly::shifted(long k) const {
    if (k < 0) throw std::invalid_argument("poly: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<BigRat> c(static_cast<size_t>(k), BigRat(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c), var_);
}

Poly Poly::reversed() const {
    std::vector<BigRat> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c), var_);
}

Poly Poly::inflated(long m) const {
    if (m <= 0) throw std::invalid_argument("poly: inflation factor must be positive");
    if (m == 1 || is_zero()) return *this;
    std::vector<BigRat> c(static_cast<size_t>(degree() * m) + 1, BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i * static_cast<size_t>(m)] = c_[i];
    return Poly(std::move(c), var_);
}

Poly Poly::operator-() const {
    std::vector<BigRat> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return Poly(std::move(c), var_);
}

std::string Poly::str(const std::string& sym) const {
    if (is_zero()) return "0";
    const std::string x = sym.empty() ? (var_ == Var::t ? "t" : "u") : sym;
    std::ostringstream os;
    bool first = true;
    for (long k = 0; k <= degree(); ++k) {
        const BigRat& c = coeff(k);
        if (c.is_zero()) continue;
        BigRat a = c;
        if (first) {
            if (a.is_negative()) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.is_negative() ? " - " : " + ");
            if (a.is_negative()) a = -a;
        }
        if (k == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << x;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Poly poly_add(const Poly& a, const Poly& b) {
    require_same_var(a, b);
    std::vector<BigRat> c(std::max(a.coeffs().size(), b.coeffs().size()), BigRat(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
    return Poly(std::move(c), a.var());
}

Poly poly_sub(const Poly& a, const Poly& b) {
    require_same_var(a, b);
    std::vector<BigRat> c(std::max(a.coeffs().size(), b.coeffs().size()), BigRat(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
    return Poly(std::move(c), a.var());
}

Poly poly_mul(const Poly& a, const Poly& b) {
    require_same_var(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.var());
    std::vector<BigRat> c(a.coeffs().size() + b.coeffs().size() - 1, BigRat(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) {
            if (b.coeffs()[j].is_zero()) continue;
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return Poly(std::move(c), a.var());
}

Poly poly_scale(const Poly& a, const BigRat& s) {
    if (s.is_zero()) return Poly(a.var());
    std::vector<BigRat> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(x * s);
    return Poly(std::move(c), a.var());
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    require_same_var(a, b);
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(a.var()), a};
    std::vector<BigRat> rem = a.coeffs();
    std::vector<BigRat> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, BigRat(0));
    const BigRat& lead = b.leading();
    for (long k = a.degree(); k >= b.degree(); --k) {
        BigRat& top = rem[static_cast<size_t>(k)];
        if (top.is_zero()) continue;
        BigRat q = top / lead;
        quo[static_cast<size_t>(k - b.degree())] = q;
        for (long j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(k - b.degree() + j)] -= q * b.coeff(j);
    }
    return {Poly(std::move(quo), a.var()), Poly(std::move(rem), a.var())};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("poly_divexact: nonzero remainder");
    return q;
}

bool poly_divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) return a.is_zero();
    return poly_divrem(a, b).second.is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_var(a, b);
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("poly_gcd: both inputs are zero");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    // monic normalization, deterministic across runs
    return poly_scale(x, BigRat(1) / x.leading());
}

Poly poly_pow(const Poly& base, long e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    Poly result = Poly::constant(BigRat(1), base.var());
    Poly sq = base;
    while (e > 0) {
        if (e & 1) result = poly_mul(result, sq);
        e >>= 1;
        if (e > 0) sq = poly_mul(sq, sq);
    }
    return result;
}

Poly cyclotomic(long n, Var v) {
    if (n <= 0) throw std::invalid_argument("cyclotomic: index must be positive");
    static std::map<long, std::vector<BigRat>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return Poly(it->second, v);
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<BigRat> c(static_cast<size_t>(n) + 1, BigRat(0));
    c[0] = BigRat(-1);
    c.back() = BigRat(1);
    Poly num(std::move(c), v);
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_divexact(num, cyclotomic(d, v));
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(n, num.coeffs());
    }
    return num;
}

}  // namespace kps
