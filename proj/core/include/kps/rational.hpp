#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kps {

/// Exact rational number backed by GMP.
/// Canonical form is maintained after every operation: denominator > 0 and
/// gcd(|numerator|, denominator) = 1.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}  // NOLINT: implicit by design, literals are handy
    BigRat(long num, long den) {
        if (den == 0) throw std::invalid_argument("BigRat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit BigRat(mpz_class n) : v_(std::move(n)) {}
    explicit BigRat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p/q" or "p". Throws on malformed input.
    static BigRat from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("BigRat: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("BigRat: zero denominator");
        q.canonicalize();
        return BigRat(std::move(q));
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Largest integer <= *this.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    /// Exact long value; throws if not an integer or out of range.
    long to_long() const {
        if (!is_integer()) throw std::domain_error("BigRat: not an integer");
        mpz_class n = numerator();
        if (!n.fits_slong_p()) throw std::domain_error("BigRat: integer out of long range");
        return n.get_si();
    }

    /// "p/q" for proper fractions, plain "p" for integers.
    std::string str() const {
        if (is_integer()) return numerator().get_str();
        return v_.get_str();
    }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }

    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

/// 2^e as an exact integer.
inline BigRat pow2(unsigned long e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
    return BigRat(std::move(z));
}

}  // namespace kps
