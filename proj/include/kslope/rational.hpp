#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace kslope {

// Arbitrary-precision rational number, always kept canonical: lowest terms,
// positive denominator, zero represented as 0/1. Backed by GMP.
//
// No operation on this type ever touches floating point; to_double() exists
// for diagnostics and test oracles only.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "p/q", and plain decimal strings ("-3.25"), all exact.
    // Returns nullopt on anything else (no exponents, no whitespace).
    static std::optional<Rational> parse(std::string_view text);

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    // fits_long/as_long: for multiplicities and other small integers.
    bool fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }
    long as_long() const { return v_.get_num().get_si(); }

    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// q^k for k >= 0.
Rational pow(const Rational& q, unsigned k);

// n! and C(n, k) as exact rationals (inputs are tiny: manifold dimensions).
Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

} // namespace kslope
