#pragma once

#include "kslope/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace kslope {

// Univariate polynomial over Q. Coefficients are stored lowest degree first
// with no trailing zeros; the zero polynomial has an empty coefficient list.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Rational c) { return Poly({std::move(c)}); }
    static Poly monomial(int degree, Rational coeff);
    static Poly variable() { return monomial(1, Rational(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational leading() const;

    Rational operator()(const Rational& x) const; // Horner, exact

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    Poly antiderivative() const; // constant term 0

    // lambda |-> integral over [0, lambda] of (lambda - x) * p(x) dx,
    // i.e. sum over k of c_k * lambda^{k+2} / ((k+1)(k+2)).
    Poly linear_weight_integral() const;

    Poly scaled_argument(const Rational& c) const;  // x |-> p(c x)
    Poly shifted_argument(const Rational& s) const; // x |-> p(x + s)

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Exact integral of p over [0, lambda].
Rational poly_cumulative(const Poly& p, const Rational& lambda);

// Division with remainder over Q; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd (Euclid); gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// p divided by gcd(p, p'): same distinct roots, all simple.
Poly squarefree_part(const Poly& p);

} // namespace kslope
