#include "kslope/poly.hpp"

#include "kslope/errors.hpp"

#include <algorithm>
#include <sstream>

namespace kslope {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int degree, Rational coeff) {
    if (degree < 0) fail(errc::precondition, "monomial degree must be nonnegative");
    if (coeff.is_zero()) return Poly();
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const {
    if (c_.empty()) fail(errc::precondition, "leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly r = p;
    for (auto& x : r.c_) x *= c;
    r.trim();
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return Poly(std::move(c));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<Rational> c(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) c[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
    return Poly(std::move(c));
}

Poly Poly::linear_weight_integral() const {
    if (c_.empty()) return Poly();
    std::vector<Rational> c(c_.size() + 2);
    for (std::size_t k = 0; k < c_.size(); ++k)
        c[k + 2] = c_[k] / Rational(static_cast<long>((k + 1) * (k + 2)));
    return Poly(std::move(c));
}

Poly Poly::scaled_argument(const Rational& c) const {
    Poly r = *this;
    Rational p(1);
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
        r.c_[k] *= p;
        p *= c;
    }
    r.trim();
    return r;
}

Poly Poly::shifted_argument(const Rational& s) const {
    // p(x + s) by Horner on coefficients: fold from the top, multiplying by (x + s).
    Poly shift({s, Rational(1)});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * shift + Poly::constant(*it);
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag == Rational(1) && k > 0;
        if (!unit) os << mag.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Rational poly_cumulative(const Poly& p, const Rational& lambda) {
    Poly anti = p.antiderivative();
    return anti(lambda);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(errc::precondition, "polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational factor = rem.leading() / lead;
        q[static_cast<std::size_t>(shift)] = factor;
        rem = rem - Poly::monomial(shift, factor) * b;
    }
    return {Poly(std::move(q)), rem};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.leading()) * a; // monic
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return p;
    Poly g = poly_gcd(p, p.derivative());
    return divmod(p, g).first;
}

} // namespace kslope
