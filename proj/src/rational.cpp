#include "kslope/rational.hpp"

#include "kslope/errors.hpp"

#include <cctype>
#include <ostream>

namespace kslope {

Rational::Rational(long num, long den) {
    if (den == 0) fail(errc::malformed_rational, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(errc::malformed_rational, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    auto scan_digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out.push_back(text[i++]);
        return i > start;
    };

    std::string integer_part;
    if (!scan_digits(integer_part)) return std::nullopt;

    mpq_class value;
    if (i == text.size()) {
        value = mpq_class(mpz_class(integer_part, 10));
    } else if (text[i] == '/') {
        ++i;
        std::string den_part;
        if (!scan_digits(den_part) || i != text.size()) return std::nullopt;
        mpz_class den(den_part, 10);
        if (den == 0) return std::nullopt;
        value = mpq_class(mpz_class(integer_part, 10), den);
    } else if (text[i] == '.') {
        ++i;
        std::string frac_part;
        if (!scan_digits(frac_part) || i != text.size()) return std::nullopt;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        mpz_class num = mpz_class(integer_part, 10) * scale + mpz_class(frac_part, 10);
        value = mpq_class(num, scale);
    } else {
        return std::nullopt;
    }
    if (negative) value = -value;
    return Rational(std::move(value));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational pow(const Rational& q, unsigned k) {
    Rational result(1);
    Rational base = q;
    while (k > 0) {
        if (k & 1u) result *= base;
        base *= base;
        k >>= 1u;
    }
    return result;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

} // namespace kslope
