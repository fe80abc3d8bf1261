#include "kslope/geometry.hpp"

#include "kslope/errors.hpp"

#include <algorithm>

namespace kslope {

bool ClassVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c.is_zero(); });
}

ClassVector& ClassVector::operator+=(const ClassVector& o) {
    if (coords.size() != o.coords.size()) fail(errc::dimension_mismatch, "class vectors of different length");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& o) {
    if (coords.size() != o.coords.size()) fail(errc::dimension_mismatch, "class vectors of different length");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

ClassVector operator*(const Rational& c, const ClassVector& v) {
    ClassVector r = v;
    for (auto& x : r.coords) x *= c;
    return r;
}

Rational IntersectionForm::value(std::vector<int> key) const {
    std::sort(key.begin(), key.end());
    auto it = values.find(key);
    return it == values.end() ? Rational(0) : it->second;
}

void IntersectionForm::set(std::vector<int> key, Rational v) {
    std::sort(key.begin(), key.end());
    values[std::move(key)] = std::move(v);
}

const Divisor* Setup::find_divisor(const std::string& divisor_name) const {
    for (const Divisor& d : divisors)
        if (d.name == divisor_name) return &d;
    return nullptr;
}

Setup Setup::with_omega(ClassVector w) const {
    Setup r = *this;
    r.omega = std::move(w);
    return r;
}

Setup Setup::with_twist(ClassVector t) const {
    Setup r = *this;
    r.twist = std::move(t);
    return r;
}

Rational intersect(const Setup& s, const std::vector<ClassVector>& classes) {
    if (static_cast<int>(classes.size()) != s.dimension)
        fail(errc::dimension_mismatch, "intersection number needs exactly dimension-many classes");
    const std::size_t m = s.basis.size();
    for (const ClassVector& c : classes)
        if (c.size() != m) fail(errc::dimension_mismatch, "class vector length does not match the basis");

    Rational total(0);
    std::vector<int> idx(static_cast<std::size_t>(s.dimension));
    auto expand = [&](auto&& self, std::size_t pos, const Rational& acc) -> void {
        if (pos == idx.size()) {
            Rational v = s.form.value(idx);
            if (!v.is_zero()) total += acc * v;
            return;
        }
        for (std::size_t i = 0; i < m; ++i) {
            const Rational& c = classes[pos].coords[i];
            if (c.is_zero()) continue;
            idx[pos] = static_cast<int>(i);
            self(self, pos + 1, acc * c);
        }
    };
    expand(expand, 0, Rational(1));
    return total;
}

Rational intersect_pow(const Setup& s, const ClassVector& a, int ka, const ClassVector& b, int kb,
                       const ClassVector* c) {
    if (ka < 0 || kb < 0) fail(errc::precondition, "negative exponent");
    if (ka + kb + (c ? 1 : 0) != s.dimension)
        fail(errc::dimension_mismatch, "exponents must add up to the dimension");
    std::vector<ClassVector> classes;
    classes.reserve(static_cast<std::size_t>(s.dimension));
    for (int i = 0; i < ka; ++i) classes.push_back(a);
    for (int i = 0; i < kb; ++i) classes.push_back(b);
    if (c) classes.push_back(*c);
    return intersect(s, classes);
}

void validate(const Setup& s) {
    if (s.dimension < 1) fail(errc::malformed_document, "dimension must be at least 1");
    if (s.basis.empty()) fail(errc::malformed_document, "basis must be nonempty");
    const std::size_t m = s.basis.size();

    auto check_class = [&](const ClassVector& v, const char* what) {
        if (v.size() != m) fail(errc::dimension_mismatch, std::string(what) + " has the wrong length");
    };
    check_class(s.omega, "omega");
    check_class(s.canonical, "canonical class");
    check_class(s.twist, "twist class");

    if (s.form.dimension != s.dimension)
        fail(errc::dimension_mismatch, "form dimension does not match the setup dimension");
    for (const auto& [key, value] : s.form.values) {
        if (static_cast<int>(key.size()) != s.dimension)
            fail(errc::dimension_mismatch, "form monomial of the wrong arity");
        for (int i : key)
            if (i < 0 || i >= static_cast<int>(m))
                fail(errc::dimension_mismatch, "form monomial index out of range");
        if (!std::is_sorted(key.begin(), key.end()))
            fail(errc::malformed_document, "form monomial indices must be sorted");
    }

    std::vector<ClassVector> omegas(static_cast<std::size_t>(s.dimension), s.omega);
    if (intersect(s, omegas).sign() <= 0)
        fail(errc::non_positive_volume, "omega^n must be positive");

    if (s.dimension == 2) {
        for (const ConeCurve& curve : s.curve_cone) {
            check_class(curve.cls, "cone curve");
            if (intersect(s, {s.omega, curve.cls}).sign() <= 0)
                fail(errc::cone_violation, "omega . " + curve.name + " must be positive");
        }
    }

    for (const Divisor& d : s.divisors) {
        check_class(d.total_class, "divisor total class");
        if (d.components.empty())
            fail(errc::degenerate_divisor, "divisor " + d.name + " has no components");
        ClassVector sum = ClassVector::zero(m);
        for (const DivisorComponent& comp : d.components) {
            check_class(comp.cls, "divisor component");
            if (comp.multiplicity < 1)
                fail(errc::degenerate_divisor, "divisor " + d.name + " has a component of multiplicity < 1");
            sum += Rational(comp.multiplicity) * comp.cls;
        }
        if (!(sum == d.total_class))
            fail(errc::degenerate_divisor,
                 "divisor " + d.name + " total class does not match its weighted components");
    }
}

} // namespace kslope
