#pragma once

#include "kslope/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kslope {

// Coordinates of a (1,1)-class in the declared basis.
struct ClassVector {
    std::vector<Rational> coords;

    ClassVector() = default;
    explicit ClassVector(std::vector<Rational> c) : coords(std::move(c)) {}
    static ClassVector zero(std::size_t n) { return ClassVector(std::vector<Rational>(n)); }

    std::size_t size() const { return coords.size(); }
    bool is_zero() const;

    ClassVector& operator+=(const ClassVector& o);
    ClassVector& operator-=(const ClassVector& o);
    friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
    friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
    friend ClassVector operator*(const Rational& c, const ClassVector& v);
    friend bool operator==(const ClassVector& a, const ClassVector& b) { return a.coords == b.coords; }
};

// Symmetric n-multilinear intersection form, stored by its values on basis
// monomials. Keys are sorted index multisets of size n; unlisted monomials
// are zero.
struct IntersectionForm {
    int dimension = 0;
    std::map<std::vector<int>, Rational> values;

    Rational value(std::vector<int> key) const; // sorts its argument
    void set(std::vector<int> key, Rational v);

    friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;
};

struct DivisorComponent {
    ClassVector cls;
    long multiplicity = 1;

    friend bool operator==(const DivisorComponent&, const DivisorComponent&) = default;
};

// Effective divisor: a total class plus its weighted components.
// Invariant (enforced by validate): total_class == sum multiplicity_i * cls_i,
// every multiplicity >= 1, at least one component.
struct Divisor {
    std::string name;
    ClassVector total_class;
    std::vector<DivisorComponent> components;

    friend bool operator==(const Divisor&, const Divisor&) = default;
};

struct ConeCurve {
    std::string name;
    ClassVector cls;

    friend bool operator==(const ConeCurve&, const ConeCurve&) = default;
};

// Optional document section describing a fibration over the surface model:
// fibre data for the average-scalar computation plus the two pushforward
// classes entering the adiabatic twist.
struct FibrationSection {
    long fibre_dimension = 1;
    std::optional<Rational> fibre_scalar; // S_b, given directly
    std::optional<long> fibre_genus;      // or derived from (genus, degree)
    std::optional<Rational> fibre_degree;
    ClassVector pushforward_canonical;    // kappa
    ClassVector pushforward_polarization; // ell

    friend bool operator==(const FibrationSection&, const FibrationSection&) = default;
};

// Optional document section for Mumford-slope checks on a projective bundle.
// Split form: degrees of rank-one summands (rank == degrees.size()).
// Sub/quotient form (degrees empty): slope data for a corank-one subbundle.
struct BundleData {
    std::vector<Rational> degrees;
    Rational sub_degree;
    long sub_rank = 0;
    Rational total_degree;
    long total_rank = 0;

    bool is_split() const { return !degrees.empty(); }

    friend bool operator==(const BundleData&, const BundleData&) = default;
};

// A complete intersection-theoretic model: basis, form, distinguished
// classes, declared divisors and (on surfaces) a finite curve cone.
struct Setup {
    std::string name;
    int dimension = 0;
    std::vector<std::string> basis;
    IntersectionForm form;
    ClassVector omega;     // Kahler (polarization) class
    ClassVector canonical; // K; c1 = -K
    ClassVector twist;     // [alpha]
    std::vector<Divisor> divisors;
    std::vector<ConeCurve> curve_cone;
    std::optional<FibrationSection> fibration;
    std::optional<BundleData> bundle;

    const Divisor* find_divisor(const std::string& divisor_name) const;
    Setup with_omega(ClassVector w) const;
    Setup with_twist(ClassVector t) const;

    friend bool operator==(const Setup&, const Setup&) = default;
};

// Exact multilinear evaluation of the form on exactly n classes.
Rational intersect(const Setup& s, const std::vector<ClassVector>& classes);

// Convenience: a^ka . b^kb . (c optional), ka + kb + (c ? 1 : 0) == n.
Rational intersect_pow(const Setup& s, const ClassVector& a, int ka, const ClassVector& b, int kb,
                       const ClassVector* c = nullptr);

// Structural and positivity checks: dimensions consistent, omega^n > 0,
// omega . C > 0 for every declared cone curve (n == 2 only), divisor totals
// match their weighted components. Throws kslope::error.
void validate(const Setup& s);

} // namespace kslope
