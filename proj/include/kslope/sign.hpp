#pragma once

#include "kslope/poly.hpp"

#include <optional>
#include <vector>

namespace kslope {

struct Interval {
    Rational lo, hi;

    bool is_point() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

enum class SignVerdict {
    StrictlyPositive,
    NonnegativeWithZeros,
    AttainsNegative,
};

const char* to_string(SignVerdict v);

// An interval whose midpoint evaluates to an exactly negative value.
struct NegativeWitness {
    Interval where;
    Rational value; // p(midpoint), exact, < 0
};

struct SignReport {
    SignVerdict verdict = SignVerdict::StrictlyPositive;
    std::vector<Interval> zeros; // disjoint isolating intervals, ascending;
                                 // lo == hi marks an exact rational root
    std::optional<NegativeWitness> negative_witness;
};

// Distinct real roots of p inside [domain.lo, domain.hi], isolated by Sturm
// sequences and refined by bisection to width <= domain.width() / 2^20.
// Exact rational roots come back as point intervals. p must be nonzero.
std::vector<Interval> isolate_roots(const Poly& p, const Interval& domain);

// Exact sign classification of p on the closed interval `domain`.
// The negative witness, when present, is the maximal gap between adjacent
// isolated roots (clipped to the domain) on which p is certified negative.
SignReport min_sign_on_interval(const Poly& p, const Interval& domain);

} // namespace kslope
