#include "kslope/seshadri.hpp"

#include "kslope/errors.hpp"
#include "kslope/poly.hpp"

#include <algorithm>

namespace kslope {

namespace {

struct Candidate {
    std::string name;
    Rational lo, hi; // lo == hi for exact bounds
    bool is_volume = false;
};

// Shrinks [lo, hi] with v(lo) > 0 > v(hi) around the unique root inside.
void bisect_root(const Poly& v, Rational& lo, Rational& hi, const Rational& tol) {
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / Rational(2);
        int s = v(mid).sign();
        if (s == 0) {
            lo = mid;
            hi = mid;
            return;
        }
        if (s > 0)
            lo = mid;
        else
            hi = mid;
    }
}

} // namespace

std::optional<Enclosure> seshadri_enclosure(const Setup& s, const Divisor& d, const Rational& tol) {
    if (s.dimension != 2) fail(errc::not_a_surface, "Seshadri enclosures are implemented for surfaces");
    if (s.curve_cone.empty()) fail(errc::precondition, "declared curve cone is empty");
    if (tol.sign() <= 0) fail(errc::precondition, "tolerance must be positive");

    const ClassVector& D = d.total_class;
    std::vector<Candidate> candidates;

    // Linear constraints (Omega - x D).C > 0: bind exactly at (Omega.C)/(D.C)
    // when D.C > 0; a curve with D.C <= 0 never binds.
    for (const ConeCurve& curve : s.curve_cone) {
        Rational dc = intersect(s, {D, curve.cls});
        if (dc.sign() <= 0) continue;
        Rational bound = intersect(s, {s.omega, curve.cls}) / dc;
        candidates.push_back(Candidate{curve.name, bound, bound, false});
    }

    // Volume constraint v(x) = (Omega - x D)^2 = C0 - 2 B x + A x^2.
    const Rational A = intersect(s, {D, D});
    const Rational B = intersect(s, {s.omega, D});
    const Rational C0 = intersect(s, {s.omega, s.omega});
    if (C0.sign() <= 0) fail(errc::non_positive_volume, "omega^2 must be positive");
    const Poly v({C0, Rational(-2) * B, A});

    if (A.is_zero()) {
        if (B.sign() > 0) {
            Rational root = C0 / (Rational(2) * B);
            candidates.push_back(Candidate{"volume", root, root, true});
        }
        // B <= 0: v is nondecreasing from C0 > 0, never vanishes for x >= 0.
    } else if (A.sign() < 0) {
        // Roots have opposite signs; exactly one positive crossing.
        Rational lo(0), hi(1);
        while (v(hi).sign() >= 0) hi *= Rational(2);
        bisect_root(v, lo, hi, tol);
        candidates.push_back(Candidate{"volume", lo, hi, true});
    } else if (B.sign() > 0) {
        // Upward parabola with vertex at B/A > 0; crossings exist iff the
        // discriminant B^2 - A C0 is nonnegative, and the smaller root is
        // the relevant one.
        Rational disc = B * B - A * C0;
        if (disc.is_zero()) {
            Rational root = B / A;
            candidates.push_back(Candidate{"volume", root, root, true});
        } else if (disc.sign() > 0) {
            Rational lo(0), hi = B / A;
            bisect_root(v, lo, hi, tol);
            candidates.push_back(Candidate{"volume", lo, hi, true});
        }
    }
    // A > 0, B <= 0: v' = -2B + 2Ax >= 0 for x >= 0, v stays above C0 > 0.

    if (candidates.empty()) return std::nullopt;

    // The supremum is the smallest binding bound. Taking min over the lower
    // and upper ends separately keeps the width below tol: with j the
    // candidate of minimal lo, width <= hi_j - lo_j <= tol.
    Enclosure enc;
    enc.lo = candidates.front().lo;
    enc.hi = candidates.front().hi;
    const Candidate* binding = &candidates.front();
    for (const Candidate& c : candidates) {
        enc.lo = std::min(enc.lo, c.lo);
        if (c.hi < binding->hi || (c.hi == binding->hi && binding->is_volume && !c.is_volume)) binding = &c;
    }
    enc.hi = binding->hi;
    enc.binding_constraint = binding->name;

    // Soundness certificate: every declared check is nonnegative at enc.lo.
    for (const ConeCurve& curve : s.curve_cone) {
        Rational at_lo = intersect(s, {s.omega, curve.cls}) - enc.lo * intersect(s, {D, curve.cls});
        if (at_lo.sign() < 0) fail(errc::precondition, "internal: lower end fails a cone check");
    }
    if (v(enc.lo).sign() < 0) fail(errc::precondition, "internal: lower end fails the volume check");
    return enc;
}

Rational exceptional_lower_bound(const Setup& s, const Divisor& d, const std::vector<Rational>& r) {
    if (r.size() != d.components.size())
        fail(errc::precondition, "need one coefficient per divisor component");
    if (d.components.empty()) fail(errc::degenerate_divisor, "divisor has no components");

    std::optional<Rational> best;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const DivisorComponent& comp = d.components[i];
        Rational pairing = intersect(s, {d.total_class, comp.cls});
        if (pairing.sign() > 0)
            fail(errc::assumption_violated, "component " + std::to_string(i) + " pairs positively with the divisor");
        if (r[i].sign() <= 0)
            fail(errc::nonpositive_coefficient, "coefficient " + std::to_string(i) + " must be positive");
        Rational bound = r[i] / Rational(comp.multiplicity);
        if (!best || bound < *best) best = bound;
    }
    return *best;
}

} // namespace kslope
