#pragma once

#include "kslope/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kslope {

// Certified two-sided enclosure of the Seshadri-type supremum
//   eps(D, Omega) = sup { x >= 0 : (Omega - x D)^2 > 0 on the component of 0,
//                                  (Omega - x D).C > 0 for all declared C }.
// lo == hi when the binding bound is an exact rational.
struct Enclosure {
    Rational lo, hi;
    std::string binding_constraint; // curve name, or "volume"
};

// Surfaces only (not_a_surface otherwise); requires a nonempty declared
// curve cone (precondition). Returns nullopt when no declared constraint
// ever binds (the supremum is unbounded in the model). Enclosure width is
// at most tol; Omega - lo.D passes every declared check with >= 0, which
// together with strict positivity at 0 certifies strictness on [0, lo).
std::optional<Enclosure> seshadri_enclosure(const Setup& s, const Divisor& d,
                                            const Rational& tol = Rational(1, 1024));

// Lemma-style lower bound min_i r_i / m_i for a class of the form
// (positive part) + sum_i r_i D_i, valid when D.D_i <= 0 for every
// component. Throws assumption_violated / nonpositive_coefficient.
Rational exceptional_lower_bound(const Setup& s, const Divisor& d, const std::vector<Rational>& r);

} // namespace kslope
