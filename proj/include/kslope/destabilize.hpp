#pragma once

#include "kslope/geometry.hpp"
#include "kslope/sign.hpp"

#include <optional>
#include <vector>

namespace kslope {

// Degenerating family of polarizations
//   Omega_s = (1 + s) H_ref + sum_i r_i D_i
// with r chosen so that the limit class Omega_0 pairs to zero with every
// component: (sum_i D_i.D_j r_i) = -H_ref.D_j, solved exactly against the
// negative-definite component Gram matrix.
struct DegenerationFamily {
    ClassVector reference;
    std::vector<Rational> r; // all > 0
    std::vector<DivisorComponent> components;

    ClassVector omega_at(const Rational& s) const;
};

struct RpCriterion {
    bool holds = false;
    Rational value; // 2 p_a(D) - 2 + D.[alpha]
};

// A certified destabilization: at parameter s the slope inequality fails on
// a whole sub-interval of (0, lambda_bound_used].
struct Witness {
    Rational s;
    Interval lambda_interval;
    Rational f_value; // exact f_alpha at lambda_interval.midpoint(), < 0
    Rational lambda_bound_used;
};

// Adjunction genus: 2 p_a - 2 = (K + D).D. Surfaces only.
Rational arithmetic_genus(const Setup& s, const Divisor& d);

// The destabilization criterion 2 p_a(D) - 2 + D.[alpha] > 0.
RpCriterion rp_criterion(const Setup& s, const Divisor& d);

// Throws not_a_surface / cone_violation (reference fails the declared
// checks) / not_negative_definite / nonpositive_solution. The returned
// family satisfies omega_at(0).D_j == 0 exactly (verified).
DegenerationFamily degenerating_family(const Setup& s, const Divisor& d, const ClassVector& reference);

// s = 2^-1, ..., 2^-max_k, descending.
std::vector<Rational> default_schedule(int max_k = 20);

// Searches the schedule (largest s first) for a parameter whose slope
// polynomial attains a negative value on (0, min_i r_i/m_i]. Gated on
// rp_criterion (throws criterion_not_met when it fails). Requires
// D.D_i <= 0 for all components. nullopt = exhausted, nothing found.
std::optional<Witness> find_witness(const Setup& s, const Divisor& d, const ClassVector& reference,
                                    const std::vector<Rational>& schedule = default_schedule());

// Same search without the criterion gate (diagnostics / negative controls).
std::optional<Witness> witness_search(const Setup& s, const Divisor& d, const ClassVector& reference,
                                      const std::vector<Rational>& schedule = default_schedule());

} // namespace kslope
