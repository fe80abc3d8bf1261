#include "kslope/destabilize.hpp"

#include "kslope/errors.hpp"
#include "kslope/linsolve.hpp"
#include "kslope/slope.hpp"

namespace kslope {

ClassVector DegenerationFamily::omega_at(const Rational& s) const {
    ClassVector w = (Rational(1) + s) * reference;
    for (std::size_t i = 0; i < components.size(); ++i) w += r[i] * components[i].cls;
    return w;
}

Rational arithmetic_genus(const Setup& s, const Divisor& d) {
    if (s.dimension != 2) fail(errc::not_a_surface, "adjunction genus is a surface quantity");
    ClassVector k_plus_d = s.canonical + d.total_class;
    return (intersect(s, {k_plus_d, d.total_class}) + Rational(2)) / Rational(2);
}

RpCriterion rp_criterion(const Setup& s, const Divisor& d) {
    RpCriterion c;
    c.value = Rational(2) * arithmetic_genus(s, d) - Rational(2) + intersect(s, {d.total_class, s.twist});
    c.holds = c.value.sign() > 0;
    return c;
}

DegenerationFamily degenerating_family(const Setup& s, const Divisor& d, const ClassVector& reference) {
    if (s.dimension != 2) fail(errc::not_a_surface, "degenerating families are built on surfaces");
    if (reference.size() != s.basis.size()) fail(errc::dimension_mismatch, "reference class has the wrong length");
    if (intersect(s, {reference, reference}).sign() <= 0)
        fail(errc::non_positive_volume, "reference class must have positive self-intersection");
    for (const ConeCurve& curve : s.curve_cone)
        if (intersect(s, {reference, curve.cls}).sign() <= 0)
            fail(errc::cone_violation, "reference class fails the declared check against " + curve.name);

    const std::size_t k = d.components.size();
    if (k == 0) fail(errc::degenerate_divisor, "divisor has no components");

    // Solve (D_i . D_j) r = -(H_ref . D_j) against the component Gram matrix;
    // negative definiteness is verified exactly along the way.
    Matrix gram(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            gram[i][j] = intersect(s, {d.components[i].cls, d.components[j].cls});
        rhs[i] = -intersect(s, {reference, d.components[i].cls});
    }
    std::vector<Rational> r = solve_negdef(gram, rhs);
    for (std::size_t i = 0; i < k; ++i)
        if (r[i].sign() <= 0)
            fail(errc::nonpositive_solution, "coefficient " + std::to_string(i) + " of the family is not positive");

    DegenerationFamily family{reference, std::move(r), d.components};

    // The limit class must pair to zero with every component, exactly.
    ClassVector omega0 = family.omega_at(Rational(0));
    for (std::size_t i = 0; i < k; ++i)
        if (!intersect(s, {omega0, d.components[i].cls}).is_zero())
            fail(errc::precondition, "internal: limit class does not annihilate the components");
    return family;
}

std::vector<Rational> default_schedule(int max_k) {
    if (max_k < 1) fail(errc::precondition, "schedule depth must be at least 1");
    std::vector<Rational> schedule;
    schedule.reserve(static_cast<std::size_t>(max_k));
    Rational s(1);
    for (int i = 1; i <= max_k; ++i) {
        s /= Rational(2);
        schedule.push_back(s);
    }
    return schedule;
}

std::optional<Witness> witness_search(const Setup& s, const Divisor& d, const ClassVector& reference,
                                      const std::vector<Rational>& schedule) {
    for (const DivisorComponent& comp : d.components)
        if (intersect(s, {d.total_class, comp.cls}).sign() > 0)
            fail(errc::assumption_violated, "a component pairs positively with the divisor");

    DegenerationFamily family = degenerating_family(s, d, reference);
    Rational lambda_bound = family.r[0] / Rational(family.components[0].multiplicity);
    for (std::size_t i = 1; i < family.r.size(); ++i) {
        Rational bound = family.r[i] / Rational(family.components[i].multiplicity);
        if (bound < lambda_bound) lambda_bound = bound;
    }

    for (const Rational& s_param : schedule) {
        if (s_param.sign() <= 0) fail(errc::precondition, "schedule entries must be positive");
        Setup degenerate = s.with_omega(family.omega_at(s_param));
        Verdict verdict = check_stability(degenerate, d, lambda_bound);
        if (verdict.status == StabilityStatus::Violated)
            return Witness{s_param, verdict.witness->where, verdict.witness->value, lambda_bound};
    }
    return std::nullopt;
}

std::optional<Witness> find_witness(const Setup& s, const Divisor& d, const ClassVector& reference,
                                    const std::vector<Rational>& schedule) {
    RpCriterion criterion = rp_criterion(s, d);
    if (!criterion.holds)
        fail(errc::criterion_not_met,
             "destabilization criterion 2 p_a - 2 + D.twist > 0 fails (value " + criterion.value.str() + ")");
    return witness_search(s, d, reference, schedule);
}

} // namespace kslope
