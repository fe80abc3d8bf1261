#include "kslope/fibration.hpp"

#include "kslope/errors.hpp"

namespace kslope {

const char* to_string(BundleStability s) {
    switch (s) {
    case BundleStability::Unstable: return "unstable";
    case BundleStability::StrictlySemistableEqual: return "strictly_semistable_equal";
    case BundleStability::StableForGivenData: return "stable_for_given_data";
    }
    return "?";
}

Rational fibre_average_scalar(long genus, const Rational& degree) {
    if (genus < 0) fail(errc::precondition, "fibre genus must be nonnegative");
    if (degree.sign() <= 0) fail(errc::nonpositive_degree, "fibre degree must be positive");
    return Rational(2 - 2 * genus) / degree;
}

ClassVector adiabatic_twist(const FibrationData& f) {
    if (f.fibre_dimension < 1) fail(errc::precondition, "fibre dimension must be at least 1");
    Rational weight = f.fibre_scalar / Rational(f.fibre_dimension + 1);
    return f.pushforward_canonical + weight * f.pushforward_polarization;
}

ObstructionResult adiabatic_obstruction(const FibrationData& f, const Divisor& d, const ClassVector& reference,
                                        const std::vector<Rational>& schedule) {
    ObstructionResult result;
    ClassVector twist = adiabatic_twist(f);
    result.twist_pairing = intersect(f.base, {d.total_class, twist});
    // Nonnegative pairing with the divisor is the cheap proxy for
    // semipositivity of the twist; a failure is reported, not fatal.
    result.semipositivity_unverified = result.twist_pairing.sign() < 0;
    result.twisted_base = f.base.with_twist(f.base.twist + twist);
    result.witness = witness_search(result.twisted_base, d, reference, schedule);
    return result;
}

BundleVerdict bundle_obstruction(const BundleData& data) {
    BundleVerdict v;
    if (data.is_split()) {
        const std::size_t k = data.degrees.size();
        Rational total(0);
        for (const Rational& deg : data.degrees) total += deg;
        v.mu_total = total / Rational(static_cast<long>(k));
        if (data.total_rank != 0 && data.total_rank != static_cast<long>(k))
            fail(errc::rank_mismatch, "total_rank disagrees with the number of summands");
        if (k == 1) {
            // A line bundle has no proper subbundle; nothing can destabilize.
            v.mu_sub = v.mu_total;
            v.mu_quotient = v.mu_total;
            v.status = BundleStability::StableForGivenData;
            return v;
        }
        // The strongest corank-one subbundle omits a summand of minimal
        // degree; the omitted summand is the quotient.
        std::size_t omit = 0;
        for (std::size_t i = 1; i < k; ++i)
            if (data.degrees[i] < data.degrees[omit]) omit = i;
        v.omitted_summand = omit;
        v.mu_sub = (total - data.degrees[omit]) / Rational(static_cast<long>(k - 1));
        v.mu_quotient = data.degrees[omit];
    } else {
        if (data.total_rank < 2) fail(errc::rank_mismatch, "total rank must be at least 2");
        if (data.sub_rank != data.total_rank - 1)
            fail(errc::rank_mismatch, "subbundle data must have corank one");
        v.mu_total = data.total_degree / Rational(data.total_rank);
        v.mu_sub = data.sub_degree / Rational(data.sub_rank);
        v.mu_quotient = data.total_degree - data.sub_degree;
    }

    v.sub_exceeds_total = v.mu_sub > v.mu_total;
    v.quotient_below_total = v.mu_quotient < v.mu_total;
    if (v.sub_exceeds_total) {
        v.status = BundleStability::Unstable;
        v.family = "the fibrewise Fubini-Study family degenerates toward the corank-one "
                   "subbundle of larger slope; its projectivization is the obstructing divisor";
        v.seshadri_note = "the section class of the destabilizing subbundle caps the Seshadri-type "
                          "bound of the obstructing divisor along the fibres";
    } else if (v.mu_sub == v.mu_total) {
        v.status = BundleStability::StrictlySemistableEqual;
    } else {
        v.status = BundleStability::StableForGivenData;
    }
    return v;
}

} // namespace kslope
