#pragma once

#include "kslope/destabilize.hpp"
#include "kslope/geometry.hpp"

#include <optional>
#include <string>

namespace kslope {

// A fibration over a declared base model: fibre data plus the pushforward
// classes kappa = c1(pi_* K_{X|B}) and ell = c1(pi_* L) in the base basis.
struct FibrationData {
    Setup base;
    long fibre_dimension = 1;
    Rational fibre_scalar; // S_b, the fibre average scalar curvature
    ClassVector pushforward_canonical;
    ClassVector pushforward_polarization;
};

// Average scalar curvature of a degree-d genus-h curve fibre: (2 - 2h)/d.
// Throws nonpositive_degree when d <= 0, precondition when h < 0.
Rational fibre_average_scalar(long genus, const Rational& degree);

// The adiabatic-limit twist class kappa + (S_b / (n_f + 1)) ell.
ClassVector adiabatic_twist(const FibrationData& f);

struct ObstructionResult {
    std::optional<Witness> witness;
    bool semipositivity_unverified = false; // set when D.[alpha] < 0
    Rational twist_pairing;                 // D.[alpha], exact
    Setup twisted_base;                     // base with the twist installed
};

// Installs the adiabatic twist into the base setup and delegates to the
// witness search. The D.[alpha] >= 0 check is a proxy for semipositivity of
// the twist; failure only raises the warning flag, it does not stop the run.
ObstructionResult adiabatic_obstruction(const FibrationData& f, const Divisor& d,
                                        const ClassVector& reference,
                                        const std::vector<Rational>& schedule = default_schedule());

enum class BundleStability {
    Unstable,
    StrictlySemistableEqual,
    StableForGivenData,
};

const char* to_string(BundleStability s);

// Mumford-slope comparison for the given bundle data. Both conventions are
// reported: the subbundle side (mu_sub > mu_total destabilizes) and the
// quotient side (mu_quotient < mu_total destabilizes); for corank one they
// agree, and no arbitration between them is made here.
struct BundleVerdict {
    BundleStability status = BundleStability::StableForGivenData;
    Rational mu_total, mu_sub, mu_quotient;
    bool sub_exceeds_total = false;
    bool quotient_below_total = false;
    std::optional<std::size_t> omitted_summand; // split form: index of the
                                                // summand left out of the
                                                // destabilizing subbundle
    std::string family;        // obstructed-family note, set when Unstable
    std::string seshadri_note; // ditto
};

// Split form: the best corank-one subbundle omits a minimal-degree summand,
// so Unstable <=> the degrees are not all equal. Sub/quotient form: requires
// sub_rank == total_rank - 1 (rank_mismatch otherwise).
BundleVerdict bundle_obstruction(const BundleData& data);

} // namespace kslope
