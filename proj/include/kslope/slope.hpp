#pragma once

#include "kslope/geometry.hpp"
#include "kslope/poly.hpp"
#include "kslope/sign.hpp"

#include <optional>
#include <vector>

namespace kslope {

// Slope polynomials for a pair (setup, divisor), all exact.
//
// With a_k = Omega^{n-k}.D^k and b_k = (c1 - alpha).Omega^{n-1-k}.D^k:
//   alpha1(x) = (Omega - x D)^n / n!
//   alpha2(x) = (c1 - alpha).(Omega - x D)^{n-1} / (2 (n-1)!)
//   s_hat     = n (c1 - alpha).Omega^{n-1} / Omega^n
//   num       = lambda alpha2(0) - int_0^lambda alpha2 + (alpha1(0) - alpha1(lambda)) / 2
//   den       = lambda alpha1(0) - int_0^lambda alpha1
//   f_alpha   = num - (s_hat / 2) den
// Semistability on (0, L] is the statement f_alpha >= 0 there; equivalently
// num/den >= s_hat/2 wherever den > 0.
struct SlopeData {
    Poly alpha1, alpha2; // in the degeneration variable x
    Rational s_hat;
    Poly num, den, f_alpha; // in lambda
};

// The three exact energy-expansion coefficients (polynomials in lambda):
//   f_I   = sum_{p=1..n}   (-1)^{p+1} lambda^{p+1} a_p / (2 (p+1)! (n-p)!)
//   f_J   = sum_{p=1..n-1} (-1)^{p+1} lambda^{p+1} (alpha - c1).Omega^{n-1-p}.D^p / (2 (p+1)! (n-1-p)!)
//   f_log = sum_{p=1..n}   (-1)^{p-1} lambda^p a_p / (p! (n-p)!)
// Exact identities (tested): den == 2 f_I and num == f_log / 2 - f_J.
struct EnergyPieces {
    Poly f_I, f_J, f_log;
};

enum class StabilityStatus {
    SatisfiedOnInterval, // f_alpha > 0 on (0, lambda_max]
    SemistableBoundary,  // f_alpha >= 0 with a zero in (0, lambda_max]
    Violated,            // f_alpha attains a negative value
};

const char* to_string(StabilityStatus s);

struct Verdict {
    StabilityStatus status = StabilityStatus::SatisfiedOnInterval;
    std::optional<NegativeWitness> witness; // set iff Violated
    Rational lambda_max;
    std::vector<Interval> zeros;       // all zeros of f_alpha in [0, lambda_max];
                                       // the mandatory zero at 0 is always listed
    bool den_positive_on_range = false; // exact check that D.(Omega - x D)^{n-1} is
                                        // nonnegative and not identically zero on
                                        // [0, lambda_max]; certifies den > 0 on
                                        // (0, lambda_max]
};

// Side-by-side audit of a historically printed variant of f_alpha. The
// printed packaging
//   printed_f = int_0^lambda (lambda - x) alpha2 + (lambda/2) alpha1(0)
//             - (s_hat/2) int_0^lambda (lambda - x) alpha1
// is NOT equal to the canonical one; verdicts never use it. The residuals
// record how far the printed identities
//   int (lambda-x) alpha2 + (lambda/2) alpha1(0) == f_log + f_J      (1)
//   int (lambda-x) alpha1 == -2 f_I                                  (2)
// are from holding (identically zero would mean they hold).
struct AuditReport {
    Poly printed_f;
    Poly canonical_f;
    Poly identity1_residual;
    Poly identity2_residual;
};

SlopeData slope_data(const Setup& s, const Divisor& d);
Rational f_alpha_at(const Setup& s, const Divisor& d, const Rational& lambda);
// num(lambda)/den(lambda); requires lambda > 0 and den(lambda) > 0.
Rational mu_lambda(const Setup& s, const Divisor& d, const Rational& lambda);
EnergyPieces energy_pieces(const Setup& s, const Divisor& d);
AuditReport audit_printed(const Setup& s, const Divisor& d);

// Exact sign classification of f_alpha on [0, lambda_max] (lambda_max > 0).
// The zero at lambda = 0 never counts against SatisfiedOnInterval.
Verdict check_stability(const Setup& s, const Divisor& d, const Rational& lambda_max);

} // namespace kslope
