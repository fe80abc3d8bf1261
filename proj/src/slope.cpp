#include "kslope/slope.hpp"

#include "kslope/errors.hpp"

namespace kslope {

const char* to_string(StabilityStatus s) {
    switch (s) {
    case StabilityStatus::SatisfiedOnInterval: return "satisfied_on_interval";
    case StabilityStatus::SemistableBoundary: return "semistable_boundary";
    case StabilityStatus::Violated: return "violated";
    }
    return "?";
}

namespace {

struct PairingTable {
    int n;
    std::vector<Rational> a; // a[k] = Omega^{n-k} . D^k,             k = 0..n
    std::vector<Rational> b; // b[k] = (c1 - alpha) . Omega^{n-1-k} . D^k, k = 0..n-1
};

PairingTable pairings(const Setup& s, const Divisor& d) {
    const int n = s.dimension;
    if (n < 1) fail(errc::precondition, "dimension must be at least 1");
    PairingTable t;
    t.n = n;
    t.a.resize(static_cast<std::size_t>(n) + 1);
    t.b.resize(static_cast<std::size_t>(n));
    // c1 - alpha = -K - alpha
    ClassVector c1_minus_alpha = Rational(-1) * s.canonical - s.twist;
    for (int k = 0; k <= n; ++k) t.a[static_cast<std::size_t>(k)] = intersect_pow(s, s.omega, n - k, d.total_class, k);
    for (int k = 0; k <= n - 1; ++k)
        t.b[static_cast<std::size_t>(k)] =
            intersect_pow(s, s.omega, n - 1 - k, d.total_class, k, &c1_minus_alpha);
    if (t.a[0].sign() <= 0) fail(errc::non_positive_volume, "omega^n must be positive");
    return t;
}

} // namespace

SlopeData slope_data(const Setup& s, const Divisor& d) {
    PairingTable t = pairings(s, d);
    const int n = t.n;

    SlopeData sd;
    // alpha1(x) = (Omega - x D)^n / n! = sum_k C(n,k) (-1)^k a_k x^k / n!
    {
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        Rational nfact = factorial(static_cast<unsigned>(n));
        for (int k = 0; k <= n; ++k) {
            Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            c[static_cast<std::size_t>(k)] =
                sign * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * t.a[static_cast<std::size_t>(k)] / nfact;
        }
        sd.alpha1 = Poly(std::move(c));
    }
    // alpha2(x) = (c1 - alpha).(Omega - x D)^{n-1} / (2 (n-1)!)
    {
        std::vector<Rational> c(static_cast<std::size_t>(n));
        Rational scale = Rational(2) * factorial(static_cast<unsigned>(n - 1));
        for (int k = 0; k <= n - 1; ++k) {
            Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            c[static_cast<std::size_t>(k)] =
                sign * binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k)) * t.b[static_cast<std::size_t>(k)] / scale;
        }
        sd.alpha2 = Poly(std::move(c));
    }

    sd.s_hat = Rational(n) * t.b[0] / t.a[0];

    // num = lambda alpha2(0) - int_0^lambda alpha2 + (alpha1(0) - alpha1(lambda)) / 2
    sd.num = Poly::monomial(1, sd.alpha2.coeff(0)) - sd.alpha2.antiderivative() +
             Rational(1, 2) * (Poly::constant(sd.alpha1.coeff(0)) - sd.alpha1);
    // den = lambda alpha1(0) - int_0^lambda alpha1
    sd.den = Poly::monomial(1, sd.alpha1.coeff(0)) - sd.alpha1.antiderivative();
    // f_alpha = num - (s_hat / 2) den
    sd.f_alpha = sd.num - (sd.s_hat / Rational(2)) * sd.den;
    return sd;
}

Rational f_alpha_at(const Setup& s, const Divisor& d, const Rational& lambda) {
    return slope_data(s, d).f_alpha(lambda);
}

Rational mu_lambda(const Setup& s, const Divisor& d, const Rational& lambda) {
    if (lambda.sign() <= 0) fail(errc::precondition, "mu_lambda needs lambda > 0");
    SlopeData sd = slope_data(s, d);
    Rational den_value = sd.den(lambda);
    if (den_value.sign() <= 0) fail(errc::nonpositive_denominator, "den(lambda) must be positive");
    return sd.num(lambda) / den_value;
}

EnergyPieces energy_pieces(const Setup& s, const Divisor& d) {
    PairingTable t = pairings(s, d);
    const int n = t.n;

    EnergyPieces ep;
    {
        // f_I = sum_{p=1..n} (-1)^{p+1} lambda^{p+1} a_p / (2 (p+1)! (n-p)!)
        std::vector<Rational> c(static_cast<std::size_t>(n) + 2);
        for (int p = 1; p <= n; ++p) {
            Rational sign = (p % 2 == 1) ? Rational(1) : Rational(-1);
            c[static_cast<std::size_t>(p) + 1] =
                sign * t.a[static_cast<std::size_t>(p)] /
                (Rational(2) * factorial(static_cast<unsigned>(p + 1)) * factorial(static_cast<unsigned>(n - p)));
        }
        ep.f_I = Poly(std::move(c));
    }
    {
        // f_J = sum_{p=1..n-1} (-1)^{p+1} lambda^{p+1} (alpha - c1).Omega^{n-1-p}.D^p / (2 (p+1)! (n-1-p)!)
        // and (alpha - c1) pairings are the negatives of the b table.
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        for (int p = 1; p <= n - 1; ++p) {
            Rational sign = (p % 2 == 1) ? Rational(1) : Rational(-1);
            c[static_cast<std::size_t>(p) + 1] =
                sign * (-t.b[static_cast<std::size_t>(p)]) /
                (Rational(2) * factorial(static_cast<unsigned>(p + 1)) * factorial(static_cast<unsigned>(n - 1 - p)));
        }
        ep.f_J = Poly(std::move(c));
    }
    {
        // f_log = sum_{p=1..n} (-1)^{p-1} lambda^p a_p / (p! (n-p)!)
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        for (int p = 1; p <= n; ++p) {
            Rational sign = (p % 2 == 1) ? Rational(1) : Rational(-1);
            c[static_cast<std::size_t>(p)] =
                sign * t.a[static_cast<std::size_t>(p)] /
                (factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(n - p)));
        }
        ep.f_log = Poly(std::move(c));
    }
    return ep;
}

AuditReport audit_printed(const Setup& s, const Divisor& d) {
    SlopeData sd = slope_data(s, d);
    EnergyPieces ep = energy_pieces(s, d);

    AuditReport report;
    report.canonical_f = sd.f_alpha;
    // printed_f = int_0^lambda (lambda - x) alpha2 dx + (lambda/2) alpha1(0)
    //           - (s_hat/2) int_0^lambda (lambda - x) alpha1 dx
    Poly first = sd.alpha2.linear_weight_integral() + Poly::monomial(1, sd.alpha1.coeff(0) / Rational(2));
    Poly second = sd.alpha1.linear_weight_integral();
    report.printed_f = first - (sd.s_hat / Rational(2)) * second;
    report.identity1_residual = first - (ep.f_log + ep.f_J);
    report.identity2_residual = second + Rational(2) * ep.f_I;
    return report;
}

Verdict check_stability(const Setup& s, const Divisor& d, const Rational& lambda_max) {
    if (lambda_max.sign() <= 0) fail(errc::precondition, "lambda_max must be positive");
    SlopeData sd = slope_data(s, d);

    Verdict v;
    v.lambda_max = lambda_max;
    SignReport report = min_sign_on_interval(sd.f_alpha, Interval{Rational(0), lambda_max});
    v.zeros = report.zeros;
    switch (report.verdict) {
    case SignVerdict::AttainsNegative:
        v.status = StabilityStatus::Violated;
        v.witness = report.negative_witness;
        break;
    case SignVerdict::NonnegativeWithZeros: {
        // A zero only at lambda = 0 still counts as satisfied on (0, lambda_max].
        bool zero_beyond_origin = false;
        for (const Interval& z : v.zeros)
            if (!(z.is_point() && z.lo.is_zero())) zero_beyond_origin = true;
        v.status = zero_beyond_origin ? StabilityStatus::SemistableBoundary : StabilityStatus::SatisfiedOnInterval;
        break;
    }
    case SignVerdict::StrictlyPositive:
        v.status = StabilityStatus::SatisfiedOnInterval;
        break;
    }

    // den(0) = 0 and den'(lambda) = int_0^lambda D.(Omega - x D)^{n-1} dx / (n-1)!.
    // A nonnegative, not identically zero integrand therefore has positive
    // integral for every lambda > 0, which certifies den > 0 on (0, lambda_max].
    {
        const int n = s.dimension;
        std::vector<Rational> g(static_cast<std::size_t>(n));
        for (int k = 0; k <= n - 1; ++k) {
            Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            g[static_cast<std::size_t>(k)] = sign * binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k)) *
                                             intersect_pow(s, s.omega, n - 1 - k, d.total_class, k + 1);
        }
        Poly integrand(std::move(g));
        SignReport den_report = min_sign_on_interval(integrand, Interval{Rational(0), lambda_max});
        v.den_positive_on_range =
            !integrand.is_zero() && den_report.verdict != SignVerdict::AttainsNegative;
    }
    return v;
}

} // namespace kslope
