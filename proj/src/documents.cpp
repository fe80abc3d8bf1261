#include "kslope/documents.hpp"

#include "kslope/errors.hpp"

namespace kslope {

using nlohmann::json;

json rational_json(const Rational& q) {
    if (q.is_integer() && q.numerator().fits_slong_p())
        return json(static_cast<std::int64_t>(q.numerator().get_si()));
    return json(q.str());
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) {
        // dump() of a JSON integer is its exact decimal representation.
        return Rational(mpq_class(mpz_class(j.dump(), 10)));
    }
    if (j.is_string()) {
        if (auto r = Rational::parse(j.get<std::string>())) return *r;
        fail(errc::malformed_rational, "cannot parse rational \"" + j.get<std::string>() + "\"");
    }
    if (j.is_number_float())
        fail(errc::malformed_rational, "decimal literals must be quoted strings to stay exact: " + j.dump());
    fail(errc::malformed_rational, "expected an integer or a rational string, got " + j.dump());
}

json class_json(const ClassVector& v) {
    json arr = json::array();
    for (const Rational& c : v.coords) arr.push_back(rational_json(c));
    return arr;
}

json poly_json(const Poly& p) {
    json arr = json::array();
    for (const Rational& c : p.coefficients()) arr.push_back(rational_json(c));
    return arr;
}

json interval_json(const Interval& iv) {
    json j;
    j["lo"] = rational_json(iv.lo);
    j["hi"] = rational_json(iv.hi);
    return j;
}

json slope_data_json(const SlopeData& sd) {
    json j;
    j["alpha1"] = poly_json(sd.alpha1);
    j["alpha2"] = poly_json(sd.alpha2);
    j["s_hat"] = rational_json(sd.s_hat);
    j["num"] = poly_json(sd.num);
    j["den"] = poly_json(sd.den);
    j["f_alpha"] = poly_json(sd.f_alpha);
    return j;
}

json energy_pieces_json(const EnergyPieces& ep) {
    json j;
    j["f_I"] = poly_json(ep.f_I);
    j["f_J"] = poly_json(ep.f_J);
    j["f_log"] = poly_json(ep.f_log);
    return j;
}

json verdict_json(const Verdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["lambda_max"] = rational_json(v.lambda_max);
    j["den_positive_on_range"] = v.den_positive_on_range;
    json zeros = json::array();
    for (const Interval& z : v.zeros) zeros.push_back(interval_json(z));
    j["zeros"] = zeros;
    if (v.witness) {
        j["witness"] = json{{"interval", interval_json(v.witness->where)},
                            {"value", rational_json(v.witness->value)},
                            {"value_decimal", to_decimal_string(v.witness->value)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json audit_json(const AuditReport& a) {
    json j;
    j["printed_f"] = poly_json(a.printed_f);
    j["canonical_f"] = poly_json(a.canonical_f);
    j["identity1_residual"] = poly_json(a.identity1_residual);
    j["identity2_residual"] = poly_json(a.identity2_residual);
    j["printed_matches_canonical"] = a.printed_f == a.canonical_f;
    return j;
}

json enclosure_json(const Enclosure& e) {
    json j;
    j["lo"] = rational_json(e.lo);
    j["hi"] = rational_json(e.hi);
    j["lo_decimal"] = to_decimal_string(e.lo);
    j["hi_decimal"] = to_decimal_string(e.hi);
    j["width"] = rational_json(e.hi - e.lo);
    j["binding_constraint"] = e.binding_constraint;
    return j;
}

json witness_json(const Witness& w, const std::string& setup_digest, const std::string& divisor_name,
                  const ClassVector& reference, const std::vector<Rational>& r) {
    json j;
    j["s"] = rational_json(w.s);
    j["lambda_interval"] = interval_json(w.lambda_interval);
    j["f_value"] = rational_json(w.f_value);
    j["f_value_decimal"] = to_decimal_string(w.f_value);
    j["lambda_bound"] = rational_json(w.lambda_bound_used);
    j["divisor"] = divisor_name;
    j["reference"] = class_json(reference);
    json coeffs = json::array();
    for (const Rational& c : r) coeffs.push_back(rational_json(c));
    j["r"] = coeffs;
    j["setup_digest"] = setup_digest;
    return j;
}

json bundle_verdict_json(const BundleVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["mu_total"] = rational_json(v.mu_total);
    j["mu_sub"] = rational_json(v.mu_sub);
    j["mu_quotient"] = rational_json(v.mu_quotient);
    j["sub_exceeds_total"] = v.sub_exceeds_total;
    j["quotient_below_total"] = v.quotient_below_total;
    if (v.omitted_summand)
        j["omitted_summand"] = static_cast<std::int64_t>(*v.omitted_summand);
    else
        j["omitted_summand"] = nullptr;
    j["family"] = v.family;
    j["seshadri_note"] = v.seshadri_note;
    return j;
}

std::string to_decimal_string(const Rational& q, int significant_digits) {
    if (significant_digits < 1) fail(errc::precondition, "need at least one significant digit");
    if (q.is_zero()) return "0";

    const bool negative = q.sign() < 0;
    mpz_class num = abs(q.numerator());
    mpz_class den = q.denominator();

    auto pow10 = [](long k) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
        return p;
    };
    // sign of |q| - 10^k
    auto cmp_pow = [&](long k) {
        mpz_class lhs = num, rhs = den;
        if (k >= 0)
            rhs *= pow10(k);
        else
            lhs *= pow10(-k);
        return cmp(lhs, rhs);
    };

    // Decimal exponent: 10^e <= |q| < 10^{e+1}.
    long e = 0;
    if (cmp_pow(0) >= 0) {
        while (cmp_pow(e + 1) >= 0) ++e;
    } else {
        while (cmp_pow(e) < 0) --e;
    }

    // Round |q| * 10^{sig-1-e} half away from zero; the result has exactly
    // `sig` digits (rounding up to 10^sig bumps the exponent).
    long shift = significant_digits - 1 - e;
    mpz_class n2 = num, d2 = den;
    if (shift >= 0)
        n2 *= pow10(shift);
    else
        d2 *= pow10(-shift);
    mpz_class rounded = (2 * n2 + d2) / (2 * d2);
    if (rounded == pow10(significant_digits)) {
        rounded = pow10(significant_digits - 1);
        ++e;
    }
    std::string digits = rounded.get_str();

    std::string out;
    if (e >= significant_digits) {
        out = digits + std::string(static_cast<std::size_t>(e + 1 - significant_digits), '0');
    } else if (e >= 0) {
        std::string integer_part = digits.substr(0, static_cast<std::size_t>(e + 1));
        std::string fraction = digits.substr(static_cast<std::size_t>(e + 1));
        while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
        out = fraction.empty() ? integer_part : integer_part + "." + fraction;
    } else {
        std::string fraction = std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
        while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
        out = "0." + fraction;
    }
    return negative ? "-" + out : out;
}

} // namespace kslope
