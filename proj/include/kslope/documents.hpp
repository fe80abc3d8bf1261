#pragma once

#include "kslope/destabilize.hpp"
#include "kslope/fibration.hpp"
#include "kslope/seshadri.hpp"
#include "kslope/slope.hpp"

#include <json.hpp>

#include <string>

namespace kslope {

// JSON encodings shared by the document loader, the certificate emitter and
// the tests. Rationals become JSON integers when integral and representable
// as int64, otherwise "p/q" strings. Polynomials are coefficient arrays,
// lowest degree first. nlohmann::json objects keep keys sorted, so dumping
// any of these is byte-stable.
nlohmann::json rational_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j); // throws malformed_rational
nlohmann::json class_json(const ClassVector& v);
nlohmann::json poly_json(const Poly& p);
nlohmann::json interval_json(const Interval& iv);

nlohmann::json slope_data_json(const SlopeData& sd);
nlohmann::json energy_pieces_json(const EnergyPieces& ep);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json audit_json(const AuditReport& a);
nlohmann::json enclosure_json(const Enclosure& e);
nlohmann::json witness_json(const Witness& w, const std::string& setup_digest,
                            const std::string& divisor_name, const ClassVector& reference,
                            const std::vector<Rational>& r);
nlohmann::json bundle_verdict_json(const BundleVerdict& v);

// Exact decimal rendering of a rational with the given number of significant
// digits (round half away from zero). Never goes through floating point.
std::string to_decimal_string(const Rational& q, int significant_digits = 12);

} // namespace kslope
