#pragma once

#include "kslope/geometry.hpp"

#include <string>

namespace kslope {

// Parses a setup document (JSON) and validates it. Throws kslope::error with
// malformed_document / malformed_rational / dimension_mismatch /
// non_positive_volume / cone_violation on bad input.
Setup load_setup(const std::string& json_text);
Setup load_setup_file(const std::string& path);

// Reads bundle data from a document that may omit the geometric fields:
// either a full setup document with a "bundle" section, a bare
// {"bundle": {...}} wrapper, or the bundle object itself.
BundleData load_bundle(const std::string& json_text);

// Canonical, byte-stable serialization. load_setup(serialize_setup(s)) == s.
std::string serialize_setup(const Setup& s);

// Content digest of the canonical serialization, "fnv1a64:<16 hex digits>".
std::string setup_digest(const Setup& s);

} // namespace kslope
