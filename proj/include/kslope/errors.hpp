#pragma once

#include <stdexcept>
#include <string>

namespace kslope {

// Typed failure codes. Every throwing path in the library uses kslope::error
// so the CLI can map failures to stable machine-readable names.
enum class errc {
    malformed_rational,
    malformed_document,
    dimension_mismatch,
    non_positive_volume,
    cone_violation,
    degenerate_divisor,
    nonpositive_denominator,
    not_negative_definite,
    singular_system,
    not_a_surface,
    assumption_violated,
    nonpositive_coefficient,
    nonpositive_solution,
    nonpositive_degree,
    rank_mismatch,
    criterion_not_met,
    precondition,
};

inline const char* errc_name(errc code) {
    switch (code) {
    case errc::malformed_rational: return "malformed_rational";
    case errc::malformed_document: return "malformed_document";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::non_positive_volume: return "non_positive_volume";
    case errc::cone_violation: return "cone_violation";
    case errc::degenerate_divisor: return "degenerate_divisor";
    case errc::nonpositive_denominator: return "nonpositive_denominator";
    case errc::not_negative_definite: return "not_negative_definite";
    case errc::singular_system: return "singular_system";
    case errc::not_a_surface: return "not_a_surface";
    case errc::assumption_violated: return "assumption_violated";
    case errc::nonpositive_coefficient: return "nonpositive_coefficient";
    case errc::nonpositive_solution: return "nonpositive_solution";
    case errc::nonpositive_degree: return "nonpositive_degree";
    case errc::rank_mismatch: return "rank_mismatch";
    case errc::criterion_not_met: return "criterion_not_met";
    case errc::precondition: return "precondition";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace kslope
