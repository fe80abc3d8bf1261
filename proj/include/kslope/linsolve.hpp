#pragma once

#include "kslope/rational.hpp"

#include <vector>

namespace kslope {

using Matrix = std::vector<std::vector<Rational>>;

// Verifies that m is symmetric and negative definite (leading principal
// minors alternate in sign starting negative, checked exactly via the
// elimination pivots), then solves m r = b exactly.
//
// Throws: precondition (not square / not symmetric / size mismatch),
// not_negative_definite, singular_system.
std::vector<Rational> solve_negdef(const Matrix& m, const std::vector<Rational>& b);

} // namespace kslope
