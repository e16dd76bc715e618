#pragma once

#include "passoc/rational.hpp"

#include <optional>
#include <vector>

namespace passoc {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves the square system A x = b exactly. Rows are scaled to integers and
/// reduced with Bareiss fraction-free elimination; the back substitution is
/// the only place fractions appear. Returns nullopt if A is singular.
std::optional<std::vector<Rational>> solve_fraction_free(const RationalMatrix& a, const std::vector<Rational>& b);

/// Determinant by the same fraction-free elimination.
Rational determinant_fraction_free(const RationalMatrix& a);

} // namespace passoc
