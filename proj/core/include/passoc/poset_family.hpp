#pragma once

#include "passoc/poset.hpp"
#include "passoc/tubing.hpp"

#include <cstddef>
#include <vector>

namespace passoc {

/// Every connected poset on n elements up to isomorphism (n <= 6), each in a
/// canonical labelling with element names "0".."n-1". The order is fixed:
/// ascending by the canonical relation code.
std::vector<Poset> connected_posets(std::size_t n);

/// connected_posets(k) for k = lo..hi, concatenated.
std::vector<Poset> connected_posets(std::size_t lo, std::size_t hi);

/// Directed precedence cycles t_1 < t_2 < ... < t_k < t_1 of pairwise disjoint
/// tubes, 2 <= k <= max_length, as catalog indices. Each cycle is listed once,
/// starting at its smallest index.
std::vector<std::vector<std::size_t>> precedence_cycles(const TubeCatalog& catalog, std::size_t max_length = 4);

} // namespace passoc
