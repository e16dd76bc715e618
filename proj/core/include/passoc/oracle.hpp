#pragma once

#include "passoc/halfspace.hpp"
#include "passoc/poset.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace passoc {

/// A vertex found by the oracle together with its incidence evidence.
struct VertexCertificate {
    RationalPoint point;
    /// Inequality labels tight at the point, in declaration order.
    std::vector<std::string> tight;
    /// The inequalities whose hyperplanes first produced the point.
    std::vector<std::string> basis;
};

/// Vertex enumeration by trying every choice of d inequality hyperplanes,
/// where d is the dimension left by the equalities. Independent of the main
/// solver: plain rational Gauss-Jordan elimination. Results are sorted by
/// point. An empty result means the region is empty. Throws UnboundedError if
/// the region is nonempty and unbounded.
std::vector<VertexCertificate> brute_force_vertices(const HalfSpaceSystem& system);

/// Whether the region stays nonempty when the named inequalities are made
/// equalities. Throws InvalidInputError for unknown labels.
bool feasible_with_equalities(const HalfSpaceSystem& system, const std::vector<std::string>& labels);

/// Rank of a set of rows, by Gauss-Jordan elimination.
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

/// Dimension of the affine hull; -1 for an empty set.
int affine_dimension(const std::vector<RationalPoint>& points);

/// Dimension of the region cut out by the equalities alone.
std::size_t free_dimension(const HalfSpaceSystem& system);

/// Vertex pairs (indices into `vertices`) spanning an edge: their common tight
/// hyperplanes together with the equalities have rank one less than the
/// ambient dimension, and no third vertex is tight on all of them.
std::vector<std::pair<std::size_t, std::size_t>> vertex_edges(const HalfSpaceSystem& system,
                                                              const std::vector<VertexCertificate>& vertices);

/// Inequality labels whose tight vertices span a face of codimension one.
std::vector<std::string> facet_labels(const HalfSpaceSystem& system, const std::vector<VertexCertificate>& vertices);

/// Tight label sets of all vertices, with labels outside `keep` removed.
/// Two polytopes whose facets carry the same labels have the same face
/// lattice exactly when these sets agree.
std::set<std::vector<std::string>> incidence_signature(const std::vector<VertexCertificate>& vertices,
                                                       const std::set<std::string>& keep);

/// Seeded order-preserving integer assignments, recentred to sum zero.
std::vector<RationalPoint> sample_order_cone(const Poset& p, std::size_t count, std::uint64_t seed);

/// max - min of the coordinates in s.
Rational diameter(const RationalPoint& point, ElementSubset s);

} // namespace passoc
