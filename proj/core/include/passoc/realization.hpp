#pragma once

#include "passoc/halfspace.hpp"
#include "passoc/poset.hpp"
#include "passoc/rational.hpp"
#include "passoc/tubing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace passoc {

/// Which pairs of a subset contribute p_j - p_i to alpha.
enum class AlphaVariant {
    covers,    ///< covering relations inside the subset
    all_pairs, ///< all comparable pairs i < j inside the subset
    minmax,    ///< pairs i < j with i minimal and j maximal in the subset
};

std::string_view to_string(AlphaVariant v);
/// Throws InvalidInputError for unknown names.
AlphaVariant parse_alpha_variant(std::string_view name);

LinearFunctional alpha(const Poset& p, ElementSubset s, AlphaVariant variant = AlphaVariant::covers);

/// n^(2 * size). Requires n >= 2 and 2 <= size <= n.
Integer threshold(std::size_t n, std::size_t size);

/// Sum-zero and alpha_P = n^(2n) as equalities, one labelled inequality
/// alpha_t >= n^(2|t|) per proper tube. Throws NotConnectedError.
HalfSpaceSystem build_associahedron(const Poset& p, AlphaVariant variant = AlphaVariant::covers);

/// Label used for the sum-zero equality.
inline constexpr std::string_view sum_zero_label = "sum";

/// The intersection of the hyperplanes of T and of P itself with the sum-zero
/// hyperplane. Throws NotMaximalError for a non-maximal tubing and
/// SingularSystemError if the system is not uniquely solvable.
RationalPoint vertex_of_tubing(const TubeCatalog& catalog, const Tubing& t,
                               AlphaVariant variant = AlphaVariant::covers);

/// v^T for each tubing, in the same order.
std::vector<RationalPoint> tubing_vertices(const TubeCatalog& catalog, const std::vector<Tubing>& tubings,
                                           AlphaVariant variant = AlphaVariant::covers);

/// alpha_s(point) > n^(2|s|), strictly.
bool strictly_interior(const Poset& p, const RationalPoint& point, ElementSubset s,
                       AlphaVariant variant = AlphaVariant::covers);

/// Order cone cut by sum-zero and alpha_P = c. Throws NotConnectedError.
HalfSpaceSystem order_polytope(const Poset& p, const Rational& c);

/// Stanley's normalization p_bottom = 0, p_top = 1. Throws BoundednessError.
HalfSpaceSystem stanley_order_polytope(const Poset& p);

enum class EpsilonRange {
    /// 0 < eps < 1/n^2, the range in which the construction is guaranteed.
    guaranteed,
    /// 0 < eps < 1; the caller is responsible for checking the result.
    unit_interval,
};

/// Bounded-poset realization: p_bottom = 0, p_top = 1, order-cone cover
/// inequalities, and alpha_t >= eps^(n - |t|) for every proper tube t.
/// Throws BoundednessError, EpsilonRangeError.
HalfSpaceSystem epsilon_realization(const Poset& p, const Rational& eps,
                                    EpsilonRange range = EpsilonRange::guaranteed);

struct FHVector {
    std::vector<std::int64_t> f;
    std::vector<std::int64_t> h;

    std::size_t dimension() const { return f.empty() ? 0 : f.size() - 1; }
    bool operator==(const FHVector&) const = default;
};

/// h from f through sum f_i t^i = sum h_i (t+1)^i.
std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f);

/// f_(d-k) is the number of proper tubings with k tubes.
FHVector f_vector(const TubeCatalog& catalog);
FHVector f_vector(const std::vector<Tubing>& proper_tubings, std::size_t dimension);

/// Histogram of vertex outdegrees when every edge of the vertex graph is
/// oriented towards the larger value of `direction`. Throws NotGenericError if
/// some edge is not oriented, InvariantViolation if the histogram differs from
/// the h-vector.
std::vector<std::int64_t> h_vector_by_outdegree(const TubeCatalog& catalog, const LinearFunctional& direction);

/// Integer coefficients in [-1000, 1000] from a seeded generator.
LinearFunctional random_integer_direction(std::size_t dimension, std::uint64_t seed);

struct OutdegreeResult {
    std::vector<std::int64_t> histogram;
    LinearFunctional direction;
    std::uint64_t seed = 0;
    std::size_t attempts = 0;
};

/// Retries with seeds seed, seed+1, ... until a generic direction is found.
OutdegreeResult h_vector_by_seeded_outdegree(const TubeCatalog& catalog, std::uint64_t seed,
                                             std::size_t max_attempts = 64);

} // namespace passoc
