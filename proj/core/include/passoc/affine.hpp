#pragma once

#include "passoc/halfspace.hpp"
#include "passoc/rational.hpp"
#include "passoc/tubing.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace passoc {

/// An n-periodic, strongly connected order on the integers with i <= i + n.
///
/// The order is generated by the user's relations (shifted by every multiple
/// of n) together with the implicit relations (r, r + n). It is stored as the
/// matrix of least shifts: i = r + a*n and j = s + b*n satisfy i < j exactly
/// when b - a >= least_shift(r, s). Every comparison is O(1) and no finite
/// window of the integers is ever materialized.
class AffinePoset {
public:
    using Generator = std::pair<std::int64_t, std::int64_t>;

    /// Throws InvalidInputError (n < 1, i == j), CycleError,
    /// NotStronglyConnectedError.
    static AffinePoset build(std::int64_t order, const std::vector<Generator>& generators);

    /// Generators (i, i + 1) for every residue.
    static AffinePoset chain(std::int64_t order);

    std::int64_t order() const { return n_; }
    /// User generators shifted so that i lies in 0..n-1, sorted, deduplicated,
    /// with the implicit (r, r + n) relations included.
    const std::vector<Generator>& generators() const { return generators_; }

    std::int64_t least_shift(std::int64_t r, std::int64_t s) const { return shift_[r * n_ + s]; }

    bool less(std::int64_t i, std::int64_t j) const;
    bool leq(std::int64_t i, std::int64_t j) const { return i == j || less(i, j); }
    bool covers(std::int64_t i, std::int64_t j) const;
    std::vector<std::int64_t> upper_covers(std::int64_t i) const;
    std::vector<std::int64_t> lower_covers(std::int64_t i) const;
    /// Every b with a <= b <= c, sorted.
    std::vector<std::int64_t> interval(std::int64_t a, std::int64_t c) const;

    /// n^(2(n+1)).
    Integer period_constant() const;

    std::int64_t residue(std::int64_t i) const;
    std::int64_t block(std::int64_t i) const;

private:
    std::int64_t n_ = 1;
    std::vector<Generator> generators_;
    std::vector<std::int64_t> shift_;
};

/// A finite tube of an affine poset: connected, convex, at least two
/// elements, pairwise distinct residues.
class AffineTube {
public:
    /// Throws NotATubeError.
    static AffineTube make(const AffinePoset& p, std::vector<std::int64_t> members);

    const std::vector<std::int64_t>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::int64_t min() const { return members_.front(); }
    std::int64_t max() const { return members_.back(); }

    AffineTube shifted(std::int64_t by) const;
    /// Orbit representative: minimum in 0..n-1.
    AffineTube canonical(std::int64_t order) const;
    bool intersects(const AffineTube& o) const;
    bool subset_of(const AffineTube& o) const;

    std::string format() const;

    bool operator==(const AffineTube&) const = default;
    auto operator<=>(const AffineTube& o) const
    {
        if (size() != o.size())
            return size() <=> o.size();
        return members_ <=> o.members_;
    }

private:
    explicit AffineTube(std::vector<std::int64_t> m) : members_(std::move(m)) {}
    std::vector<std::int64_t> members_;
};

bool is_affine_tube(const AffinePoset& p, std::span<const std::int64_t> members);

/// One canonical representative per orbit of proper tubes, sorted by size and
/// then lexicographically.
std::vector<AffineTube> enumerate_affine_tube_orbits(const AffinePoset& p);

/// Orbit representatives form a proper tubing: all periodic copies pairwise
/// nested or disjoint and the precedence digraph on all copies is acyclic.
bool is_affine_proper_tubing(const AffinePoset& p, std::span<const AffineTube> orbits);

/// The canonical orbit list with pairwise orbit compatibility precomputed.
class AffineTubeCatalog {
public:
    explicit AffineTubeCatalog(AffinePoset p);

    const AffinePoset& poset() const { return poset_; }
    const std::vector<AffineTube>& orbits() const { return orbits_; }
    const AffineTube& operator[](std::size_t i) const { return orbits_[i]; }
    std::size_t size() const { return orbits_.size(); }
    /// Dimension of the cyclohedron, n - 1.
    std::size_t dimension() const { return static_cast<std::size_t>(poset_.order() - 1); }

    std::optional<std::size_t> index_of(const AffineTube& t) const;
    bool compatible(std::size_t a, std::size_t b) const { return compatible_[a * orbits_.size() + b]; }
    bool is_proper_tubing(const Tubing& t) const;
    std::string label(std::size_t i) const { return orbits_[i].format(); }
    std::string format(const Tubing& t) const;

private:
    AffinePoset poset_;
    std::vector<AffineTube> orbits_;
    std::vector<char> compatible_;
};

std::vector<Tubing> enumerate_affine_proper_tubings(const AffineTubeCatalog& catalog);

/// Inclusion-maximal tubings. Throws InvariantViolation if one has a size
/// other than n - 1 or lacks an orbit of size n.
std::vector<Tubing> enumerate_maximal_affine_tubings(const AffineTubeCatalog& catalog);

/// alpha over the residue coordinates x_0..x_(n-1), with x_j rewritten as
/// x_(j mod n) + (j div n) * c; the rewriting leaves a constant term.
LinearFunctional affine_alpha(const AffinePoset& p, const AffineTube& t);

/// Gauge sum x_0 + ... + x_(n-1) = 0 and alpha_t >= n^(2|t|) per orbit.
HalfSpaceSystem build_cyclohedron(const AffineTubeCatalog& catalog);

/// Throws NotMaximalError, SingularSystemError.
RationalPoint affine_vertex_of_tubing(const AffineTubeCatalog& catalog, const Tubing& t);

bool affine_strictly_interior(const AffinePoset& p, const RationalPoint& point, const AffineTube& t);

} // namespace passoc
