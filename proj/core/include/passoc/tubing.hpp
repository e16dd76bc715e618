#pragma once

#include "passoc/poset.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace passoc {

/// A connected, convex subset with at least two elements.
class Tube {
public:
    /// Throws NotATubeError if s is not a tube of p.
    static Tube make(const Poset& p, ElementSubset s);

    ElementSubset members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool proper() const { return proper_; }

    bool operator==(const Tube& o) const { return members_ == o.members_; }

private:
    Tube(ElementSubset s, bool proper) : members_(s), proper_(proper) {}

    ElementSubset members_;
    bool proper_ = false;
};

/// All proper tubes, sorted by size and then lexicographically on indices.
std::vector<Tube> enumerate_proper_tubes(const Poset& p);

/// Nested or disjoint.
bool tubes_compatible(const Tube& a, const Tube& b);

/// For disjoint tubes: some a in `from` lies strictly below some b in `to`.
/// Throws NotDisjointError.
bool tube_precedes(const Poset& p, const Tube& from, const Tube& to);

/// Pairwise compatible and the precedence digraph on disjoint pairs is acyclic.
bool is_proper_tubing(const Poset& p, std::span<const Tube> tubes);

/// Sorted indices into a TubeCatalog's canonical tube list.
struct Tubing {
    std::vector<std::size_t> tubes;

    std::size_t size() const { return tubes.size(); }
    bool contains(std::size_t t) const;
    bool includes(const Tubing& other) const;
    auto operator<=>(const Tubing&) const = default;
};

/// The canonical proper-tube list of a poset, with pairwise compatibility and
/// precedence precomputed. Owns a copy of the poset.
class TubeCatalog {
public:
    explicit TubeCatalog(Poset p);

    const Poset& poset() const { return poset_; }
    const std::vector<Tube>& tubes() const { return tubes_; }
    const Tube& operator[](std::size_t i) const { return tubes_[i]; }
    std::size_t size() const { return tubes_.size(); }

    std::optional<std::size_t> index_of(ElementSubset s) const;
    bool compatible(std::size_t a, std::size_t b) const { return compatible_[a * tubes_.size() + b]; }
    /// Disjoint and a precedes b.
    bool precedes(std::size_t a, std::size_t b) const { return precedes_[a * tubes_.size() + b]; }

    bool is_proper_tubing(const Tubing& t) const;
    /// Tubing from element subsets; throws NotATubeError for non-proper tubes.
    Tubing tubing(const std::vector<ElementSubset>& tubes) const;
    std::vector<Tube> resolve(const Tubing& t) const;
    std::string format(const Tubing& t) const;
    std::string label(std::size_t tube) const { return poset_.format(tubes_[tube].members()); }

    /// Dimension of the associahedron, |P| - 2.
    std::size_t dimension() const { return poset_.size() - 2; }

private:
    bool acyclic(const std::vector<std::size_t>& chosen) const;

    Poset poset_;
    std::vector<Tube> tubes_;
    std::vector<char> compatible_;
    std::vector<char> precedes_;
};

/// Every proper tubing (including the empty one), in lexicographic order of the
/// sorted index sequences. Throws NotConnectedError; requires |P| >= 2.
std::vector<Tubing> enumerate_proper_tubings(const TubeCatalog& catalog);

/// The tubings of size |P| - 2. Throws InvariantViolation if some
/// inclusion-maximal tubing has a different size.
std::vector<Tubing> enumerate_maximal_tubings(const TubeCatalog& catalog);

/// Reference enumeration by filtering every subset of the tube list. Only for
/// cross-checking small instances.
std::vector<Tubing> enumerate_proper_tubings_by_filtering(const TubeCatalog& catalog);

/// Maximal tubings sharing all but one tube. Throws NotMaximalError.
bool tubings_adjacent(const TubeCatalog& catalog, const Tubing& a, const Tubing& b);

} // namespace passoc
