#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace passoc {

using Mask = std::uint64_t;
inline constexpr std::size_t max_poset_size = 64;

/// A set of element indices of one poset, stored as a bitmask.
class ElementSubset {
public:
    constexpr ElementSubset() = default;
    constexpr explicit ElementSubset(Mask bits) : bits_(bits) {}

    static ElementSubset of(std::initializer_list<std::size_t> indices);
    static ElementSubset of(const std::vector<std::size_t>& indices);
    static constexpr ElementSubset first(std::size_t n)
    {
        return ElementSubset(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
    }

    constexpr Mask bits() const { return bits_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
    constexpr bool subset_of(ElementSubset other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ElementSubset other) const { return (bits_ & other.bits_) != 0; }

    std::vector<std::size_t> members() const;

    constexpr ElementSubset operator|(ElementSubset o) const { return ElementSubset(bits_ | o.bits_); }
    constexpr ElementSubset operator&(ElementSubset o) const { return ElementSubset(bits_ & o.bits_); }
    constexpr ElementSubset operator-(ElementSubset o) const { return ElementSubset(bits_ & ~o.bits_); }

    constexpr bool operator==(const ElementSubset&) const = default;

private:
    Mask bits_ = 0;
};

/// Size first, then lexicographic on the sorted member indices.
bool canonical_less(ElementSubset a, ElementSubset b);

/// A finite poset on named elements. Immutable after construction.
///
/// Elements are mapped to dense indices 0..n-1 in declaration order; the full
/// comparability relation is kept as per-element up/down bitmasks so that
/// comparisons are O(1).
class Poset {
public:
    using Relation = std::pair<std::string, std::string>;

    /// Throws DuplicateElementError, UnknownElementError, CycleError.
    static Poset build(std::vector<std::string> elements, const std::vector<Relation>& relations);

    /// Index-based construction; names default to "0", "1", ...
    static Poset from_indices(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations,
                              std::vector<std::string> names = {});

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool leq(std::size_t i, std::size_t j) const { return (up_[i] >> j) & 1u; }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
    bool covers(std::size_t i, std::size_t j) const { return (upper_covers_[i] >> j) & 1u; }

    /// Elements j with i <= j, including i.
    ElementSubset up_set(std::size_t i) const { return ElementSubset(up_[i]); }
    /// Elements j with j <= i, including i.
    ElementSubset down_set(std::size_t i) const { return ElementSubset(down_[i]); }
    ElementSubset upper_covers(std::size_t i) const { return ElementSubset(upper_covers_[i]); }
    ElementSubset lower_covers(std::size_t i) const { return ElementSubset(lower_covers_[i]); }
    ElementSubset hasse_neighbors(std::size_t i) const { return ElementSubset(upper_covers_[i] | lower_covers_[i]); }

    /// Hasse diagram edges (i, j) with i covered by j, sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& cover_relations() const { return covers_; }

    ElementSubset all() const { return ElementSubset::first(size()); }
    ElementSubset minimal_elements(ElementSubset s) const;
    ElementSubset maximal_elements(ElementSubset s) const;
    std::optional<std::size_t> bottom() const;
    std::optional<std::size_t> top() const;
    bool is_bounded() const { return bottom().has_value() && top().has_value(); }

    /// Resolves element names; throws UnknownElementError.
    ElementSubset subset(const std::vector<std::string>& names) const;
    std::vector<std::string> member_names(ElementSubset s) const;
    /// "{a,b,c}" in index order.
    std::string format(ElementSubset s) const;

    bool operator==(const Poset& other) const;

private:
    Poset() = default;
    void finish(const std::vector<std::pair<std::size_t, std::size_t>>& relations);

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Mask> up_;
    std::vector<Mask> down_;
    std::vector<Mask> upper_covers_;
    std::vector<Mask> lower_covers_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

inline Poset build_poset(std::vector<std::string> elements, const std::vector<Poset::Relation>& relations)
{
    return Poset::build(std::move(elements), relations);
}

/// The undirected Hasse graph of the whole poset is connected. The empty poset
/// is not connected.
bool is_connected(const Poset& p);
/// The subgraph of the Hasse diagram induced on s is connected.
bool is_connected(const Poset& p, ElementSubset s);
bool is_convex(const Poset& p, ElementSubset s);
ElementSubset convex_hull(const Poset& p, ElementSubset s);
bool is_tube(const Poset& p, ElementSubset s);
bool is_proper_tube(const Poset& p, ElementSubset s);

/// Quotient poset identifying the tube to a single element. The merged element
/// takes the position of the tube's smallest index; its name defaults to the
/// member names joined by '*'. Throws NotATubeError.
Poset contract(const Poset& p, ElementSubset tube, std::string merged_name = {});

/// Exhaustive isomorphism test; intended for small posets (n <= 8).
bool isomorphic(const Poset& a, const Poset& b);

} // namespace passoc
