#include "passoc/poset.hpp"

#include "passoc/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace passoc {

ElementSubset ElementSubset::of(std::initializer_list<std::size_t> indices)
{
    Mask m = 0;
    for (auto i : indices)
        m |= Mask{1} << i;
    return ElementSubset(m);
}

ElementSubset ElementSubset::of(const std::vector<std::size_t>& indices)
{
    Mask m = 0;
    for (auto i : indices)
        m |= Mask{1} << i;
    return ElementSubset(m);
}

std::vector<std::size_t> ElementSubset::members() const
{
    std::vector<std::size_t> out;
    out.reserve(size());
    for (Mask m = bits_; m != 0; m &= m - 1)
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

bool canonical_less(ElementSubset a, ElementSubset b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.members() < b.members();
}

Poset Poset::build(std::vector<std::string> elements, const std::vector<Relation>& relations)
{
    if (elements.size() > max_poset_size)
        throw InvalidInputError("posets are limited to " + std::to_string(max_poset_size) + " elements");
    Poset p;
    p.names_ = std::move(elements);
    for (std::size_t i = 0; i < p.names_.size(); ++i) {
        if (!p.index_.emplace(p.names_[i], i).second)
            throw DuplicateElementError("duplicate element '" + p.names_[i] + "'");
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(relations.size());
    for (const auto& [a, b] : relations) {
        auto ia = p.index_of(a);
        auto ib = p.index_of(b);
        if (!ia || !ib)
            throw UnknownElementError("relation (" + a + ", " + b + ") references an undeclared element");
        edges.emplace_back(*ia, *ib);
    }
    p.finish(edges);
    return p;
}

Poset Poset::from_indices(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations,
                          std::vector<std::string> names)
{
    if (n > max_poset_size)
        throw InvalidInputError("posets are limited to " + std::to_string(max_poset_size) + " elements");
    if (names.empty()) {
        names.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(std::to_string(i));
    }
    if (names.size() != n)
        throw InvalidInputError("name count does not match element count");
    Poset p;
    p.names_ = std::move(names);
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.index_.emplace(p.names_[i], i).second)
            throw DuplicateElementError("duplicate element '" + p.names_[i] + "'");
    }
    for (const auto& [a, b] : relations) {
        if (a >= n || b >= n)
            throw UnknownElementError("relation index out of range");
    }
    p.finish(relations);
    return p;
}

void Poset::finish(const std::vector<std::pair<std::size_t, std::size_t>>& relations)
{
    const std::size_t n = names_.size();
    up_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        up_[i] = Mask{1} << i;
    for (const auto& [a, b] : relations)
        up_[a] |= Mask{1} << b;

    // Warshall closure on bit rows.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if ((up_[i] >> k) & 1u)
                up_[i] |= up_[k];

    down_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (Mask m = up_[i]; m != 0; m &= m - 1)
            down_[std::countr_zero(m)] |= Mask{1} << i;

    for (std::size_t i = 0; i < n; ++i) {
        Mask both = up_[i] & down_[i] & ~(Mask{1} << i);
        if (both != 0) {
            auto j = static_cast<std::size_t>(std::countr_zero(both));
            throw CycleError("relations force " + names_[i] + " <= " + names_[j] + " <= " + names_[i]);
        }
    }

    upper_covers_.assign(n, 0);
    lower_covers_.assign(n, 0);
    covers_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        Mask strict_up = up_[i] & ~(Mask{1} << i);
        for (Mask m = strict_up; m != 0; m &= m - 1) {
            auto j = static_cast<std::size_t>(std::countr_zero(m));
            Mask strict_down = down_[j] & ~(Mask{1} << j);
            if ((strict_up & strict_down) == 0) {
                upper_covers_[i] |= Mask{1} << j;
                lower_covers_[j] |= Mask{1} << i;
                covers_.emplace_back(i, j);
            }
        }
    }
    std::sort(covers_.begin(), covers_.end());
}

std::optional<std::size_t> Poset::index_of(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

ElementSubset Poset::minimal_elements(ElementSubset s) const
{
    Mask out = 0;
    for (auto i : s.members())
        if ((down_[i] & s.bits() & ~(Mask{1} << i)) == 0)
            out |= Mask{1} << i;
    return ElementSubset(out);
}

ElementSubset Poset::maximal_elements(ElementSubset s) const
{
    Mask out = 0;
    for (auto i : s.members())
        if ((up_[i] & s.bits() & ~(Mask{1} << i)) == 0)
            out |= Mask{1} << i;
    return ElementSubset(out);
}

std::optional<std::size_t> Poset::bottom() const
{
    auto mins = minimal_elements(all());
    if (mins.size() != 1)
        return std::nullopt;
    return mins.members().front();
}

std::optional<std::size_t> Poset::top() const
{
    auto maxs = maximal_elements(all());
    if (maxs.size() != 1)
        return std::nullopt;
    return maxs.members().front();
}

ElementSubset Poset::subset(const std::vector<std::string>& names) const
{
    Mask m = 0;
    for (const auto& name : names) {
        auto i = index_of(name);
        if (!i)
            throw UnknownElementError("unknown element '" + name + "'");
        m |= Mask{1} << *i;
    }
    return ElementSubset(m);
}

std::vector<std::string> Poset::member_names(ElementSubset s) const
{
    std::vector<std::string> out;
    for (auto i : s.members())
        out.push_back(names_[i]);
    return out;
}

std::string Poset::format(ElementSubset s) const
{
    std::string out = "{";
    bool first = true;
    for (auto i : s.members()) {
        if (!first)
            out += ',';
        out += names_[i];
        first = false;
    }
    return out + "}";
}

bool Poset::operator==(const Poset& other) const
{
    return names_ == other.names_ && up_ == other.up_;
}

bool is_connected(const Poset& p)
{
    return p.size() > 0 && is_connected(p, p.all());
}

bool is_connected(const Poset& p, ElementSubset s)
{
    if (s.empty())
        return false;
    Mask seen = Mask{1} << std::countr_zero(s.bits());
    Mask frontier = seen;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask m = frontier; m != 0; m &= m - 1)
            next |= p.hasse_neighbors(static_cast<std::size_t>(std::countr_zero(m))).bits();
        next &= s.bits() & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == s.bits();
}

ElementSubset convex_hull(const Poset& p, ElementSubset s)
{
    Mask above = 0;
    Mask below = 0;
    for (auto i : s.members()) {
        above |= p.up_set(i).bits();
        below |= p.down_set(i).bits();
    }
    return ElementSubset(above & below);
}

bool is_convex(const Poset& p, ElementSubset s)
{
    return convex_hull(p, s) == s;
}

bool is_tube(const Poset& p, ElementSubset s)
{
    return s.size() >= 2 && s.subset_of(p.all()) && is_convex(p, s) && is_connected(p, s);
}

bool is_proper_tube(const Poset& p, ElementSubset s)
{
    return is_tube(p, s) && s.size() + 1 <= p.size();
}

Poset contract(const Poset& p, ElementSubset tube, std::string merged_name)
{
    if (!is_tube(p, tube))
        throw NotATubeError(p.format(tube) + " is not a tube");

    const std::size_t n = p.size();
    const auto members = tube.members();
    const std::size_t anchor = members.front();

    // Old index -> new index; all tube members collapse onto the anchor's slot.
    std::vector<std::size_t> image(n);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        if (tube.contains(i) && i != anchor) {
            image[i] = image[anchor];
            continue;
        }
        image[i] = names.size();
        if (i == anchor) {
            if (merged_name.empty()) {
                for (std::size_t k = 0; k < members.size(); ++k)
                    merged_name += (k ? "*" : "") + p.name(members[k]);
            }
            names.push_back(merged_name);
        } else {
            names.push_back(p.name(i));
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [a, b] : p.cover_relations()) {
        if (image[a] != image[b])
            edges.emplace_back(image[a], image[b]);
    }
    // A convex tube cannot create a cycle; Poset construction re-checks
    // antisymmetry and would throw CycleError otherwise.
    const std::size_t count = names.size();
    try {
        return Poset::from_indices(count, edges, std::move(names));
    } catch (const CycleError& e) {
        throw InvariantViolation(std::string("contraction of a tube produced a cycle: ") + e.what());
    }
}

bool isomorphic(const Poset& a, const Poset& b)
{
    const std::size_t n = a.size();
    if (n != b.size() || a.cover_relations().size() != b.cover_relations().size())
        return false;

    auto profile = [](const Poset& p, std::size_t i) {
        return std::pair{p.up_set(i).size(), p.down_set(i).size()};
    };

    std::vector<std::size_t> map(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
        if (i == n)
            return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || profile(a, i) != profile(b, j))
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = a.leq(k, i) == b.leq(map[k], j) && a.leq(i, k) == b.leq(j, map[k]);
            if (!ok)
                continue;
            used[j] = true;
            map[i] = j;
            if (extend(i + 1))
                return true;
            used[j] = false;
        }
        return false;
    };
    return extend(0);
}

} // namespace passoc
