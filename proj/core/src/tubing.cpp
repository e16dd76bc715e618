#include "passoc/tubing.hpp"

#include "digraph.hpp"
#include "passoc/errors.hpp"

#include <algorithm>

namespace passoc {

Tube Tube::make(const Poset& p, ElementSubset s)
{
    if (!is_tube(p, s))
        throw NotATubeError(p.format(s) + " is not a tube");
    return Tube(s, s.size() < p.size());
}

std::vector<Tube> enumerate_proper_tubes(const Poset& p)
{
    std::vector<Tube> out;
    const std::size_t n = p.size();
    if (n < 3)
        return out;
    const Mask limit = Mask{1} << n;
    for (Mask m = 1; m < limit; ++m) {
        ElementSubset s(m);
        if (s.size() >= 2 && s.size() < n && is_tube(p, s))
            out.push_back(Tube::make(p, s));
    }
    std::sort(out.begin(), out.end(),
              [](const Tube& a, const Tube& b) { return canonical_less(a.members(), b.members()); });
    return out;
}

bool tubes_compatible(const Tube& a, const Tube& b)
{
    auto x = a.members();
    auto y = b.members();
    return x.subset_of(y) || y.subset_of(x) || !x.intersects(y);
}

namespace {

bool precedes_unchecked(const Poset& p, ElementSubset from, ElementSubset to)
{
    for (auto a : from.members())
        if (p.up_set(a).intersects(to))
            return true;
    return false;
}

} // namespace

bool tube_precedes(const Poset& p, const Tube& from, const Tube& to)
{
    if (from.members().intersects(to.members()))
        throw NotDisjointError(p.format(from.members()) + " and " + p.format(to.members()) + " are not disjoint");
    return precedes_unchecked(p, from.members(), to.members());
}

bool is_proper_tubing(const Poset& p, std::span<const Tube> tubes)
{
    const std::size_t k = tubes.size();
    for (const auto& t : tubes)
        if (!t.proper())
            return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!tubes_compatible(tubes[i], tubes[j]) || tubes[i] == tubes[j])
                return false;
    return !detail::has_directed_cycle(k, [&](std::size_t i, std::size_t j) {
        auto a = tubes[i].members();
        auto b = tubes[j].members();
        return i != j && !a.intersects(b) && precedes_unchecked(p, a, b);
    });
}

bool Tubing::contains(std::size_t t) const
{
    return std::binary_search(tubes.begin(), tubes.end(), t);
}

bool Tubing::includes(const Tubing& other) const
{
    return std::includes(tubes.begin(), tubes.end(), other.tubes.begin(), other.tubes.end());
}

TubeCatalog::TubeCatalog(Poset p) : poset_(std::move(p)), tubes_(enumerate_proper_tubes(poset_))
{
    const std::size_t m = tubes_.size();
    compatible_.assign(m * m, 0);
    precedes_.assign(m * m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            compatible_[a * m + b] = tubes_compatible(tubes_[a], tubes_[b]);
            auto x = tubes_[a].members();
            auto y = tubes_[b].members();
            precedes_[a * m + b] = !x.intersects(y) && precedes_unchecked(poset_, x, y);
        }
    }
}

std::optional<std::size_t> TubeCatalog::index_of(ElementSubset s) const
{
    auto it = std::lower_bound(tubes_.begin(), tubes_.end(), s,
                               [](const Tube& t, ElementSubset v) { return canonical_less(t.members(), v); });
    if (it == tubes_.end() || it->members() != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - tubes_.begin());
}

bool TubeCatalog::acyclic(const std::vector<std::size_t>& chosen) const
{
    return !detail::has_directed_cycle(chosen.size(), [&](std::size_t i, std::size_t j) {
        return precedes(chosen[i], chosen[j]);
    });
}

bool TubeCatalog::is_proper_tubing(const Tubing& t) const
{
    for (std::size_t i = 0; i < t.tubes.size(); ++i) {
        if (t.tubes[i] >= tubes_.size())
            return false;
        for (std::size_t j = i + 1; j < t.tubes.size(); ++j)
            if (t.tubes[i] == t.tubes[j] || !compatible(t.tubes[i], t.tubes[j]))
                return false;
    }
    return acyclic(t.tubes);
}

Tubing TubeCatalog::tubing(const std::vector<ElementSubset>& tubes) const
{
    Tubing t;
    for (auto s : tubes) {
        auto i = index_of(s);
        if (!i)
            throw NotATubeError(poset_.format(s) + " is not a proper tube");
        t.tubes.push_back(*i);
    }
    std::sort(t.tubes.begin(), t.tubes.end());
    t.tubes.erase(std::unique(t.tubes.begin(), t.tubes.end()), t.tubes.end());
    return t;
}

std::vector<Tube> TubeCatalog::resolve(const Tubing& t) const
{
    std::vector<Tube> out;
    for (auto i : t.tubes)
        out.push_back(tubes_.at(i));
    return out;
}

std::string TubeCatalog::format(const Tubing& t) const
{
    std::string out = "{";
    for (std::size_t i = 0; i < t.tubes.size(); ++i)
        out += (i ? "," : "") + label(t.tubes[i]);
    return out + "}";
}

namespace {

void require_enumerable(const Poset& p)
{
    if (p.size() < 2)
        throw InvalidInputError("tubings need a poset with at least two elements");
    if (!is_connected(p))
        throw NotConnectedError("the Hasse diagram is not connected");
}

} // namespace

std::vector<Tubing> enumerate_proper_tubings(const TubeCatalog& catalog)
{
    require_enumerable(catalog.poset());
    std::vector<Tubing> out;
    Tubing current;
    const std::size_t m = catalog.size();

    // Subsets of tubings are tubings, so growing in increasing index order
    // reaches each tubing exactly once.
    auto extend = [&](auto&& self, std::size_t start) -> void {
        out.push_back(current);
        for (std::size_t j = start; j < m; ++j) {
            bool ok = std::all_of(current.tubes.begin(), current.tubes.end(),
                                  [&](std::size_t c) { return catalog.compatible(c, j); });
            if (!ok)
                continue;
            current.tubes.push_back(j);
            if (catalog.is_proper_tubing(current))
                self(self, j + 1);
            current.tubes.pop_back();
        }
    };
    extend(extend, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tubing> enumerate_maximal_tubings(const TubeCatalog& catalog)
{
    auto all = enumerate_proper_tubings(catalog);
    const std::size_t target = catalog.dimension();
    std::vector<Tubing> out;
    for (const auto& t : all) {
        bool extendable = false;
        for (std::size_t j = 0; j < catalog.size() && !extendable; ++j) {
            if (t.contains(j))
                continue;
            Tubing bigger = t;
            bigger.tubes.insert(std::upper_bound(bigger.tubes.begin(), bigger.tubes.end(), j), j);
            extendable = catalog.is_proper_tubing(bigger);
        }
        if (extendable)
            continue;
        if (t.size() != target)
            throw InvariantViolation("inclusion-maximal tubing " + catalog.format(t) + " has " +
                                     std::to_string(t.size()) + " tubes, expected " + std::to_string(target));
        out.push_back(t);
    }
    return out;
}

std::vector<Tubing> enumerate_proper_tubings_by_filtering(const TubeCatalog& catalog)
{
    require_enumerable(catalog.poset());
    const std::size_t m = catalog.size();
    if (m > 22)
        throw InvalidInputError("subset filtering is limited to 22 tubes");
    std::vector<Tubing> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Tubing t;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1u)
                t.tubes.push_back(i);
        if (catalog.is_proper_tubing(t))
            out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool tubings_adjacent(const TubeCatalog& catalog, const Tubing& a, const Tubing& b)
{
    const std::size_t d = catalog.dimension();
    if (a.size() != d || b.size() != d || !catalog.is_proper_tubing(a) || !catalog.is_proper_tubing(b))
        throw NotMaximalError("adjacency is defined for maximal tubings only");
    if (d == 0)
        return false;
    std::vector<std::size_t> shared;
    std::set_intersection(a.tubes.begin(), a.tubes.end(), b.tubes.begin(), b.tubes.end(),
                          std::back_inserter(shared));
    return shared.size() + 1 == d;
}

} // namespace passoc
