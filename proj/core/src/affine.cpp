#include "passoc/affine.hpp"

#include "digraph.hpp"
#include "passoc/errors.hpp"
#include "passoc/linalg.hpp"
#include "passoc/realization.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace passoc {

namespace {

constexpr std::int64_t unreachable = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

} // namespace

AffinePoset AffinePoset::build(std::int64_t order, const std::vector<Generator>& generators)
{
    if (order < 1)
        throw InvalidInputError("affine posets need order >= 1");
    AffinePoset p;
    p.n_ = order;
    for (const auto& [i, j] : generators) {
        if (i == j)
            throw InvalidInputError("generator (" + std::to_string(i) + ", " + std::to_string(j) + ") is a loop");
        std::int64_t r = p.residue(i);
        p.generators_.emplace_back(r, j - (i - r));
    }
    for (std::int64_t r = 0; r < order; ++r)
        p.generators_.emplace_back(r, r + order);
    std::sort(p.generators_.begin(), p.generators_.end());
    p.generators_.erase(std::unique(p.generators_.begin(), p.generators_.end()), p.generators_.end());

    const auto n = static_cast<std::size_t>(order);
    p.shift_.assign(n * n, unreachable);
    for (const auto& [r, j] : p.generators_) {
        auto& w = p.shift_[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(p.residue(j))];
        w = std::min(w, p.block(j));
    }
    // Least total shift over nonempty generator paths between residues.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
                auto a = p.shift_[r * n + k];
                auto b = p.shift_[k * n + s];
                if (a < unreachable && b < unreachable && a + b < p.shift_[r * n + s])
                    p.shift_[r * n + s] = std::max(a + b, -unreachable);
            }

    for (std::size_t r = 0; r < n; ++r)
        if (p.shift_[r * n + r] <= 0)
            throw CycleError("generators force a cycle through residue " + std::to_string(r));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            if (p.shift_[r * n + s] >= unreachable)
                throw NotStronglyConnectedError("no element of residue " + std::to_string(s) +
                                                " lies above residue " + std::to_string(r));
    return p;
}

AffinePoset AffinePoset::chain(std::int64_t order)
{
    std::vector<Generator> gens;
    for (std::int64_t i = 0; i < order; ++i)
        gens.emplace_back(i, i + 1);
    return build(order, gens);
}

std::int64_t AffinePoset::residue(std::int64_t i) const
{
    return ((i % n_) + n_) % n_;
}

std::int64_t AffinePoset::block(std::int64_t i) const
{
    return floor_div(i, n_);
}

bool AffinePoset::less(std::int64_t i, std::int64_t j) const
{
    return block(j) - block(i) >= least_shift(residue(i), residue(j));
}

bool AffinePoset::covers(std::int64_t i, std::int64_t j) const
{
    if (!less(i, j))
        return false;
    const std::int64_t gap = block(j) - block(i);
    const std::int64_t r = residue(i);
    const std::int64_t s = residue(j);
    for (std::int64_t t = 0; t < n_; ++t)
        if (least_shift(r, t) + least_shift(t, s) <= gap)
            return false;
    return true;
}

std::vector<std::int64_t> AffinePoset::upper_covers(std::int64_t i) const
{
    std::vector<std::int64_t> out;
    const std::int64_t r = residue(i);
    const std::int64_t base = i - r;
    for (const auto& [g, j] : generators_)
        if (g == r && covers(i, j + base))
            out.push_back(j + base);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::int64_t> AffinePoset::lower_covers(std::int64_t j) const
{
    std::vector<std::int64_t> out;
    const std::int64_t s = residue(j);
    for (const auto& [g, target] : generators_) {
        if (residue(target) != s)
            continue;
        std::int64_t offset = j - target;
        if (covers(g + offset, j))
            out.push_back(g + offset);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::int64_t> AffinePoset::interval(std::int64_t a, std::int64_t c) const
{
    std::vector<std::int64_t> out;
    if (!leq(a, c))
        return out;
    out.push_back(a);
    out.push_back(c);
    const std::int64_t ra = residue(a);
    const std::int64_t rc = residue(c);
    for (std::int64_t t = 0; t < n_; ++t) {
        std::int64_t lo = block(a) + least_shift(ra, t);
        std::int64_t hi = block(c) - least_shift(t, rc);
        for (std::int64_t l = lo; l <= hi; ++l)
            out.push_back(t + l * n_);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Integer AffinePoset::period_constant() const
{
    return ipow(Integer(n_), static_cast<unsigned>(2 * (n_ + 1)));
}

bool is_affine_tube(const AffinePoset& p, std::span<const std::int64_t> members)
{
    std::vector<std::int64_t> m(members.begin(), members.end());
    std::sort(m.begin(), m.end());
    if (m.size() < 2 || std::adjacent_find(m.begin(), m.end()) != m.end())
        return false;

    std::set<std::int64_t> residues;
    for (auto x : m)
        if (!residues.insert(p.residue(x)).second)
            return false;

    auto inside = [&](std::int64_t x) { return std::binary_search(m.begin(), m.end(), x); };

    for (auto a : m)
        for (auto c : m)
            if (a != c && p.less(a, c))
                for (auto b : p.interval(a, c))
                    if (!inside(b))
                        return false;

    std::vector<bool> seen(m.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < m.size(); ++w)
            if (!seen[w] && (p.covers(m[v], m[w]) || p.covers(m[w], m[v]))) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

AffineTube AffineTube::make(const AffinePoset& p, std::vector<std::int64_t> members)
{
    std::sort(members.begin(), members.end());
    if (!is_affine_tube(p, members)) {
        AffineTube bad(members);
        throw NotATubeError(bad.format() + " is not a tube of the affine poset");
    }
    return AffineTube(std::move(members));
}

AffineTube AffineTube::shifted(std::int64_t by) const
{
    auto m = members_;
    for (auto& x : m)
        x += by;
    return AffineTube(std::move(m));
}

AffineTube AffineTube::canonical(std::int64_t order) const
{
    return shifted(-floor_div(min(), order) * order);
}

bool AffineTube::intersects(const AffineTube& o) const
{
    auto i = members_.begin();
    auto j = o.members_.begin();
    while (i != members_.end() && j != o.members_.end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

bool AffineTube::subset_of(const AffineTube& o) const
{
    return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
}

std::string AffineTube::format() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i)
        out += (i ? "," : "") + std::to_string(members_[i]);
    return out + "}";
}

std::vector<AffineTube> enumerate_affine_tube_orbits(const AffinePoset& p)
{
    const std::int64_t n = p.order();
    std::set<std::vector<std::int64_t>> tubes;
    for (std::int64_t start = 0; start < n; ++start) {
        // Connected sets with minimum `start` and distinct residues.
        std::set<std::vector<std::int64_t>> seen{{start}};
        std::vector<std::vector<std::int64_t>> frontier{{start}};
        while (!frontier.empty()) {
            std::vector<std::vector<std::int64_t>> next;
            for (const auto& set : frontier) {
                if (static_cast<std::int64_t>(set.size()) == n)
                    continue;
                for (auto x : set) {
                    auto nbrs = p.upper_covers(x);
                    auto low = p.lower_covers(x);
                    nbrs.insert(nbrs.end(), low.begin(), low.end());
                    for (auto y : nbrs) {
                        if (y <= start)
                            continue;
                        bool clash = std::any_of(set.begin(), set.end(),
                                                 [&](std::int64_t z) { return p.residue(z) == p.residue(y); });
                        if (clash)
                            continue;
                        auto grown = set;
                        grown.insert(std::upper_bound(grown.begin(), grown.end(), y), y);
                        if (seen.insert(grown).second)
                            next.push_back(std::move(grown));
                    }
                }
            }
            frontier = std::move(next);
        }
        for (const auto& set : seen)
            if (set.size() >= 2 && is_affine_tube(p, set))
                tubes.insert(set);
    }
    std::vector<AffineTube> out;
    for (const auto& t : tubes)
        out.push_back(AffineTube::make(p, t));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool copies_precede(const AffinePoset& p, const AffineTube& a, const AffineTube& b)
{
    for (auto x : a.members())
        for (auto y : b.members())
            if (p.less(x, y))
                return true;
    return false;
}

// Shifts k for which `a` and `b + k n` can share an element.
std::pair<std::int64_t, std::int64_t> overlap_shifts(std::int64_t n, const AffineTube& a, const AffineTube& b)
{
    return {ceil_div(a.min() - b.max(), n), floor_div(a.max() - b.min(), n)};
}

bool orbits_compatible(std::int64_t n, const AffineTube& a, const AffineTube& b)
{
    auto [lo, hi] = overlap_shifts(n, a, b);
    for (std::int64_t k = lo; k <= hi; ++k) {
        auto copy = b.shifted(k * n);
        if (copy == a)
            continue;
        if (copy.intersects(a) && !copy.subset_of(a) && !a.subset_of(copy))
            return false;
    }
    return true;
}

// Least k with some x in a below some y in b + k n.
std::int64_t least_precedence_shift(const AffinePoset& p, const AffineTube& a, const AffineTube& b)
{
    std::int64_t best = unreachable;
    for (auto x : a.members())
        for (auto y : b.members())
            best = std::min(best, p.least_shift(p.residue(x), p.residue(y)) + p.block(x) - p.block(y));
    return best;
}

// Acyclicity of the precedence digraph on all periodic copies. A shortest
// cycle of copies can be translated so one copy is unshifted; shortcut
// arguments then keep every copy within 2M shifts of it, where M bounds the
// least precedence shifts and the overlap ranges. The window below covers that.
bool periodic_copies_acyclic(const AffinePoset& p, std::span<const AffineTube> orbits)
{
    const std::int64_t n = p.order();
    std::int64_t bound = 0;
    for (const auto& a : orbits)
        for (const auto& b : orbits) {
            bound = std::max(bound, std::abs(least_precedence_shift(p, a, b)));
            auto [lo, hi] = overlap_shifts(n, a, b);
            bound = std::max({bound, std::abs(lo), std::abs(hi)});
        }
    const std::int64_t window = 2 * (bound + 1) + 1;

    std::vector<AffineTube> copies;
    for (const auto& o : orbits)
        for (std::int64_t k = -window; k <= window; ++k)
            copies.push_back(o.shifted(k * n));

    return !detail::has_directed_cycle(copies.size(), [&](std::size_t i, std::size_t j) {
        return i != j && !copies[i].intersects(copies[j]) && copies_precede(p, copies[i], copies[j]);
    });
}

} // namespace

bool is_affine_proper_tubing(const AffinePoset& p, std::span<const AffineTube> orbits)
{
    const std::int64_t n = p.order();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (!is_affine_tube(p, orbits[i].members()))
            return false;
        for (std::size_t j = i; j < orbits.size(); ++j) {
            if (i != j && orbits[i].canonical(n) == orbits[j].canonical(n))
                return false;
            if (!orbits_compatible(n, orbits[i], orbits[j]))
                return false;
        }
    }
    return periodic_copies_acyclic(p, orbits);
}

AffineTubeCatalog::AffineTubeCatalog(AffinePoset p) : poset_(std::move(p)), orbits_(enumerate_affine_tube_orbits(poset_))
{
    const std::size_t m = orbits_.size();
    compatible_.assign(m * m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            compatible_[a * m + b] = orbits_compatible(poset_.order(), orbits_[a], orbits_[b]);
}

std::optional<std::size_t> AffineTubeCatalog::index_of(const AffineTube& t) const
{
    auto c = t.canonical(poset_.order());
    auto it = std::lower_bound(orbits_.begin(), orbits_.end(), c);
    if (it == orbits_.end() || *it != c)
        return std::nullopt;
    return static_cast<std::size_t>(it - orbits_.begin());
}

bool AffineTubeCatalog::is_proper_tubing(const Tubing& t) const
{
    std::vector<AffineTube> chosen;
    for (std::size_t i = 0; i < t.tubes.size(); ++i) {
        if (t.tubes[i] >= orbits_.size())
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (t.tubes[i] == t.tubes[j] || !compatible(t.tubes[i], t.tubes[j]))
                return false;
        chosen.push_back(orbits_[t.tubes[i]]);
    }
    return periodic_copies_acyclic(poset_, chosen);
}

std::string AffineTubeCatalog::format(const Tubing& t) const
{
    std::string out = "{";
    for (std::size_t i = 0; i < t.tubes.size(); ++i)
        out += (i ? "," : "") + label(t.tubes[i]);
    return out + "}";
}

std::vector<Tubing> enumerate_affine_proper_tubings(const AffineTubeCatalog& catalog)
{
    if (catalog.poset().order() < 2)
        throw InvalidInputError("affine tubings need order >= 2");
    std::vector<Tubing> out;
    Tubing current;
    const std::size_t m = catalog.size();
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

std::vector<Tubing> enumerate_maximal_affine_tubings(const AffineTubeCatalog& catalog)
{
    auto all = enumerate_affine_proper_tubings(catalog);
    const std::size_t target = catalog.dimension();
    const auto n = static_cast<std::size_t>(catalog.poset().order());
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
            throw InvariantViolation("inclusion-maximal affine tubing " + catalog.format(t) + " has " +
                                     std::to_string(t.size()) + " orbits, expected " + std::to_string(target));
        bool has_full = std::any_of(t.tubes.begin(), t.tubes.end(), [&](std::size_t i) { return catalog[i].size() == n; });
        if (!has_full)
            throw InvariantViolation("maximal affine tubing " + catalog.format(t) + " has no orbit of size n");
        out.push_back(t);
    }
    return out;
}

LinearFunctional affine_alpha(const AffinePoset& p, const AffineTube& t)
{
    const auto n = static_cast<std::size_t>(p.order());
    auto f = LinearFunctional::zero(n);
    const Rational c(p.period_constant());
    for (auto i : t.members())
        for (auto j : t.members())
            if (p.covers(i, j)) {
                f.coefficients[static_cast<std::size_t>(p.residue(j))] += 1;
                f.coefficients[static_cast<std::size_t>(p.residue(i))] -= 1;
                f.constant += Rational(p.block(j) - p.block(i)) * c;
            }
    return f;
}

namespace {

void require_cyclohedron(const AffinePoset& p)
{
    if (p.order() < 2)
        throw InvalidInputError("the cyclohedron needs order >= 2");
}

std::vector<std::string> residue_names(std::int64_t n)
{
    std::vector<std::string> out;
    for (std::int64_t i = 0; i < n; ++i)
        out.push_back("x" + std::to_string(i));
    return out;
}

} // namespace

HalfSpaceSystem build_cyclohedron(const AffineTubeCatalog& catalog)
{
    const auto& p = catalog.poset();
    require_cyclohedron(p);
    const auto n = static_cast<std::size_t>(p.order());
    HalfSpaceSystem system(residue_names(p.order()));
    LinearFunctional gauge;
    gauge.coefficients.assign(n, Rational(1));
    system.add_equality(std::move(gauge), 0, "gauge");
    for (const auto& orbit : catalog.orbits())
        system.add_inequality(affine_alpha(p, orbit), Rational(threshold(n, orbit.size())), orbit.format());
    return system;
}

RationalPoint affine_vertex_of_tubing(const AffineTubeCatalog& catalog, const Tubing& t)
{
    const auto& p = catalog.poset();
    require_cyclohedron(p);
    if (t.size() != catalog.dimension() || !catalog.is_proper_tubing(t))
        throw NotMaximalError(catalog.format(t) + " is not a maximal affine tubing");
    const auto n = static_cast<std::size_t>(p.order());
    RationalMatrix rows;
    std::vector<Rational> rhs;
    rows.emplace_back(n, Rational(1));
    rhs.emplace_back(0);
    for (auto idx : t.tubes) {
        auto f = affine_alpha(p, catalog[idx]);
        rows.push_back(f.coefficients);
        rhs.push_back(Rational(threshold(n, catalog[idx].size())) - f.constant);
    }
    auto x = solve_fraction_free(rows, rhs);
    if (!x)
        throw SingularSystemError("hyperplanes of " + catalog.format(t) + " do not meet in a point");
    return RationalPoint{std::move(*x)};
}

bool affine_strictly_interior(const AffinePoset& p, const RationalPoint& point, const AffineTube& t)
{
    return affine_alpha(p, t)(point) > Rational(threshold(static_cast<std::size_t>(p.order()), t.size()));
}

} // namespace passoc
