#include "passoc/realization.hpp"

#include "passoc/errors.hpp"
#include "passoc/linalg.hpp"

#include <algorithm>
#include <random>

namespace passoc {

std::string_view to_string(AlphaVariant v)
{
    switch (v) {
    case AlphaVariant::covers:
        return "covers";
    case AlphaVariant::all_pairs:
        return "all_pairs";
    case AlphaVariant::minmax:
        return "minmax";
    }
    return "covers";
}

AlphaVariant parse_alpha_variant(std::string_view name)
{
    if (name == "covers")
        return AlphaVariant::covers;
    if (name == "all_pairs")
        return AlphaVariant::all_pairs;
    if (name == "minmax")
        return AlphaVariant::minmax;
    throw InvalidInputError("unknown alpha variant '" + std::string(name) + "'");
}

LinearFunctional alpha(const Poset& p, ElementSubset s, AlphaVariant variant)
{
    auto f = LinearFunctional::zero(p.size());
    auto add_pair = [&](std::size_t i, std::size_t j) {
        f.coefficients[j] += 1;
        f.coefficients[i] -= 1;
    };
    switch (variant) {
    case AlphaVariant::covers:
        for (const auto& [i, j] : p.cover_relations())
            if (s.contains(i) && s.contains(j))
                add_pair(i, j);
        break;
    case AlphaVariant::all_pairs:
        for (auto i : s.members())
            for (auto j : s.members())
                if (p.less(i, j))
                    add_pair(i, j);
        break;
    case AlphaVariant::minmax: {
        auto lows = p.minimal_elements(s).members();
        auto highs = p.maximal_elements(s).members();
        for (auto i : lows)
            for (auto j : highs)
                if (p.less(i, j))
                    add_pair(i, j);
        break;
    }
    }
    return f;
}

Integer threshold(std::size_t n, std::size_t size)
{
    if (n < 2 || size < 2 || size > n)
        throw InvalidInputError("threshold needs n >= 2 and 2 <= size <= n");
    return ipow(Integer(n), static_cast<unsigned>(2 * size));
}

namespace {

void require_realizable(const Poset& p)
{
    if (p.size() < 2)
        throw InvalidInputError("realizations need at least two elements");
    if (!is_connected(p))
        throw NotConnectedError("the Hasse diagram is not connected");
}

LinearFunctional all_ones(std::size_t n)
{
    LinearFunctional f;
    f.coefficients.assign(n, Rational(1));
    return f;
}

LinearFunctional unit(std::size_t n, std::size_t i)
{
    auto f = LinearFunctional::zero(n);
    f.coefficients[i] = 1;
    return f;
}

void add_cover_inequalities(const Poset& p, HalfSpaceSystem& system)
{
    for (const auto& [i, j] : p.cover_relations()) {
        auto f = LinearFunctional::zero(p.size());
        f.coefficients[j] = 1;
        f.coefficients[i] = -1;
        system.add_inequality(std::move(f), 0, "cover:" + p.name(i) + "<" + p.name(j));
    }
}

} // namespace

HalfSpaceSystem build_associahedron(const Poset& p, AlphaVariant variant)
{
    require_realizable(p);
    const std::size_t n = p.size();
    HalfSpaceSystem system(p.names());
    system.add_equality(all_ones(n), 0, std::string(sum_zero_label));
    system.add_equality(alpha(p, p.all(), variant), Rational(threshold(n, n)), p.format(p.all()));
    for (const auto& tube : enumerate_proper_tubes(p))
        system.add_inequality(alpha(p, tube.members(), variant), Rational(threshold(n, tube.size())),
                              p.format(tube.members()));
    return system;
}

RationalPoint vertex_of_tubing(const TubeCatalog& catalog, const Tubing& t, AlphaVariant variant)
{
    const Poset& p = catalog.poset();
    require_realizable(p);
    if (t.size() != catalog.dimension() || !catalog.is_proper_tubing(t))
        throw NotMaximalError(catalog.format(t) + " is not a maximal tubing");

    const std::size_t n = p.size();
    RationalMatrix rows;
    std::vector<Rational> rhs;
    rows.push_back(all_ones(n).coefficients);
    rhs.emplace_back(0);
    rows.push_back(alpha(p, p.all(), variant).coefficients);
    rhs.emplace_back(threshold(n, n));
    for (auto idx : t.tubes) {
        const auto& tube = catalog[idx];
        rows.push_back(alpha(p, tube.members(), variant).coefficients);
        rhs.emplace_back(threshold(n, tube.size()));
    }
    auto x = solve_fraction_free(rows, rhs);
    if (!x)
        throw SingularSystemError("hyperplanes of " + catalog.format(t) + " do not meet in a point");
    return RationalPoint{std::move(*x)};
}

std::vector<RationalPoint> tubing_vertices(const TubeCatalog& catalog, const std::vector<Tubing>& tubings,
                                           AlphaVariant variant)
{
    std::vector<RationalPoint> out;
    out.reserve(tubings.size());
    for (const auto& t : tubings)
        out.push_back(vertex_of_tubing(catalog, t, variant));
    return out;
}

bool strictly_interior(const Poset& p, const RationalPoint& point, ElementSubset s, AlphaVariant variant)
{
    return alpha(p, s, variant)(point) > Rational(threshold(p.size(), s.size()));
}

HalfSpaceSystem order_polytope(const Poset& p, const Rational& c)
{
    require_realizable(p);
    HalfSpaceSystem system(p.names());
    system.add_equality(all_ones(p.size()), 0, std::string(sum_zero_label));
    system.add_equality(alpha(p, p.all()), c, p.format(p.all()));
    add_cover_inequalities(p, system);
    return system;
}

HalfSpaceSystem stanley_order_polytope(const Poset& p)
{
    require_realizable(p);
    auto lo = p.bottom();
    auto hi = p.top();
    if (!lo || !hi)
        throw BoundednessError("the poset needs a unique minimum and a unique maximum");
    HalfSpaceSystem system(p.names());
    system.add_equality(unit(p.size(), *lo), 0, "bottom:" + p.name(*lo));
    system.add_equality(unit(p.size(), *hi), 1, "top:" + p.name(*hi));
    add_cover_inequalities(p, system);
    return system;
}

HalfSpaceSystem epsilon_realization(const Poset& p, const Rational& eps, EpsilonRange range)
{
    auto system = stanley_order_polytope(p);
    const std::size_t n = p.size();
    const Rational upper = range == EpsilonRange::guaranteed ? Rational(1, Integer(n) * Integer(n)) : Rational(1);
    if (eps <= 0 || eps >= upper)
        throw EpsilonRangeError("epsilon " + to_string(eps) + " must lie strictly between 0 and " + to_string(upper));
    for (const auto& tube : enumerate_proper_tubes(p))
        system.add_inequality(alpha(p, tube.members()), rpow(eps, static_cast<unsigned>(n - tube.size())),
                              p.format(tube.members()));
    return system;
}

std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f)
{
    // h_i = sum_{j >= i} (-1)^(j-i) C(j, i) f_j
    const std::size_t len = f.size();
    std::vector<std::int64_t> h(len, 0);
    std::vector<std::vector<std::int64_t>> binom(len, std::vector<std::int64_t>(len, 0));
    for (std::size_t j = 0; j < len; ++j) {
        binom[j][0] = 1;
        for (std::size_t i = 1; i <= j; ++i)
            binom[j][i] = binom[j - 1][i - 1] + (i <= j - 1 ? binom[j - 1][i] : 0);
    }
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i; j < len; ++j)
            h[i] += ((j - i) % 2 ? -1 : 1) * binom[j][i] * f[j];
    return h;
}

FHVector f_vector(const std::vector<Tubing>& proper_tubings, std::size_t dimension)
{
    FHVector out;
    out.f.assign(dimension + 1, 0);
    for (const auto& t : proper_tubings) {
        if (t.size() > dimension)
            throw InvariantViolation("a proper tubing has more tubes than the dimension");
        ++out.f[dimension - t.size()];
    }
    out.h = h_from_f(out.f);
    return out;
}

FHVector f_vector(const TubeCatalog& catalog)
{
    return f_vector(enumerate_proper_tubings(catalog), catalog.dimension());
}

std::vector<std::int64_t> h_vector_by_outdegree(const TubeCatalog& catalog, const LinearFunctional& direction)
{
    const auto maximal = enumerate_maximal_tubings(catalog);
    const auto vertices = tubing_vertices(catalog, maximal);
    const std::size_t d = catalog.dimension();
    if (direction.dimension() != catalog.poset().size())
        throw InvalidInputError("direction has the wrong dimension");

    std::vector<Rational> value;
    value.reserve(vertices.size());
    for (const auto& v : vertices)
        value.push_back(direction(v));

    std::vector<std::int64_t> outdegree(vertices.size(), 0);
    for (std::size_t a = 0; a < maximal.size(); ++a) {
        for (std::size_t b = a + 1; b < maximal.size(); ++b) {
            if (!tubings_adjacent(catalog, maximal[a], maximal[b]))
                continue;
            if (value[a] == value[b])
                throw NotGenericError("direction takes the same value on the edge " + catalog.format(maximal[a]) +
                                      " -- " + catalog.format(maximal[b]));
            ++outdegree[value[a] < value[b] ? a : b];
        }
    }

    std::vector<std::int64_t> histogram(d + 1, 0);
    for (auto k : outdegree) {
        if (static_cast<std::size_t>(k) > d)
            throw InvariantViolation("vertex outdegree exceeds the dimension");
        ++histogram[static_cast<std::size_t>(k)];
    }
    auto fh = f_vector(catalog);
    if (histogram != fh.h)
        throw InvariantViolation("outdegree histogram differs from the h-vector");
    return histogram;
}

LinearFunctional random_integer_direction(std::size_t dimension, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    auto f = LinearFunctional::zero(dimension);
    for (auto& c : f.coefficients)
        c = static_cast<long long>(gen() % 2001) - 1000;
    return f;
}

OutdegreeResult h_vector_by_seeded_outdegree(const TubeCatalog& catalog, std::uint64_t seed, std::size_t max_attempts)
{
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        auto direction = random_integer_direction(catalog.poset().size(), seed + attempt);
        try {
            auto histogram = h_vector_by_outdegree(catalog, direction);
            return {std::move(histogram), std::move(direction), seed + attempt, attempt + 1};
        } catch (const NotGenericError&) {
        }
    }
    throw NotGenericError("no generic direction found in " + std::to_string(max_attempts) + " attempts");
}

} // namespace passoc
