#include "passoc/poset_family.hpp"

#include "passoc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace passoc {

namespace {

using Closure = std::vector<std::vector<bool>>;

std::vector<bool> relation_code(const Closure& leq, const std::vector<std::size_t>& perm)
{
    const std::size_t n = perm.size();
    std::vector<bool> code;
    code.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            code.push_back(leq[perm[i]][perm[j]]);
    return code;
}

} // namespace

std::vector<Poset> connected_posets(std::size_t n)
{
    if (n == 0 || n > 6)
        throw InvalidInputError("connected_posets supports 1 <= n <= 6");

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);

    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0);

    // Every poset has a labelling in which i < j implies i < j as integers, so
    // transitively closed subsets of the forward pairs cover all of them.
    std::map<std::vector<bool>, Closure> canonical;
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        Closure leq(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            leq[i][i] = true;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((bits >> k) & 1u)
                leq[pairs[k].first][pairs[k].second] = true;

        bool closed = true;
        for (std::size_t a = 0; a < n && closed; ++a)
            for (std::size_t b = a + 1; b < n && closed; ++b)
                for (std::size_t c = b + 1; c < n && closed; ++c)
                    if (leq[a][b] && leq[b][c] && !leq[a][c])
                        closed = false;
        if (!closed)
            continue;

        std::vector<std::size_t> parent(identity);
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && leq[i][j])
                    parent[find(i)] = find(j);
        bool connected = true;
        for (std::size_t i = 1; i < n; ++i)
            connected = connected && find(i) == find(0);
        if (!connected)
            continue;

        std::vector<std::size_t> perm(identity);
        std::vector<bool> best = relation_code(leq, perm);
        std::vector<std::size_t> best_perm = perm;
        while (std::next_permutation(perm.begin(), perm.end())) {
            auto code = relation_code(leq, perm);
            if (code < best) {
                best = std::move(code);
                best_perm = perm;
            }
        }
        if (canonical.count(best))
            continue;
        Closure relabelled(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                relabelled[i][j] = leq[best_perm[i]][best_perm[j]];
        canonical.emplace(std::move(best), std::move(relabelled));
    }

    std::vector<Poset> out;
    for (const auto& [code, leq] : canonical) {
        std::vector<std::pair<std::size_t, std::size_t>> relations;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && leq[i][j])
                    relations.emplace_back(i, j);
        out.push_back(Poset::from_indices(n, relations));
    }
    return out;
}

std::vector<Poset> connected_posets(std::size_t lo, std::size_t hi)
{
    std::vector<Poset> out;
    for (std::size_t n = lo; n <= hi; ++n) {
        auto batch = connected_posets(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::vector<std::vector<std::size_t>> precedence_cycles(const TubeCatalog& catalog, std::size_t max_length)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> path;
    const std::size_t m = catalog.size();

    auto disjoint_from_path = [&](std::size_t t) {
        return std::none_of(path.begin(), path.end(), [&](std::size_t u) {
            return catalog[u].members().intersects(catalog[t].members());
        });
    };
    auto extend = [&](auto&& self) -> void {
        const std::size_t last = path.back();
        if (path.size() >= 2 && catalog.precedes(last, path.front()))
            out.push_back(path);
        if (path.size() == max_length)
            return;
        for (std::size_t t = path.front() + 1; t < m; ++t) {
            if (!catalog.precedes(last, t) || !disjoint_from_path(t))
                continue;
            path.push_back(t);
            self(self);
            path.pop_back();
        }
    };
    for (std::size_t s = 0; s < m; ++s) {
        path.assign(1, s);
        extend(extend);
    }
    return out;
}

} // namespace passoc
