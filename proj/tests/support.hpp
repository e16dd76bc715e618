#pragma once

#include "passoc/poset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace testing {

inline passoc::Poset chain(std::size_t n)
{
    std::vector<std::string> names;
    std::vector<passoc::Poset::Relation> rel;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(std::to_string(i));
        if (i > 1)
            rel.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return passoc::Poset::build(names, rel);
}

inline passoc::Poset bowtie()
{
    return passoc::Poset::build({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}, {"a", "d"}, {"c", "b"}});
}

inline passoc::Poset diamond()
{
    return passoc::Poset::build({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline std::int64_t catalan(std::int64_t n)
{
    return binomial(2 * n, n) / (n + 1);
}

// Reachability over the given relations, by repeated relaxation.
inline std::vector<std::vector<bool>> reachability(std::size_t n,
                                                   const std::vector<std::pair<std::size_t, std::size_t>>& rel)
{
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        r[i][i] = true;
    for (const auto& [a, b] : rel)
        r[a][b] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (r[a][b] && r[b][c] && !r[a][c])
                        r[a][c] = changed = true;
    }
    return r;
}

// Tube predicate straight from the definition: at least two elements, closed
// under betweenness, and connected through covers inside the subset.
inline bool is_tube_by_definition(const passoc::Poset& p, std::uint64_t mask)
{
    const std::size_t n = p.size();
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u)
            m.push_back(i);
    if (m.size() < 2)
        return false;
    for (auto a : m)
        for (auto c : m)
            for (std::size_t b = 0; b < n; ++b)
                if (p.leq(a, b) && p.leq(b, c) && !((mask >> b) & 1u))
                    return false;
    std::uint64_t seen = std::uint64_t{1} << m[0];
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto a : m)
            for (auto b : m)
                if (((seen >> a) & 1u) && !((seen >> b) & 1u) && (p.covers(a, b) || p.covers(b, a))) {
                    seen |= std::uint64_t{1} << b;
                    grew = true;
                }
    }
    return seen == mask;
}

} // namespace testing
