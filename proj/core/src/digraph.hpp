#pragma once

#include <cstddef>
#include <vector>

namespace passoc::detail {

// Depth-first cycle detection on a digraph given by an edge predicate.
template <class EdgeFn>
bool has_directed_cycle(std::size_t n, EdgeFn&& edge)
{
    enum : char { unvisited, active, done };
    std::vector<char> state(n, unvisited);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (state[root] != unvisited)
            continue;
        state[root] = active;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next == n) {
                state[v] = done;
                stack.pop_back();
                continue;
            }
            std::size_t w = next++;
            if (!edge(v, w))
                continue;
            if (state[w] == active)
                return true;
            if (state[w] == unvisited) {
                state[w] = active;
                stack.emplace_back(w, 0);
            }
        }
    }
    return false;
}

} // namespace passoc::detail
