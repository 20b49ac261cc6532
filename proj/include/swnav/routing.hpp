#pragma once

#include "swnav/graph.hpp"

#include <vector>

namespace swnav {

/// One greedy walk: path[0] = source, path.back() = destination.
struct WalkRecord {
    Vertex source = 0;
    Vertex destination = 0;
    std::vector<Vertex> path;

    std::size_t hops() const { return path.empty() ? 0 : path.size() - 1; }
    bool operator==(const WalkRecord&) const = default;
};

/// Next vertex of a strict greedy walk: the base neighbor or shortcut target
/// of `current` closest to `dest`, ties broken by smallest vertex id. Throws
/// ContractError if current == dest.
Vertex greedy_step(const ShortcutGraph& graph, Vertex current, Vertex dest);

/// Full greedy walk from y to z. Throws ContractError if y == z.
WalkRecord greedy_walk(const ShortcutGraph& graph, Vertex y, Vertex z);

/// Same as greedy_walk but reuses `out`'s storage.
void greedy_walk_into(const ShortcutGraph& graph, Vertex y, Vertex z, WalkRecord& out);

/// Hop count only, without recording the path.
std::size_t greedy_hops(const ShortcutGraph& graph, Vertex y, Vertex z);

} // namespace swnav
