#include "swnav/routing.hpp"

#include <cassert>

namespace swnav {

namespace {

inline Vertex step_unchecked(const ShortcutGraph& graph, const Topology& topo, Vertex current, Vertex dest)
{
    Vertex best = ShortcutGraph::kNoTarget;
    Distance best_d = std::numeric_limits<Distance>::max();
    auto consider = [&](Vertex v) {
        const Distance d = topo.distance_unchecked(v, dest);
        if (d < best_d || (d == best_d && v < best)) {
            best = v;
            best_d = d;
        }
    };
    for (Vertex v : topo.base_neighbors(current)) consider(v);
    for (Vertex v : graph.shortcuts(current)) consider(v);
    assert(best_d < topo.distance_unchecked(current, dest));
    return best;
}

void check_endpoints(const ShortcutGraph& graph, Vertex from, Vertex to)
{
    graph.topology().check_vertex(from);
    graph.topology().check_vertex(to);
    if (from == to) throw ContractError("greedy routing needs distinct endpoints, got " + std::to_string(from) + " twice");
}

} // namespace

Vertex greedy_step(const ShortcutGraph& graph, Vertex current, Vertex dest)
{
    check_endpoints(graph, current, dest);
    return step_unchecked(graph, graph.topology(), current, dest);
}

void greedy_walk_into(const ShortcutGraph& graph, Vertex y, Vertex z, WalkRecord& out)
{
    check_endpoints(graph, y, z);
    const Topology& topo = graph.topology();
    out.source = y;
    out.destination = z;
    out.path.clear();
    out.path.push_back(y);
    Vertex at = y;
    while (at != z) {
        at = step_unchecked(graph, topo, at, z);
        out.path.push_back(at);
    }
}

WalkRecord greedy_walk(const ShortcutGraph& graph, Vertex y, Vertex z)
{
    WalkRecord out;
    greedy_walk_into(graph, y, z, out);
    return out;
}

std::size_t greedy_hops(const ShortcutGraph& graph, Vertex y, Vertex z)
{
    check_endpoints(graph, y, z);
    const Topology& topo = graph.topology();
    std::size_t hops = 0;
    for (Vertex at = y; at != z; ++hops) at = step_unchecked(graph, topo, at, z);
    return hops;
}

} // namespace swnav
