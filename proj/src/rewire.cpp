#include "swnav/rewire.hpp"

namespace swnav {

void RewireParams::validate() const
{
    if (!(p > 0.0 && p < 1.0)) throw InputError("replacement probability p must lie in (0, 1), got " + std::to_string(p));
}

void destination_sample_step_into(ShortcutGraph& graph, const RewireParams& params, Rng& rng,
                                  WalkRecord& walk)
{
    const auto n = static_cast<Vertex>(graph.size());
    Vertex y = 0;
    Vertex z = 0;
    do {
        y = uniform_index(rng, n);
        z = uniform_index(rng, n);
    } while (y == z);

    greedy_walk_into(graph, y, z, walk);

    const std::size_t capacity = graph.capacity();
    const std::size_t last = walk.path.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
        if (!bernoulli(rng, params.p)) continue;
        const std::size_t slot = capacity == 1 ? 0 : uniform_index(rng, capacity);
        graph.set_slot_unchecked(walk.path[i], slot, z);
    }
}

WalkRecord destination_sample_step(ShortcutGraph& graph, const RewireParams& params, Rng& rng)
{
    params.validate();
    WalkRecord walk;
    destination_sample_step_into(graph, params, rng, walk);
    return walk;
}

EvolveSummary evolve(ShortcutGraph& graph, std::size_t steps, const RewireParams& params, Rng& rng,
                     const WalkObserver& observer)
{
    params.validate();
    EvolveSummary summary;
    if (steps == 0) return summary;
    WalkRecord walk;
    double hops = 0.0;
    for (std::size_t s = 0; s < steps; ++s) {
        destination_sample_step_into(graph, params, rng, walk);
        hops += static_cast<double>(walk.hops());
        if (observer) observer(walk);
    }
    summary.walks = steps;
    summary.mean_hops = hops / static_cast<double>(steps);
    return summary;
}

} // namespace swnav
