#pragma once

#include "swnav/routing.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace swnav {

struct RewireParams {
    double p = 0.1;          ///< per-vertex replacement probability, 0 < p < 1
    std::uint64_t seed = 0;  ///< seed for callers that build their own Rng

    /// Throws InputError unless 0 < p < 1.
    void validate() const;
};

struct EvolveSummary {
    std::size_t walks = 0;
    std::optional<double> mean_hops; ///< absent when no walk was made
};

using WalkObserver = std::function<void(const WalkRecord&)>;

/// One destination-sampling step. Draws (y, z) uniformly, redrawing the pair
/// until y != z, routes greedily from y to z on the current graph, then every
/// non-terminal walk vertex independently with probability p points one
/// uniformly chosen slot at z. Empty slots are choosable, so vertices below
/// capacity gain a shortcut. z itself is never touched.
///
/// Random draws happen in a fixed order: y, z, then per walk vertex
/// x_0..x_{t-1} a coin and (only when capacity > 1 and the coin succeeds)
/// a slot index.
///
/// The returned walk is the one taken before any slot was rewritten.
WalkRecord destination_sample_step(ShortcutGraph& graph, const RewireParams& params, Rng& rng);

/// Same as above, reusing `walk`'s storage.
void destination_sample_step_into(ShortcutGraph& graph, const RewireParams& params, Rng& rng,
                                  WalkRecord& walk);

/// Applies `steps` destination-sampling steps in sequence. The observer, if
/// set, sees each walk after the graph has been updated for it.
EvolveSummary evolve(ShortcutGraph& graph, std::size_t steps, const RewireParams& params, Rng& rng,
                     const WalkObserver& observer = {});

} // namespace swnav
