#include "swnav/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "swnav/numeric.hpp"

namespace swnav {

DistanceDistribution::DistanceDistribution(std::vector<double> weights) : weights_(std::move(weights))
{
    if (weights_.empty()) throw InputError("distance distribution must have at least one class");
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) throw InputError("distance distribution has a negative or non-finite weight");
    }
    const double sum = compensated_sum(weights_);
    if (std::abs(sum - 1.0) > 1e-12) {
        throw InputError("distance distribution sums to " + std::to_string(sum) + ", expected 1");
    }
}

DistanceDistribution DistanceDistribution::from_weights(std::vector<double> weights)
{
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) throw InputError("weights must be finite and non-negative");
    }
    const double sum = compensated_sum(weights);
    if (!(sum > 0.0)) throw InputError("weights must have a positive sum");
    for (double& w : weights) w /= sum;
    return DistanceDistribution(std::move(weights));
}

void DistanceDistribution::check_matches(const Topology& topo) const
{
    if (max_distance() != topo.max_distance()) {
        throw InputError("distance distribution has " + std::to_string(max_distance()) +
                         " classes but the lattice has " + std::to_string(topo.max_distance()));
    }
}

DiscreteSampler::DiscreteSampler(std::span<const double> weights)
{
    if (weights.empty()) throw InputError("cannot sample from an empty weight table");
    cumulative_.resize(weights.size());
    double acc = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) throw InputError("invalid sampling weight");
        acc += weights[i];
        cumulative_[i] = acc;
        if (weights[i] > 0.0) {
            last_positive_ = i;
            any = true;
        }
    }
    if (!any) throw InputError("sampling weights are all zero");
}

std::size_t DiscreteSampler::operator()(Rng& rng) const
{
    const double u = uniform_unit(rng) * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    auto idx = static_cast<std::size_t>(it - cumulative_.begin());
    return std::min(idx, last_positive_);
}

ShortcutGraph::ShortcutGraph(const Topology& topo, std::size_t capacity)
    : topo_(topo), capacity_(capacity)
{
    if (capacity == 0) throw InputError("shortcut capacity must be at least 1");
    slots_.assign(topo.size() * capacity, kNoTarget);
    counts_.assign(topo.size(), 0);
}

void ShortcutGraph::add_shortcut(Vertex x, Vertex target)
{
    topo_.check_vertex(x);
    topo_.check_vertex(target);
    if (target == x) throw InputError("self-shortcut at vertex " + std::to_string(x));
    if (counts_[x] >= capacity_) throw InputError("vertex " + std::to_string(x) + " is at shortcut capacity");
    set_slot_unchecked(x, counts_[x], target);
}

void ShortcutGraph::set_slot(Vertex x, std::size_t slot, Vertex target)
{
    topo_.check_vertex(x);
    topo_.check_vertex(target);
    if (target == x) throw InputError("self-shortcut at vertex " + std::to_string(x));
    if (slot >= capacity_) throw InputError("slot index beyond capacity");
    set_slot_unchecked(x, slot, target);
}

void ShortcutGraph::clear_shortcuts(Vertex x)
{
    topo_.check_vertex(x);
    Vertex* base = slots_.data() + static_cast<std::size_t>(x) * capacity_;
    std::fill(base, base + capacity_, kNoTarget);
    total_ -= counts_[x];
    counts_[x] = 0;
}

void ShortcutGraph::check_invariants() const
{
    std::size_t total = 0;
    for (Vertex x = 0; x < topo_.size(); ++x) {
        if (counts_[x] > capacity_) throw ContractError("vertex " + std::to_string(x) + " exceeds capacity");
        total += counts_[x];
        const Vertex* base = slots_.data() + static_cast<std::size_t>(x) * capacity_;
        for (std::size_t s = 0; s < capacity_; ++s) {
            if (s < counts_[x]) {
                if (base[s] >= topo_.size()) throw ContractError("shortcut target out of range at " + std::to_string(x));
                if (base[s] == x) throw ContractError("self-shortcut at " + std::to_string(x));
            } else if (base[s] != kNoTarget) {
                throw ContractError("stale data in empty slot at " + std::to_string(x));
            }
        }
    }
    if (total != total_) throw ContractError("shortcut total out of sync");
}

std::size_t ShortcutGraph::memory_bytes(std::size_t n, std::size_t capacity)
{
    return n * (capacity * sizeof(Vertex) + sizeof(std::uint32_t));
}

ShortcutGraph empty_graph(const Topology& topo, std::size_t capacity)
{
    return ShortcutGraph(topo, capacity);
}

ShortcutGraph sample_kleinberg(const Topology& topo, double alpha, std::size_t capacity, Rng& rng)
{
    ShortcutGraph graph(topo, capacity);
    const OffsetTable table(topo);
    const auto offsets = table.offsets();
    std::vector<double> weights(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        weights[i] = std::pow(static_cast<double>(table.offset_distance(offsets[i])), alpha);
    }
    const DiscreteSampler pick(weights);
    for (Vertex x = 0; x < topo.size(); ++x) {
        for (std::size_t k = 0; k < capacity; ++k) {
            graph.set_slot_unchecked(x, k, table.translate(x, offsets[pick(rng)]));
        }
    }
    return graph;
}

ShortcutGraph sample_from_distribution(const Topology& topo, const DistanceDistribution& ell,
                                       std::size_t capacity, Rng& rng)
{
    ell.check_matches(topo);
    ShortcutGraph graph(topo, capacity);
    const OffsetTable table(topo);
    const DistanceSampler pick(ell);
    const bool unique_members = topo.kind() == LatticeKind::DirectedRing;
    for (Vertex x = 0; x < topo.size(); ++x) {
        for (std::size_t k = 0; k < capacity; ++k) {
            const Distance d = pick(rng);
            const auto members = table.class_members(d);
            const std::uint32_t offset =
                unique_members ? members[0] : members[uniform_index(rng, members.size())];
            graph.set_slot_unchecked(x, k, table.translate(x, offset));
        }
    }
    return graph;
}

} // namespace swnav
