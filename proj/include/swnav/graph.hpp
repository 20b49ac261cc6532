#pragma once

#include "swnav/lattice.hpp"
#include "swnav/rng.hpp"

#include <limits>
#include <span>
#include <vector>

namespace swnav {

/// Probability law over lattice distance classes 1..max_distance. On the
/// directed ring this is the marginal shortcut-length law ell(d), d = 1..n-1.
class DistanceDistribution {
public:
    /// Takes probabilities for d = 1..weights.size(). Throws InputError
    /// unless every weight is finite and non-negative and the sum is 1
    /// within 1e-12.
    explicit DistanceDistribution(std::vector<double> weights);

    /// Normalizes arbitrary non-negative weights with a positive sum.
    static DistanceDistribution from_weights(std::vector<double> weights);

    Distance max_distance() const { return static_cast<Distance>(weights_.size()); }
    /// Probability of distance class d, 1-based.
    double operator()(Distance d) const { return weights_[d - 1]; }
    std::span<const double> weights() const { return weights_; }

    /// Throws InputError if the classes do not match the lattice.
    void check_matches(const Topology& topo) const;

    bool operator==(const DistanceDistribution&) const = default;

private:
    std::vector<double> weights_;
};

/// Inverse-CDF sampler over a finite set of weighted outcomes, O(log n) per
/// draw after an O(n) prefix table.
class DiscreteSampler {
public:
    explicit DiscreteSampler(std::span<const double> weights);
    /// Index in [0, size()).
    std::size_t operator()(Rng& rng) const;
    std::size_t size() const { return cumulative_.size(); }

private:
    std::vector<double> cumulative_;
    std::size_t last_positive_ = 0;
};

/// Draws distance classes from a DistanceDistribution; returns d >= 1.
class DistanceSampler {
public:
    explicit DistanceSampler(const DistanceDistribution& ell) : sampler_(ell.weights()) {}
    Distance operator()(Rng& rng) const { return static_cast<Distance>(sampler_(rng) + 1); }

private:
    DiscreteSampler sampler_;
};

/// The shortcut digraph on top of a base lattice. Each vertex owns up to
/// `capacity` directed shortcut slots. Filled slots are kept contiguous.
class ShortcutGraph {
public:
    static constexpr Vertex kNoTarget = std::numeric_limits<Vertex>::max();

    ShortcutGraph(const Topology& topo, std::size_t capacity);

    const Topology& topology() const { return topo_; }
    std::size_t size() const { return topo_.size(); }
    std::size_t capacity() const { return capacity_; }

    std::span<const Vertex> shortcuts(Vertex x) const
    {
        return {slots_.data() + static_cast<std::size_t>(x) * capacity_, counts_[x]};
    }
    std::size_t shortcut_count(Vertex x) const { return counts_[x]; }
    std::size_t total_shortcuts() const { return total_; }

    /// Appends a shortcut; throws if x is full, target == x, or ids are invalid.
    void add_shortcut(Vertex x, Vertex target);

    /// Points slot `slot` of x at target. A slot index at or beyond the
    /// current count fills the next empty slot instead.
    void set_slot(Vertex x, std::size_t slot, Vertex target);

    /// Unchecked set_slot for the rewiring hot loop.
    void set_slot_unchecked(Vertex x, std::size_t slot, Vertex target)
    {
        Vertex* base = slots_.data() + static_cast<std::size_t>(x) * capacity_;
        if (slot >= counts_[x]) {
            base[counts_[x]++] = target;
            ++total_;
        } else {
            base[slot] = target;
        }
    }

    void clear_shortcuts(Vertex x);

    /// Throws ContractError on a self-shortcut, an out-of-range target, or an
    /// over-full vertex.
    void check_invariants() const;

    /// Approximate heap footprint of a graph of this shape.
    static std::size_t memory_bytes(std::size_t n, std::size_t capacity);

    bool operator==(const ShortcutGraph&) const = default;

private:
    Topology topo_;
    std::size_t capacity_;
    std::vector<Vertex> slots_;
    std::vector<std::uint32_t> counts_;
    std::size_t total_ = 0;
};

ShortcutGraph empty_graph(const Topology& topo, std::size_t capacity = 1);

/// Kleinberg's model: every vertex draws `capacity` shortcuts, target z != x
/// chosen with probability proportional to distance(x, z)^alpha. Each vertex
/// is weighted individually (on the torus this is not class-then-member).
ShortcutGraph sample_kleinberg(const Topology& topo, double alpha, std::size_t capacity, Rng& rng);

/// Independent shortcuts with lengths drawn from ell. On the directed ring
/// the class-d target of x is the single vertex (x - d) mod n; on other
/// lattices a uniform member of the class is picked.
ShortcutGraph sample_from_distribution(const Topology& topo, const DistanceDistribution& ell,
                                       std::size_t capacity, Rng& rng);

} // namespace swnav
