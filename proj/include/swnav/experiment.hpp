#pragma once

// Measurement harness: warmup + measurement sweeps for destination sampling
// and the static Kleinberg baseline, link-length histograms, Monte-Carlo
// hitting estimates and the stationary balance check.

#include "swnav/rewire.hpp"
#include "swnav/sizes.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace swnav {

/// A size whose state would exceed the configured memory cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    LatticeKind topology = LatticeKind::DirectedRing;
    /// Vertex counts. Torus sizes are rounded to the nearest square m*m.
    std::vector<std::size_t> sizes{1000};
    std::size_t capacity = 1;
    double p = 0.1;
    StepCount warmup{10, true};
    std::size_t measure_walks = 100000;
    std::uint64_t seed = 42;
    /// Measurement walks leave the graph untouched.
    bool frozen = false;
    std::size_t batches = 100;
    /// Number of windows for the hop-count convergence diagnostic.
    std::size_t diagnostic_windows = 10;
    std::size_t memory_cap_bytes = std::size_t{2} << 30;
    std::size_t threads = 1;
    /// Baseline only: also solve the exact tau (directed ring, capacity 1).
    bool exact_baseline = true;

    /// Throws InputError on an inconsistent configuration.
    void validate() const;
};

/// Builds the lattice for a requested vertex count.
Topology make_topology(LatticeKind kind, std::size_t n);

/// Estimated peak bytes for one size of a run.
std::size_t estimated_memory(const ExperimentConfig& cfg, std::size_t n, bool baseline);

struct SizeRecord {
    std::size_t n = 0;
    std::size_t side = 0;
    std::size_t warmup_steps = 0;
    std::size_t walks = 0;
    double mean_hops = 0.0;
    double sqrt_mean_hops = 0.0;
    double std_error = 0.0;       ///< sample std / sqrt(walks); ignores autocorrelation
    double batch_std_error = 0.0; ///< batch-means estimate
    std::optional<double> exact_tau;
    std::vector<double> warmup_window_means;
    std::vector<double> measure_window_means;
    double wall_time = 0.0; ///< seconds; never written to result files
};

struct ExperimentResult {
    std::string series;
    ExperimentConfig config;
    std::vector<SizeRecord> records;
    /// Least-squares slope of sqrt(mean_hops) against log2(n); 0 for one size.
    double slope_per_doubling = 0.0;
    /// Mean consecutive increment of sqrt(mean_hops); 0 for one size.
    double mean_increment = 0.0;
};

using ProgressLog = std::function<void(const std::string&)>;

/// Empty graph, warmup rewiring, then measure_walks further steps whose hop
/// counts are averaged. Measurement walks rewire the graph unless
/// cfg.frozen. Size i uses RNG stream i of cfg.seed.
ExperimentResult run_destination_sampling_experiment(const ExperimentConfig& cfg, const ProgressLog& log = {});

/// Static Kleinberg graph with alpha = -dimension, measured with uniform
/// (y, z) pairs and no rewiring. Directed rings with capacity 1 also get the
/// exact tau of the harmonic law when cfg.exact_baseline is set.
ExperimentResult run_kleinberg_baseline(const ExperimentConfig& cfg, const ProgressLog& log = {});

/// Greedy walks between uniform distinct pairs on a fixed graph.
SizeRecord measure_frozen(const ShortcutGraph& graph, std::size_t walks, Rng& rng, std::size_t batches = 100,
                          std::size_t windows = 10);

/// Shortcut counts by lattice distance.
struct LinkHistogram {
    std::size_t lattice_size = 0;
    std::size_t total = 0;
    std::vector<std::size_t> counts; ///< indexed by distance, counts[0] unused

    struct Row {
        Distance distance;
        std::size_t count;
        double inv_freq; ///< total / count
    };
    struct Bin {
        Distance first;
        Distance last;
        std::size_t count;
        double inv_freq; ///< inverse per-distance frequency: total * width / count
    };

    /// Distances with a non-zero count, ascending.
    std::vector<Row> rows() const;
    /// Fixed-width bins over 1..max distance; empty bins are skipped.
    std::vector<Bin> binned(Distance width) const;
    /// Adds another histogram of the same lattice.
    void merge(const LinkHistogram& other);
};

LinkHistogram link_distance_histogram(const ShortcutGraph& graph);

struct HittingEstimate {
    std::size_t samples = 0;
    std::vector<double> mean;      ///< entry x-1 estimates h(x)
    std::vector<double> std_error;
};

/// Monte-Carlo hitting probabilities on the directed ring of size n with
/// independent shortcuts drawn from ell: each sample starts at a uniform
/// vertex other than 0 and routes greedily to 0, drawing every visited
/// vertex's shortcut afresh (a walk never revisits a vertex, so this equals
/// sampling a whole graph per walk).
HittingEstimate estimate_hitting_mc(const DistanceDistribution& ell, std::size_t n, std::size_t samples, Rng& rng);

/// Time-averaged shortcut-length law and walk hitting law collected during
/// evolution, both indexed by distance - 1.
struct BalanceMeasurement {
    std::vector<double> link_freq;
    std::vector<double> hit_freq;
    std::size_t snapshots = 0;
    std::size_t walks = 0;

    /// Spearman correlation of link_freq and hit_freq over distances lo..hi.
    double rank_correlation(Distance lo, Distance hi) const;
};

/// Evolves `steps` times; every non-terminal walk vertex contributes one hit
/// at its distance to the destination, and the shortcut-length histogram is
/// accumulated every `snapshot_every` steps.
BalanceMeasurement measure_stationary_balance(ShortcutGraph& graph, std::size_t steps, const RewireParams& params,
                                              Rng& rng, std::size_t snapshot_every);

} // namespace swnav
