#include "swnav/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "swnav/analytic.hpp"
#include "swnav/stats.hpp"

namespace swnav {

void ExperimentConfig::validate() const
{
    if (sizes.empty()) throw InputError("at least one size is required");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2) throw InputError("sizes must be at least 2");
        if (i > 0 && sizes[i] <= sizes[i - 1]) throw InputError("sizes must be strictly increasing");
    }
    if (capacity == 0) throw InputError("capacity must be at least 1");
    RewireParams{p, seed}.validate();
    if (measure_walks == 0) throw InputError("measure_walks must be at least 1");
    if (threads == 0) throw InputError("threads must be at least 1");
    if (topology == LatticeKind::Torus2D) {
        for (std::size_t i = 1; i < sizes.size(); ++i) {
            if (make_topology(topology, sizes[i]).size() <= make_topology(topology, sizes[i - 1]).size()) {
                throw InputError("torus sizes collapse to the same side length");
            }
        }
    }
}

Topology make_topology(LatticeKind kind, std::size_t n)
{
    switch (kind) {
    case LatticeKind::DirectedRing: return Topology::directed_ring(n);
    case LatticeKind::BidirectionalRing: return Topology::bidirectional_ring(n);
    case LatticeKind::Torus2D: break;
    }
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    return Topology::torus(side);
}

std::size_t estimated_memory(const ExperimentConfig& cfg, std::size_t n, bool baseline)
{
    std::size_t bytes = ShortcutGraph::memory_bytes(n, cfg.capacity);
    bytes += cfg.measure_walks * sizeof(double);
    if (baseline) {
        // offset table, sampling weights and prefix sums
        bytes += n * (2 * sizeof(std::uint32_t) + 2 * sizeof(double));
        if (cfg.exact_baseline) bytes += 4 * n * sizeof(double);
    }
    return bytes;
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<double> window_means(std::span<const double> samples, std::size_t windows)
{
    std::vector<double> out;
    if (samples.empty() || windows == 0) return out;
    windows = std::min(windows, samples.size());
    const std::size_t base = samples.size() / windows;
    std::size_t at = 0;
    for (std::size_t w = 0; w < windows; ++w) {
        const std::size_t len = w + 1 == windows ? samples.size() - at : base;
        double acc = 0.0;
        for (std::size_t i = at; i < at + len; ++i) acc += samples[i];
        out.push_back(acc / static_cast<double>(len));
        at += len;
    }
    return out;
}

void summarize(SizeRecord& rec, std::span<const double> hops, std::size_t batches, std::size_t windows)
{
    RunningStats stats;
    for (double h : hops) stats.add(h);
    rec.walks = hops.size();
    rec.mean_hops = stats.mean();
    rec.sqrt_mean_hops = std::sqrt(stats.mean());
    rec.std_error = stats.std_error();
    rec.batch_std_error = batch_means_std_error(hops, batches);
    rec.measure_window_means = window_means(hops, windows);
}

void finish(ExperimentResult& result)
{
    if (result.records.size() < 2) return;
    std::vector<double> xs, ys;
    for (const auto& r : result.records) {
        xs.push_back(std::log2(static_cast<double>(r.n)));
        ys.push_back(r.sqrt_mean_hops);
    }
    result.slope_per_doubling = fit_line(xs, ys).slope;
    result.mean_increment = mean_increment(ys);
}

/// Runs job(i) for every size index on up to cfg.threads workers. Each job
/// owns its RNG stream, so the outcome is independent of scheduling.
template <class Job>
void for_each_size(const ExperimentConfig& cfg, Job job)
{
    const std::size_t count = cfg.sizes.size();
    const std::size_t workers = std::min(cfg.threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        job(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

void guard_memory(const ExperimentConfig& cfg, std::size_t n, bool baseline)
{
    const std::size_t need = estimated_memory(cfg, n, baseline);
    if (need > cfg.memory_cap_bytes) {
        throw ResourceError("size " + std::to_string(n) + " needs about " + std::to_string(need >> 20) +
                            " MiB, above the cap of " + std::to_string(cfg.memory_cap_bytes >> 20) + " MiB");
    }
}

} // namespace

SizeRecord measure_frozen(const ShortcutGraph& graph, std::size_t walks, Rng& rng, std::size_t batches,
                          std::size_t windows)
{
    const auto n = static_cast<Vertex>(graph.size());
    std::vector<double> hops(walks);
    for (std::size_t w = 0; w < walks; ++w) {
        Vertex y = 0, z = 0;
        do {
            y = uniform_index(rng, n);
            z = uniform_index(rng, n);
        } while (y == z);
        hops[w] = static_cast<double>(greedy_hops(graph, y, z));
    }
    SizeRecord rec;
    rec.n = graph.size();
    rec.side = graph.topology().side();
    summarize(rec, hops, batches, windows);
    return rec;
}

ExperimentResult run_destination_sampling_experiment(const ExperimentConfig& cfg, const ProgressLog& log)
{
    cfg.validate();
    for (std::size_t n : cfg.sizes) guard_memory(cfg, make_topology(cfg.topology, n).size(), false);

    ExperimentResult result{"destination-sampling", cfg, std::vector<SizeRecord>(cfg.sizes.size()), 0.0, 0.0};
    const RewireParams params{cfg.p, cfg.seed};

    for_each_size(cfg, [&](std::size_t i) {
        const auto t0 = Clock::now();
        const Topology topo = make_topology(cfg.topology, cfg.sizes[i]);
        ShortcutGraph graph = empty_graph(topo, cfg.capacity);
        Rng rng = make_rng(cfg.seed, i);

        SizeRecord rec;
        rec.n = topo.size();
        rec.side = topo.side();
        rec.warmup_steps = cfg.warmup.resolve(topo.size());

        std::vector<double> warm_hops;
        warm_hops.reserve(rec.warmup_steps);
        evolve(graph, rec.warmup_steps, params, rng,
               [&](const WalkRecord& w) { warm_hops.push_back(static_cast<double>(w.hops())); });
        rec.warmup_window_means = window_means(warm_hops, cfg.diagnostic_windows);
        warm_hops = {};

        if (cfg.frozen) {
            SizeRecord measured = measure_frozen(graph, cfg.measure_walks, rng, cfg.batches, cfg.diagnostic_windows);
            measured.warmup_steps = rec.warmup_steps;
            measured.warmup_window_means = std::move(rec.warmup_window_means);
            rec = std::move(measured);
        } else {
            std::vector<double> hops;
            hops.reserve(cfg.measure_walks);
            evolve(graph, cfg.measure_walks, params, rng,
                   [&](const WalkRecord& w) { hops.push_back(static_cast<double>(w.hops())); });
            summarize(rec, hops, cfg.batches, cfg.diagnostic_windows);
        }
        rec.wall_time = std::chrono::duration<double>(Clock::now() - t0).count();
        if (log) {
            log("destination-sampling n=" + std::to_string(rec.n) + " mean_hops=" + std::to_string(rec.mean_hops) +
                " (" + std::to_string(rec.wall_time) + " s)");
        }
        result.records[i] = std::move(rec);
    });
    finish(result);
    return result;
}

ExperimentResult run_kleinberg_baseline(const ExperimentConfig& cfg, const ProgressLog& log)
{
    cfg.validate();
    for (std::size_t n : cfg.sizes) guard_memory(cfg, make_topology(cfg.topology, n).size(), true);

    ExperimentResult result{"harmonic", cfg, std::vector<SizeRecord>(cfg.sizes.size()), 0.0, 0.0};
    for_each_size(cfg, [&](std::size_t i) {
        const auto t0 = Clock::now();
        const Topology topo = make_topology(cfg.topology, cfg.sizes[i]);
        Rng rng = make_rng(cfg.seed, i);
        const double alpha = -static_cast<double>(topo.dimension());
        const ShortcutGraph graph = sample_kleinberg(topo, alpha, cfg.capacity, rng);
        SizeRecord rec = measure_frozen(graph, cfg.measure_walks, rng, cfg.batches, cfg.diagnostic_windows);
        if (cfg.exact_baseline && topo.kind() == LatticeKind::DirectedRing && cfg.capacity == 1) {
            rec.exact_tau = tau(hitting_from_links(harmonic_distribution(topo.size())));
        }
        rec.wall_time = std::chrono::duration<double>(Clock::now() - t0).count();
        if (log) {
            log("harmonic n=" + std::to_string(rec.n) + " mean_hops=" + std::to_string(rec.mean_hops) + " (" +
                std::to_string(rec.wall_time) + " s)");
        }
        result.records[i] = std::move(rec);
    });
    finish(result);
    return result;
}

std::vector<LinkHistogram::Row> LinkHistogram::rows() const
{
    std::vector<Row> out;
    for (std::size_t d = 1; d < counts.size(); ++d) {
        if (counts[d] == 0) continue;
        out.push_back(Row{static_cast<Distance>(d), counts[d],
                          static_cast<double>(total) / static_cast<double>(counts[d])});
    }
    return out;
}

std::vector<LinkHistogram::Bin> LinkHistogram::binned(Distance width) const
{
    if (width == 0) throw InputError("bin width must be positive");
    std::vector<Bin> out;
    const std::size_t max_d = counts.empty() ? 0 : counts.size() - 1;
    for (std::size_t first = 1; first <= max_d; first += width) {
        const std::size_t last = std::min<std::size_t>(first + width - 1, max_d);
        std::size_t c = 0;
        for (std::size_t d = first; d <= last; ++d) c += counts[d];
        if (c == 0) continue;
        const double span = static_cast<double>(last - first + 1);
        out.push_back(Bin{static_cast<Distance>(first), static_cast<Distance>(last), c,
                          static_cast<double>(total) * span / static_cast<double>(c)});
    }
    return out;
}

void LinkHistogram::merge(const LinkHistogram& other)
{
    if (other.lattice_size != lattice_size || other.counts.size() != counts.size()) {
        throw InputError("cannot merge histograms of different lattices");
    }
    for (std::size_t d = 0; d < counts.size(); ++d) counts[d] += other.counts[d];
    total += other.total;
}

LinkHistogram link_distance_histogram(const ShortcutGraph& graph)
{
    const Topology& topo = graph.topology();
    LinkHistogram hist;
    hist.lattice_size = topo.size();
    hist.counts.assign(static_cast<std::size_t>(topo.max_distance()) + 1, 0);
    for (Vertex x = 0; x < graph.size(); ++x) {
        for (Vertex t : graph.shortcuts(x)) {
            ++hist.counts[topo.distance_unchecked(x, t)];
            ++hist.total;
        }
    }
    return hist;
}

HittingEstimate estimate_hitting_mc(const DistanceDistribution& ell, std::size_t n, std::size_t samples, Rng& rng)
{
    if (samples == 0) throw InputError("need at least one sample");
    const Topology topo = Topology::directed_ring(n);
    ell.check_matches(topo);
    const DistanceSampler draw(ell);
    const OffsetTable table(topo);
    ShortcutGraph graph(topo, 1);

    std::vector<std::size_t> hits(n - 1, 0);
    const auto starts = static_cast<Vertex>(n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        Vertex at = 1 + uniform_index(rng, starts);
        while (at != 0) {
            ++hits[at - 1];
            graph.set_slot_unchecked(at, 0, table.translate(at, draw(rng)));
            at = greedy_step(graph, at, 0);
        }
    }

    HittingEstimate est;
    est.samples = samples;
    est.mean.resize(n - 1);
    est.std_error.resize(n - 1);
    const auto total = static_cast<double>(samples);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double m = static_cast<double>(hits[i]) / total;
        est.mean[i] = m;
        est.std_error[i] = samples > 1 ? std::sqrt(m * (1.0 - m) / (total - 1.0)) : 0.0;
    }
    return est;
}

double BalanceMeasurement::rank_correlation(Distance lo, Distance hi) const
{
    if (lo == 0 || hi < lo || hi > link_freq.size()) throw InputError("distance window out of range");
    std::span<const double> a(link_freq.data() + lo - 1, hi - lo + 1);
    std::span<const double> b(hit_freq.data() + lo - 1, hi - lo + 1);
    return spearman(a, b);
}

BalanceMeasurement measure_stationary_balance(ShortcutGraph& graph, std::size_t steps, const RewireParams& params,
                                              Rng& rng, std::size_t snapshot_every)
{
    if (snapshot_every == 0) throw InputError("snapshot interval must be positive");
    const Topology& topo = graph.topology();
    const std::size_t classes = topo.max_distance();
    std::vector<double> hit_counts(classes, 0.0);
    LinkHistogram links = link_distance_histogram(empty_graph(topo, 1));
    BalanceMeasurement out;

    std::size_t step = 0;
    evolve(graph, steps, params, rng, [&](const WalkRecord& walk) {
        for (std::size_t i = 0; i + 1 < walk.path.size(); ++i) {
            hit_counts[topo.distance_unchecked(walk.path[i], walk.destination) - 1] += 1.0;
        }
        if (++step % snapshot_every == 0) {
            links.merge(link_distance_histogram(graph));
            ++out.snapshots;
        }
    });
    out.walks = steps;

    double hit_total = 0.0;
    for (double c : hit_counts) hit_total += c;
    out.hit_freq.resize(classes, 0.0);
    out.link_freq.resize(classes, 0.0);
    for (std::size_t d = 0; d < classes; ++d) {
        if (hit_total > 0.0) out.hit_freq[d] = hit_counts[d] / hit_total;
        if (links.total > 0) out.link_freq[d] = static_cast<double>(links.counts[d + 1]) / static_cast<double>(links.total);
    }
    return out;
}

} // namespace swnav
