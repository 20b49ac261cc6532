// swnav: command-line front end for the destination-sampling simulator and
// the exact ring solver.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "swnav/analytic.hpp"
#include "swnav/experiment.hpp"
#include "swnav/report.hpp"
#include "swnav/snapshot.hpp"

using namespace swnav;

namespace {

enum class Verbosity { Quiet, Normal, Verbose };

struct Globals {
    std::optional<std::string> config_path;
    std::optional<std::string> out_path;
    std::string format = "csv";
    bool quiet = false;
    bool verbose = false;
    bool dry_run = false;
    std::optional<std::size_t> threads;

    Verbosity verbosity() const { return quiet ? Verbosity::Quiet : (verbose ? Verbosity::Verbose : Verbosity::Normal); }
};

Globals g_globals;

void log_info(const std::string& msg)
{
    if (g_globals.verbosity() != Verbosity::Quiet) std::cerr << "[swnav] " << msg << '\n';
}

void log_debug(const std::string& msg)
{
    if (g_globals.verbosity() == Verbosity::Verbose) std::cerr << "[swnav] " << msg << '\n';
}

/// Experiment flags; every field mirrors an ExperimentConfig key and only
/// overrides the config file when given.
struct ExperimentFlags {
    std::optional<std::string> topology;
    std::optional<std::size_t> n;
    std::optional<std::string> sizes;
    std::optional<std::size_t> capacity;
    std::optional<double> p;
    std::optional<std::string> warmup;
    std::optional<std::size_t> walks;
    std::optional<std::uint64_t> seed;
    bool frozen = false;
    std::optional<std::size_t> batches;
    std::optional<std::size_t> windows;
    std::optional<std::size_t> memory_cap_mb;
    bool no_exact = false;
};

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& f, bool with_sizes)
{
    cmd->add_option("--topology", f.topology, "ring (directed), biring or torus");
    cmd->add_option("--n", f.n, "lattice size (vertex count)");
    if (with_sizes) cmd->add_option("--sizes", f.sizes, "size list, e.g. 1000x2^10 or 1000,2000");
    cmd->add_option("--capacity", f.capacity, "shortcuts per vertex");
    cmd->add_option("--p", f.p, "replacement probability in (0,1)");
    cmd->add_option("--warmup", f.warmup, "warmup steps, absolute or per vertex (e.g. 10n)");
    cmd->add_option("--walks", f.walks, "measurement walks per size");
    cmd->add_option("--seed", f.seed, "master RNG seed");
    cmd->add_flag("--frozen", f.frozen, "measurement walks do not rewire the graph");
    cmd->add_option("--batches", f.batches, "batches for the batch-means standard error");
    cmd->add_option("--windows", f.windows, "windows of the convergence diagnostic");
    cmd->add_option("--memory-cap-mb", f.memory_cap_mb, "refuse sizes needing more memory");
    cmd->add_flag("--no-exact", f.no_exact, "skip the exact tau in baseline runs");
}

Json load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot read config file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

ExperimentConfig resolve_config(const ExperimentFlags& f)
{
    ExperimentConfig cfg;
    if (g_globals.config_path) cfg = config_from_json(load_config_file(*g_globals.config_path), cfg);
    if (f.topology) cfg.topology = lattice_kind_from_string(*f.topology);
    if (f.sizes) cfg.sizes = parse_sizes(*f.sizes);
    if (f.n) cfg.sizes = {*f.n};
    if (f.capacity) cfg.capacity = *f.capacity;
    if (f.p) cfg.p = *f.p;
    if (f.warmup) cfg.warmup = parse_step_count(*f.warmup);
    if (f.walks) cfg.measure_walks = *f.walks;
    if (f.seed) cfg.seed = *f.seed;
    if (f.frozen) cfg.frozen = true;
    if (f.batches) cfg.batches = *f.batches;
    if (f.windows) cfg.diagnostic_windows = *f.windows;
    if (f.memory_cap_mb) cfg.memory_cap_bytes = *f.memory_cap_mb << 20;
    if (f.no_exact) cfg.exact_baseline = false;
    if (g_globals.threads) cfg.threads = *g_globals.threads;
    cfg.validate();
    return cfg;
}

/// Sends data to --out (or an explicit path) or stdout.
void emit(const std::optional<std::string>& path, const std::function<void(std::ostream&)>& writer)
{
    if (!path || *path == "-") {
        writer(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + *path + "' for writing");
    writer(out);
    if (!out) throw InputError("failed writing '" + *path + "'");
    log_debug("wrote " + *path);
}

bool dry_run(const Json& echo)
{
    if (!g_globals.dry_run) return false;
    std::cout << echo.dump(2) << '\n';
    return true;
}

void emit_result(const ExperimentResult& result)
{
    emit(g_globals.out_path, [&](std::ostream& out) {
        if (g_globals.format == "json") write_result_json(out, result);
        else write_result_csv(out, result);
    });
    if (result.records.size() > 1) {
        log_info(result.series + ": sqrt(mean hops) slope per doubling " + format_number(result.slope_per_doubling) +
                 ", mean increment " + format_number(result.mean_increment));
    }
}

ShortcutGraph build_graph(const std::string& generator, const ExperimentConfig& cfg, std::optional<std::string> steps_text)
{
    const Topology topo = make_topology(cfg.topology, cfg.sizes.front());
    Rng rng = make_rng(cfg.seed, 0);
    if (generator == "empty") return empty_graph(topo, cfg.capacity);
    if (generator == "kleinberg") return sample_kleinberg(topo, -static_cast<double>(topo.dimension()), cfg.capacity, rng);
    if (generator == "harmonic") {
        if (topo.kind() != LatticeKind::DirectedRing) throw InputError("the harmonic generator needs the directed ring");
        return sample_from_distribution(topo, harmonic_distribution(topo.size()), cfg.capacity, rng);
    }
    if (generator == "evolved") {
        ShortcutGraph graph = empty_graph(topo, cfg.capacity);
        const std::size_t steps = steps_text ? parse_step_count(*steps_text).resolve(topo.size()) : cfg.warmup.resolve(topo.size());
        evolve(graph, steps, RewireParams{cfg.p, cfg.seed}, rng);
        return graph;
    }
    throw InputError("unknown generator '" + generator + "' (expected empty, kleinberg, harmonic or evolved)");
}

DistanceDistribution named_distribution(const std::string& name, std::size_t n, double tol, std::size_t max_iter)
{
    if (name == "harmonic") return harmonic_distribution(n);
    if (name == "uniform") return uniform_distribution(n);
    if (name == "balanced") {
        BalancedOptions opts;
        opts.tol = tol;
        opts.max_iter = max_iter;
        return solve_balanced(n, opts).ell;
    }
    throw InputError("unknown distribution '" + name + "' (expected harmonic, uniform or balanced)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Destination-sampling small-world simulator and exact ring solver"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", g_globals.config_path, "JSON configuration file; flags override it");
    app.add_option("--out", g_globals.out_path, "output path (default stdout)");
    app.add_option("--format", g_globals.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--quiet", g_globals.quiet, "no log output on stderr");
    app.add_flag("--verbose", g_globals.verbose, "more log output on stderr");
    app.add_flag("--dry-run", g_globals.dry_run, "print the resolved configuration and exit");
    app.add_option("--threads", g_globals.threads, "worker threads across sweep sizes")->check(CLI::PositiveNumber);

    std::function<void()> action;

    // evolve
    ExperimentFlags evolve_flags;
    std::optional<std::string> evolve_steps, evolve_dump, evolve_load;
    auto* evolve_cmd = app.add_subcommand("evolve", "rewire a graph and report mean hops");
    add_experiment_flags(evolve_cmd, evolve_flags, false);
    evolve_cmd->add_option("--steps", evolve_steps, "rewiring steps (default: warmup)");
    evolve_cmd->add_option("--dump", evolve_dump, "write the final graph snapshot here");
    evolve_cmd->add_option("--load", evolve_load, "start from this snapshot instead of an empty graph");
    evolve_cmd->callback([&] {
        action = [&] {
            const ExperimentConfig cfg = resolve_config(evolve_flags);
            Json echo = config_to_json(cfg);
            echo["command"] = "evolve";
            if (evolve_steps) echo["steps"] = *evolve_steps;
            if (evolve_load) echo["load"] = *evolve_load;
            if (dry_run(echo)) return;
            ShortcutGraph graph = evolve_load ? load_snapshot(*evolve_load) : empty_graph(make_topology(cfg.topology, cfg.sizes.front()), cfg.capacity);
            const std::size_t n = graph.size();
            const std::size_t steps = evolve_steps ? parse_step_count(*evolve_steps).resolve(n) : cfg.warmup.resolve(n);
            Rng rng = make_rng(cfg.seed, 0);
            const EvolveSummary summary = evolve(graph, steps, RewireParams{cfg.p, cfg.seed}, rng);
            emit(g_globals.out_path, [&](std::ostream& out) {
                if (g_globals.format == "json") {
                    Json j;
                    j["version"] = version_string();
                    j["config"] = echo;
                    j["n"] = n;
                    j["walks"] = summary.walks;
                    j["mean_hops"] = summary.mean_hops ? Json(*summary.mean_hops) : Json(nullptr);
                    j["shortcuts"] = graph.total_shortcuts();
                    out << j.dump(2) << '\n';
                    return;
                }
                out << "# " << version_string() << '\n' << "# config=" << echo.dump() << '\n';
                out << "n,walks,mean_hops,shortcuts\n";
                out << n << ',' << summary.walks << ',' << (summary.mean_hops ? format_number(*summary.mean_hops) : "") << ','
                    << graph.total_shortcuts() << '\n';
            });
            if (evolve_dump) save_snapshot(*evolve_dump, graph);
        };
    });

    // measure
    ExperimentFlags measure_flags;
    auto* measure_cmd = app.add_subcommand("measure", "destination-sampling protocol at one size");
    add_experiment_flags(measure_cmd, measure_flags, false);
    measure_cmd->callback([&] {
        action = [&] {
            const ExperimentConfig cfg = resolve_config(measure_flags);
            if (cfg.sizes.size() != 1) throw InputError("measure takes a single size; use sweep for several");
            if (dry_run(config_to_json(cfg))) return;
            emit_result(run_destination_sampling_experiment(cfg, log_debug));
        };
    });

    // sweep
    ExperimentFlags sweep_flags;
    bool sweep_baseline = false;
    std::optional<std::string> sweep_plot;
    auto* sweep_cmd = app.add_subcommand("sweep", "destination-sampling protocol over a size sweep");
    add_experiment_flags(sweep_cmd, sweep_flags, true);
    sweep_cmd->add_flag("--baseline", sweep_baseline, "also run the Kleinberg baseline (written to <out>.harmonic)");
    sweep_cmd->add_option("--plot-prefix", sweep_plot, "write two-column series files <prefix>-algorithm.dat etc.");
    sweep_cmd->callback([&] {
        action = [&] {
            const ExperimentConfig cfg = resolve_config(sweep_flags);
            Json echo = config_to_json(cfg);
            echo["baseline"] = sweep_baseline;
            if (dry_run(echo)) return;
            const ExperimentResult algo = run_destination_sampling_experiment(cfg, log_debug);
            emit_result(algo);
            if (sweep_plot) emit(*sweep_plot + "-algorithm.dat", [&](std::ostream& out) { write_plot_series(out, algo); });
            if (sweep_baseline) {
                const ExperimentResult base = run_kleinberg_baseline(cfg, log_debug);
                std::optional<std::string> path;
                if (g_globals.out_path && *g_globals.out_path != "-") path = *g_globals.out_path + ".harmonic";
                emit(path, [&](std::ostream& out) {
                    if (g_globals.format == "json") write_result_json(out, base);
                    else write_result_csv(out, base);
                });
                if (sweep_plot) emit(*sweep_plot + "-harmonic.dat", [&](std::ostream& out) { write_plot_series(out, base); });
            }
        };
    });

    // baseline
    ExperimentFlags baseline_flags;
    auto* baseline_cmd = app.add_subcommand("baseline", "static Kleinberg graphs over a size sweep");
    add_experiment_flags(baseline_cmd, baseline_flags, true);
    baseline_cmd->callback([&] {
        action = [&] {
            const ExperimentConfig cfg = resolve_config(baseline_flags);
            if (dry_run(config_to_json(cfg))) return;
            emit_result(run_kleinberg_baseline(cfg, log_debug));
        };
    });

    // solve-balanced
    std::size_t solve_n = 0;
    double solve_tol = 1e-12;
    std::size_t solve_max_iter = 100000;
    double solve_damping = 1.0;
    auto* solve_cmd = app.add_subcommand("solve-balanced", "balanced link distribution of the directed ring");
    solve_cmd->add_option("--n", solve_n, "ring size")->required();
    solve_cmd->add_option("--tol", solve_tol, "L1 residual tolerance");
    solve_cmd->add_option("--max-iter", solve_max_iter, "iteration limit");
    solve_cmd->add_option("--damping", solve_damping, "weight on the mapped distribution, (0,1]");
    solve_cmd->callback([&] {
        action = [&] {
            Json echo;
            echo["command"] = "solve-balanced";
            echo["n"] = solve_n;
            echo["tol"] = solve_tol;
            echo["max_iter"] = solve_max_iter;
            echo["damping"] = solve_damping;
            if (dry_run(echo)) return;
            BalancedOptions opts;
            opts.tol = solve_tol;
            opts.max_iter = solve_max_iter;
            opts.damping = solve_damping;
            const BalancedSolution sol = solve_balanced(solve_n, opts);
            const HittingVector h = hitting_from_links(sol.ell);
            echo["tau"] = sol.tau;
            echo["iterations"] = sol.iterations;
            echo["residual"] = sol.residual;
            emit(g_globals.out_path, [&](std::ostream& out) {
                if (g_globals.format == "json") write_vectors_json(out, sol.ell, h, echo);
                else write_vectors_csv(out, sol.ell, h, echo);
            });
            log_info("tau=" + format_number(sol.tau) + " iterations=" + std::to_string(sol.iterations) +
                     " residual=" + format_number(sol.residual));
        };
    });

    // exact-tau
    std::size_t exact_n = 0;
    std::string exact_dist = "harmonic";
    bool exact_vectors = false;
    auto* exact_cmd = app.add_subcommand("exact-tau", "exact expected greedy time on the directed ring");
    exact_cmd->add_option("--n", exact_n, "ring size")->required();
    exact_cmd->add_option("--dist", exact_dist, "harmonic, uniform or balanced");
    exact_cmd->add_flag("--vectors", exact_vectors, "emit d,ell,h instead of a single value");
    exact_cmd->callback([&] {
        action = [&] {
            Json echo;
            echo["command"] = "exact-tau";
            echo["n"] = exact_n;
            echo["dist"] = exact_dist;
            if (dry_run(echo)) return;
            const DistanceDistribution ell = named_distribution(exact_dist, exact_n, 1e-12, 100000);
            const HittingVector h = hitting_from_links(ell);
            const double t = tau(h);
            echo["tau"] = t;
            emit(g_globals.out_path, [&](std::ostream& out) {
                const bool json = g_globals.format == "json";
                if (exact_vectors) {
                    if (json) write_vectors_json(out, ell, h, echo);
                    else write_vectors_csv(out, ell, h, echo);
                } else if (json) {
                    Json j;
                    j["version"] = version_string();
                    j["config"] = echo;
                    j["n"] = exact_n;
                    j["dist"] = exact_dist;
                    j["tau"] = t;
                    j["sqrt_tau"] = std::sqrt(t);
                    out << j.dump(2) << '\n';
                } else {
                    out << "# " << version_string() << '\n' << "# config=" << echo.dump() << '\n';
                    out << "n,dist,tau,sqrt_tau\n" << exact_n << ',' << exact_dist << ',' << format_number(t) << ','
                        << format_number(std::sqrt(t)) << '\n';
                }
            });
        };
    });

    // histogram
    ExperimentFlags hist_flags;
    std::optional<std::string> hist_load, hist_reference, hist_steps;
    Distance hist_bin = 1;
    auto* hist_cmd = app.add_subcommand("histogram", "shortcut-length histogram of an evolved or loaded graph");
    add_experiment_flags(hist_cmd, hist_flags, false);
    hist_cmd->add_option("--load", hist_load, "histogram of this snapshot instead of a fresh evolution");
    hist_cmd->add_option("--steps", hist_steps, "rewiring steps (default: warmup)");
    hist_cmd->add_option("--bin", hist_bin, "distance bin width")->check(CLI::PositiveNumber);
    hist_cmd->add_option("--reference", hist_reference, "write reference lines d*ln(n) and d*H here");
    hist_cmd->callback([&] {
        action = [&] {
            const ExperimentConfig cfg = resolve_config(hist_flags);
            Json echo = config_to_json(cfg);
            echo["command"] = "histogram";
            echo["bin"] = hist_bin;
            if (hist_load) echo["load"] = *hist_load;
            if (hist_steps) echo["steps"] = *hist_steps;
            if (dry_run(echo)) return;
            const ShortcutGraph graph = hist_load ? load_snapshot(*hist_load) : build_graph("evolved", cfg, hist_steps);
            const LinkHistogram hist = link_distance_histogram(graph);
            emit(g_globals.out_path, [&](std::ostream& out) {
                if (g_globals.format == "json") write_histogram_json(out, hist, hist_bin, echo);
                else write_histogram_csv(out, hist, hist_bin, echo);
            });
            if (hist_reference) emit(*hist_reference, [&](std::ostream& out) { write_histogram_reference(out, hist, hist_bin); });
        };
    });

    // dump
    ExperimentFlags dump_flags;
    std::string dump_generator = "evolved";
    std::optional<std::string> dump_steps;
    auto* dump_cmd = app.add_subcommand("dump", "write a graph snapshot");
    add_experiment_flags(dump_cmd, dump_flags, false);
    dump_cmd->add_option("--generator", dump_generator, "empty, kleinberg, harmonic or evolved");
    dump_cmd->add_option("--steps", dump_steps, "rewiring steps for the evolved generator (default: warmup)");
    dump_cmd->callback([&] {
        action = [&] {
            const ExperimentConfig cfg = resolve_config(dump_flags);
            Json echo = config_to_json(cfg);
            echo["command"] = "dump";
            echo["generator"] = dump_generator;
            if (dry_run(echo)) return;
            const ShortcutGraph graph = build_graph(dump_generator, cfg, dump_steps);
            emit(g_globals.out_path, [&](std::ostream& out) { write_snapshot(out, graph); });
        };
    });

    // load
    std::string load_path;
    auto* load_cmd = app.add_subcommand("load", "validate a snapshot and re-emit it");
    load_cmd->add_option("--in", load_path, "snapshot file")->required();
    load_cmd->callback([&] {
        action = [&] {
            Json echo;
            echo["command"] = "load";
            echo["in"] = load_path;
            if (dry_run(echo)) return;
            const ShortcutGraph graph = load_snapshot(load_path);
            graph.check_invariants();
            log_info("loaded " + to_string(graph.topology().kind()) + " n=" + std::to_string(graph.size()) +
                     " shortcuts=" + std::to_string(graph.total_shortcuts()));
            emit(g_globals.out_path, [&](std::ostream& out) { write_snapshot(out, graph); });
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        action();
    } catch (const InputError& e) {
        std::cerr << "swnav: error: " << e.what() << '\n';
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "swnav: error: " << e.what() << '\n';
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "swnav: error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "swnav: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
