#include "swnav/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace swnav {

std::string version_string()
{
    return std::string("swnav ") + SWNAV_VERSION;
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Json config_to_json(const ExperimentConfig& cfg)
{
    Json j;
    j["topology"] = to_string(cfg.topology);
    j["sizes"] = cfg.sizes;
    j["capacity"] = cfg.capacity;
    j["p"] = cfg.p;
    j["warmup"] = cfg.warmup.to_string();
    j["walks"] = cfg.measure_walks;
    j["seed"] = cfg.seed;
    j["frozen"] = cfg.frozen;
    j["batches"] = cfg.batches;
    j["windows"] = cfg.diagnostic_windows;
    j["memory_cap_mb"] = cfg.memory_cap_bytes >> 20;
    j["exact_baseline"] = cfg.exact_baseline;
    return j;
}

ExperimentConfig config_from_json(const Json& j, ExperimentConfig cfg)
{
    if (!j.is_object()) throw InputError("configuration must be a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "topology") cfg.topology = lattice_kind_from_string(value.get<std::string>());
            else if (key == "sizes") {
                cfg.sizes = value.is_string() ? parse_sizes(value.get<std::string>()) : value.get<std::vector<std::size_t>>();
            }
            else if (key == "capacity") cfg.capacity = value.get<std::size_t>();
            else if (key == "p") cfg.p = value.get<double>();
            else if (key == "warmup") {
                cfg.warmup = value.is_string() ? parse_step_count(value.get<std::string>())
                                               : StepCount{value.get<std::size_t>(), false};
            }
            else if (key == "walks") cfg.measure_walks = value.get<std::size_t>();
            else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
            else if (key == "frozen") cfg.frozen = value.get<bool>();
            else if (key == "batches") cfg.batches = value.get<std::size_t>();
            else if (key == "windows") cfg.diagnostic_windows = value.get<std::size_t>();
            else if (key == "memory_cap_mb") cfg.memory_cap_bytes = value.get<std::size_t>() << 20;
            else if (key == "exact_baseline") cfg.exact_baseline = value.get<bool>();
            else throw InputError("unknown configuration key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad configuration value: ") + e.what());
    }
    return cfg;
}

namespace {

void write_echo(std::ostream& out, const Json& echo)
{
    out << "# " << version_string() << '\n';
    out << "# config=" << echo.dump() << '\n';
}

} // namespace

void write_result_csv(std::ostream& out, const ExperimentResult& result)
{
    Json echo = config_to_json(result.config);
    echo["series"] = result.series;
    write_echo(out, echo);
    out << "n,mean_hops,sqrt_mean_hops,std_error,walks,seed,batch_std_error,exact_tau\n";
    for (const auto& r : result.records) {
        out << r.n << ',' << format_number(r.mean_hops) << ',' << format_number(r.sqrt_mean_hops) << ','
            << format_number(r.std_error) << ',' << r.walks << ',' << result.config.seed << ','
            << format_number(r.batch_std_error) << ',' << (r.exact_tau ? format_number(*r.exact_tau) : "") << '\n';
    }
}

void write_result_json(std::ostream& out, const ExperimentResult& result)
{
    Json j;
    j["version"] = version_string();
    j["series"] = result.series;
    j["config"] = config_to_json(result.config);
    Json records = Json::array();
    for (const auto& r : result.records) {
        Json rec;
        rec["n"] = r.n;
        rec["side"] = r.side;
        rec["warmup_steps"] = r.warmup_steps;
        rec["walks"] = r.walks;
        rec["mean_hops"] = r.mean_hops;
        rec["sqrt_mean_hops"] = r.sqrt_mean_hops;
        rec["std_error"] = r.std_error;
        rec["batch_std_error"] = r.batch_std_error;
        rec["exact_tau"] = r.exact_tau ? Json(*r.exact_tau) : Json(nullptr);
        rec["warmup_window_means"] = r.warmup_window_means;
        rec["measure_window_means"] = r.measure_window_means;
        records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);
    j["slope_per_doubling"] = result.slope_per_doubling;
    j["mean_increment"] = result.mean_increment;
    out << j.dump(2) << '\n';
}

double plot_base(LatticeKind kind)
{
    return kind == LatticeKind::Torus2D ? 10000.0 : 1000.0;
}

void write_plot_series(std::ostream& out, const ExperimentResult& result)
{
    out << "# " << version_string() << " series=" << result.series << '\n';
    out << "# log2(n/" << plot_base(result.config.topology) << ") sqrt_mean_hops\n";
    for (const auto& r : result.records) {
        out << format_number(std::log2(static_cast<double>(r.n) / plot_base(result.config.topology))) << ' '
            << format_number(r.sqrt_mean_hops) << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const LinkHistogram& hist, Distance bin_width, const Json& echo)
{
    write_echo(out, echo);
    out << "distance,count,inv_freq\n";
    if (bin_width <= 1) {
        for (const auto& row : hist.rows()) out << row.distance << ',' << row.count << ',' << format_number(row.inv_freq) << '\n';
        return;
    }
    for (const auto& bin : hist.binned(bin_width)) out << bin.first << ',' << bin.count << ',' << format_number(bin.inv_freq) << '\n';
}

void write_histogram_reference(std::ostream& out, const LinkHistogram& hist, Distance bin_width)
{
    const auto n = static_cast<double>(hist.lattice_size);
    double harmonic = 0.0;
    for (std::size_t d = 1; d < hist.counts.size(); ++d) harmonic += 1.0 / static_cast<double>(d);
    out << "# " << version_string() << '\n';
    out << "# distance d*ln(n) d*H\n";
    const Distance step = bin_width == 0 ? 1 : bin_width;
    for (std::size_t d = 1; d < hist.counts.size(); d += step) {
        const auto x = static_cast<double>(d);
        out << d << ' ' << format_number(x * std::log(n)) << ' ' << format_number(x * harmonic) << '\n';
    }
}

void write_vectors_csv(std::ostream& out, const DistanceDistribution& ell, const HittingVector& h, const Json& echo)
{
    write_echo(out, echo);
    out << "d,ell,h\n";
    for (Distance d = 1; d <= ell.max_distance(); ++d) {
        out << d << ',' << format_number(ell(d)) << ',' << format_number(h(d)) << '\n';
    }
}

void write_vectors_json(std::ostream& out, const DistanceDistribution& ell, const HittingVector& h, const Json& echo)
{
    Json j;
    j["version"] = version_string();
    j["config"] = echo;
    j["ell"] = std::vector<double>(ell.weights().begin(), ell.weights().end());
    j["h"] = std::vector<double>(h.values().begin(), h.values().end());
    out << j.dump(2) << '\n';
}

void write_histogram_json(std::ostream& out, const LinkHistogram& hist, Distance bin_width, const Json& echo)
{
    Json j;
    j["version"] = version_string();
    j["config"] = echo;
    j["total"] = hist.total;
    Json rows = Json::array();
    if (bin_width <= 1) {
        for (const auto& r : hist.rows()) rows.push_back({{"distance", r.distance}, {"count", r.count}, {"inv_freq", r.inv_freq}});
    } else {
        for (const auto& b : hist.binned(bin_width)) {
            rows.push_back({{"distance", b.first}, {"last", b.last}, {"count", b.count}, {"inv_freq", b.inv_freq}});
        }
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
}

} // namespace swnav
