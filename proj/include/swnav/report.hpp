#pragma once

// Result files. Every file starts with '#' comment lines carrying the tool
// version and the resolved configuration, so a file is enough to rerun it.

#include "swnav/analytic.hpp"
#include "swnav/experiment.hpp"

#include <iosfwd>
#include <json.hpp>

namespace swnav {

using Json = nlohmann::ordered_json;

std::string version_string();

Json config_to_json(const ExperimentConfig& cfg);
/// Overlays the fields present in `j` on `base`; unknown keys are an error.
ExperimentConfig config_from_json(const Json& j, ExperimentConfig base = {});

/// Columns: n,mean_hops,sqrt_mean_hops,std_error,walks,seed, then the
/// extras batch_std_error,exact_tau (empty when absent).
void write_result_csv(std::ostream& out, const ExperimentResult& result);
void write_result_json(std::ostream& out, const ExperimentResult& result);

/// Two-column plot series: log2(n / base) and sqrt(mean_hops), with
/// base 1000 on rings and 10000 on the torus.
void write_plot_series(std::ostream& out, const ExperimentResult& result);
double plot_base(LatticeKind kind);

/// Columns distance,count,inv_freq. With bin_width > 1 the distance column
/// holds the first distance of each bin and inv_freq is per unit distance.
void write_histogram_csv(std::ostream& out, const LinkHistogram& hist, Distance bin_width, const Json& echo);

/// Same rows as write_histogram_csv under "rows".
void write_histogram_json(std::ostream& out, const LinkHistogram& hist, Distance bin_width, const Json& echo);
/// Reference lines for the inverse link frequency: d * ln(n) and the exact
/// harmonic inverse d * H_{n-1}, one row per histogram row.
void write_histogram_reference(std::ostream& out, const LinkHistogram& hist, Distance bin_width);

/// Columns d,ell,h.
void write_vectors_csv(std::ostream& out, const DistanceDistribution& ell, const HittingVector& h, const Json& echo);

/// "%.12g".
/// {"version", "config", "ell", "h"}; ell[0] and h[0] belong to d = 1.
void write_vectors_json(std::ostream& out, const DistanceDistribution& ell, const HittingVector& h, const Json& echo);

std::string format_number(double v);

} // namespace swnav
