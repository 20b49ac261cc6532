#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace swnav {

/// Welford accumulator for hop counts and similar samples.
class RunningStats {
public:
    void add(double x);
    std::size_t count() const { return count_; }
    double mean() const { return mean_; }
    /// Sample variance (n - 1 denominator); 0 for fewer than two samples.
    double variance() const;
    double std_dev() const;
    /// std_dev / sqrt(count).
    double std_error() const;

private:
    std::size_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Standard error of the mean from `batches` contiguous batch means; honest
/// under autocorrelation as long as batches are longer than the correlation
/// time. Returns 0 when there are fewer samples than batches.
double batch_means_std_error(std::span<const double> samples, std::size_t batches = 100);

struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y = intercept + slope * x.
LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

/// Spearman rank correlation (average ranks for ties).
double spearman(std::span<const double> xs, std::span<const double> ys);

/// Pearson chi-square goodness of fit of observed counts against expected
/// probabilities. Cells with zero expectation must have zero count.
struct ChiSquare {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
};
ChiSquare chi_square_gof(std::span<const double> observed, std::span<const double> expected_prob);

/// Two-sample chi-square homogeneity test on two count histograms.
ChiSquare chi_square_two_sample(std::span<const double> a, std::span<const double> b);

/// Mean of consecutive differences, (ys.back() - ys.front()) / (size - 1).
double mean_increment(std::span<const double> ys);

} // namespace swnav
