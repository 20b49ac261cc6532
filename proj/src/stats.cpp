#include "swnav/stats.hpp"

#include <cmath>
#include <stdexcept>

#include <gsl/gsl_cdf.h>
#include <gsl/gsl_fit.h>
#include <gsl/gsl_statistics_double.h>

#include "swnav/lattice.hpp"

namespace swnav {

void RunningStats::add(double x)
{
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
}

double RunningStats::variance() const
{
    return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

double RunningStats::std_dev() const
{
    return std::sqrt(variance());
}

double RunningStats::std_error() const
{
    return count_ == 0 ? 0.0 : std_dev() / std::sqrt(static_cast<double>(count_));
}

double batch_means_std_error(std::span<const double> samples, std::size_t batches)
{
    if (batches < 2 || samples.size() < batches) return 0.0;
    const std::size_t per = samples.size() / batches;
    RunningStats means;
    for (std::size_t b = 0; b < batches; ++b) {
        double acc = 0.0;
        for (std::size_t i = b * per; i < (b + 1) * per; ++i) acc += samples[i];
        means.add(acc / static_cast<double>(per));
    }
    return means.std_error();
}

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys)
{
    if (xs.size() != ys.size() || xs.size() < 2) throw InputError("line fit needs two equal-length series of at least 2 points");
    double c0 = 0, c1 = 0, cov00 = 0, cov01 = 0, cov11 = 0, sumsq = 0;
    gsl_fit_linear(xs.data(), 1, ys.data(), 1, xs.size(), &c0, &c1, &cov00, &cov01, &cov11, &sumsq);
    const double mean_y = gsl_stats_mean(ys.data(), 1, ys.size());
    double tss = 0.0;
    for (double y : ys) tss += (y - mean_y) * (y - mean_y);
    return LinearFit{c0, c1, tss > 0.0 ? 1.0 - sumsq / tss : 1.0};
}

double spearman(std::span<const double> xs, std::span<const double> ys)
{
    if (xs.size() != ys.size() || xs.size() < 2) throw InputError("rank correlation needs two equal-length series");
    std::vector<double> a(xs.begin(), xs.end());
    std::vector<double> b(ys.begin(), ys.end());
    std::vector<double> work(2 * xs.size());
    return gsl_stats_spearman(a.data(), 1, b.data(), 1, xs.size(), work.data());
}

ChiSquare chi_square_gof(std::span<const double> observed, std::span<const double> expected_prob)
{
    if (observed.size() != expected_prob.size()) throw InputError("chi-square inputs differ in length");
    double total = 0.0;
    for (double o : observed) total += o;
    ChiSquare out;
    std::size_t cells = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = expected_prob[i] * total;
        if (e <= 0.0) {
            if (observed[i] > 0.0) {
                out.statistic = INFINITY;
                out.p_value = 0.0;
                return out;
            }
            continue;
        }
        out.statistic += (observed[i] - e) * (observed[i] - e) / e;
        ++cells;
    }
    out.dof = cells > 0 ? cells - 1 : 0;
    out.p_value = out.dof > 0 ? gsl_cdf_chisq_Q(out.statistic, static_cast<double>(out.dof)) : 1.0;
    return out;
}

ChiSquare chi_square_two_sample(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) throw InputError("chi-square inputs differ in length");
    double na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += a[i];
        nb += b[i];
    }
    ChiSquare out;
    std::size_t cells = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double row = a[i] + b[i];
        if (row <= 0.0) continue;
        const double ea = row * na / (na + nb);
        const double eb = row * nb / (na + nb);
        out.statistic += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
        ++cells;
    }
    out.dof = cells > 0 ? cells - 1 : 0;
    out.p_value = out.dof > 0 ? gsl_cdf_chisq_Q(out.statistic, static_cast<double>(out.dof)) : 1.0;
    return out;
}

double mean_increment(std::span<const double> ys)
{
    if (ys.size() < 2) throw InputError("need at least two points for an increment");
    return (ys.back() - ys.front()) / static_cast<double>(ys.size() - 1);
}

} // namespace swnav
