#include "swnav/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "swnav/numeric.hpp"

namespace swnav {

namespace {

constexpr std::size_t kRowBlock = 512;
constexpr std::size_t kColBlock = 2048;

inline double dot(const double* __restrict a, const double* __restrict b, std::size_t len)
{
    double acc = 0.0;
#pragma omp simd reduction(+ : acc)
    for (std::size_t i = 0; i < len; ++i) acc += a[i] * b[i];
    return acc;
}

} // namespace

HittingVector::HittingVector(std::vector<double> values) : values_(std::move(values))
{
    if (values_.empty()) throw InputError("hitting vector needs at least one entry");
}

HittingVector hitting_from_links(const DistanceDistribution& ell)
{
    const std::size_t n = static_cast<std::size_t>(ell.max_distance()) + 1;

    // 1-based views: link[j] = ell(j), hit[x] = h(x), hit[n] = 0.
    std::vector<double> link(n, 0.0);
    std::copy(ell.weights().begin(), ell.weights().end(), link.begin() + 1);
    std::vector<double> hit(n + 1, 0.0);

    // tail[k] = sum_{xi=k}^{n-1} ell(xi); tail[n] = tail[n+1] = 0
    std::vector<double> tail(n + 2, 0.0);
    for (std::size_t k = n - 1; k >= 1; --k) tail[k] = tail[k + 1] + link[k];

    const double start = 1.0 / static_cast<double>(n - 1);
    std::vector<double> carried(kRowBlock);

    for (std::size_t hi = n; hi > 1;) {
        const std::size_t lo = hi > kRowBlock + 1 ? hi - kRowBlock : 1;
        const std::size_t rows = hi - lo;
        std::fill(carried.begin(), carried.begin() + static_cast<std::ptrdiff_t>(rows), 0.0);

        // Contributions from the already solved range [hi, n).
        for (std::size_t col = hi; col < n; col += kColBlock) {
            const std::size_t len = std::min(kColBlock, n - col);
            for (std::size_t r = 0; r < rows; ++r) {
                const std::size_t x = lo + r;
                carried[r] += dot(hit.data() + col, link.data() + (col - x), len);
            }
        }

        for (std::size_t x = hi - 1; x >= lo; --x) {
            const double inside = dot(hit.data() + x + 1, link.data() + 1, hi - 1 - x);
            hit[x] = carried[x - lo] + inside + hit[x + 1] * tail[x + 2] + start;
            if (x == lo) break;
        }
        hi = lo;
    }

    return HittingVector(std::vector<double>(hit.begin() + 1, hit.begin() + static_cast<std::ptrdiff_t>(n)));
}

double tau(const HittingVector& h)
{
    return compensated_sum(h.values());
}

DistanceDistribution balance_map(const DistanceDistribution& ell)
{
    const HittingVector h = hitting_from_links(ell);
    const double total = tau(h);
    std::vector<double> next(h.values().begin(), h.values().end());
    for (double& v : next) v /= total;
    return DistanceDistribution::from_weights(std::move(next));
}

DistanceDistribution harmonic_distribution(std::size_t n)
{
    if (n < 2) throw InputError("ring size must be at least 2");
    std::vector<double> w(n - 1);
    for (std::size_t d = 1; d < n; ++d) w[d - 1] = 1.0 / static_cast<double>(d);
    return DistanceDistribution::from_weights(std::move(w));
}

DistanceDistribution uniform_distribution(std::size_t n)
{
    if (n < 2) throw InputError("ring size must be at least 2");
    return DistanceDistribution::from_weights(std::vector<double>(n - 1, 1.0));
}

namespace {

double l1_distance(std::span<const double> a, std::span<const double> b)
{
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = std::abs(a[i] - b[i]);
    return compensated_sum(diff);
}

} // namespace

BalancedSolution solve_balanced_from(const DistanceDistribution& start, const BalancedOptions& options)
{
    if (!(options.tol > 0.0)) throw InputError("tolerance must be positive");
    if (!(options.damping > 0.0 && options.damping <= 1.0)) throw InputError("damping must lie in (0, 1]");

    DistanceDistribution ell = start;
    double lambda = options.damping;
    std::vector<double> history;
    double residual = 0.0;
    for (std::size_t it = 1; it <= options.max_iter; ++it) {
        const HittingVector h = hitting_from_links(ell);
        const double t = tau(h);
        std::vector<double> mapped(h.values().begin(), h.values().end());
        for (double& v : mapped) v /= t;
        residual = l1_distance(mapped, ell.weights());
        history.push_back(residual);
        if (residual < options.tol) {
            return BalancedSolution{std::move(ell), t, it, residual, lambda, std::move(history)};
        }
        if (options.auto_damp && lambda > 0.5 && history.size() > 1 && residual > history[history.size() - 2]) {
            lambda = 0.5;
        }
        if (lambda < 1.0) {
            const auto cur = ell.weights();
            for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = (1.0 - lambda) * cur[i] + lambda * mapped[i];
        }
        ell = DistanceDistribution::from_weights(std::move(mapped));
    }
    throw ConvergenceError("balanced iteration did not converge within " + std::to_string(options.max_iter) +
                               " iterations (last residual " + std::to_string(residual) + ")",
                           residual, options.max_iter);
}

BalancedSolution solve_balanced(std::size_t n, const BalancedOptions& options)
{
    return solve_balanced_from(uniform_distribution(n), options);
}

} // namespace swnav
