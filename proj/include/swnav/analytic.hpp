#pragma once

// Exact hitting-probability machinery for the directed ring with one
// independent shortcut per vertex. Destination is fixed at vertex 0; every
// vector is indexed by distance x = 1..n-1 from it.

#include "swnav/graph.hpp"

#include <stdexcept>
#include <vector>

namespace swnav {

/// h(x): probability that a greedy query for vertex 0, started at a uniform
/// vertex other than 0, passes through the vertex at distance x. The start
/// vertex counts as passed through.
class HittingVector {
public:
    explicit HittingVector(std::vector<double> values);

    /// Ring size n (one more than the number of entries).
    std::size_t ring_size() const { return values_.size() + 1; }
    double operator()(Distance x) const { return values_[x - 1]; }
    std::span<const double> values() const { return values_; }

private:
    std::vector<double> values_;
};

/// Solves the backward hitting equations
///
///   h(x) = sum_{xi=x+1}^{n-1} h(xi) ell(xi - x)
///        + h(x+1) sum_{xi=x+2}^{n-1} ell(xi) + 1/(n-1)
///
/// from x = n-1 down to 1. The first term is arrival by a shortcut from
/// distance xi, the second arrival over the base edge from x+1 when that
/// vertex's shortcut overshoots 0, the last a uniform start at x.
///
/// O(n^2) work, tiled so each block of the convolution runs out of L1.
HittingVector hitting_from_links(const DistanceDistribution& ell);

/// Expected greedy routing time: sum of h(x).
double tau(const HittingVector& h);

/// ell''(x) = h(x) / tau for h = hitting_from_links(ell).
DistanceDistribution balance_map(const DistanceDistribution& ell);

/// ell(d) proportional to 1/d over d = 1..n-1.
DistanceDistribution harmonic_distribution(std::size_t n);

/// Uniform over d = 1..n-1.
DistanceDistribution uniform_distribution(std::size_t n);

struct BalancedOptions {
    double tol = 1e-12;          ///< L1 residual target
    std::size_t max_iter = 100000;
    double damping = 1.0;        ///< initial weight on the mapped distribution
    bool auto_damp = true;       ///< drop to 0.5 on the first residual increase
};

struct BalancedSolution {
    DistanceDistribution ell;
    double tau = 0.0;                 ///< tau of hitting_from_links(ell)
    std::size_t iterations = 0;       ///< balance_map evaluations
    double residual = 0.0;            ///< ||balance_map(ell) - ell||_1
    double damping = 1.0;             ///< damping in effect at exit
    std::vector<double> residual_history;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual, std::size_t iterations)
        : std::runtime_error(what), residual_(residual), iterations_(iterations)
    {
    }
    double residual() const { return residual_; }
    std::size_t iterations() const { return iterations_; }

private:
    double residual_;
    std::size_t iterations_;
};

/// Fixed-point iteration ell <- (1 - lambda) ell + lambda balance_map(ell)
/// from the uniform distribution until ||balance_map(ell) - ell||_1 < tol.
/// Throws ConvergenceError after max_iter evaluations.
BalancedSolution solve_balanced(std::size_t n, const BalancedOptions& options = {});

/// Starts the iteration from a caller-supplied distribution.
BalancedSolution solve_balanced_from(const DistanceDistribution& start, const BalancedOptions& options = {});

} // namespace swnav
