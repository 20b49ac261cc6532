#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "swnav/analytic.hpp"
#include "swnav/numeric.hpp"

using namespace swnav;

namespace {

DistanceDistribution random_distribution(std::size_t n, Rng& rng)
{
    std::vector<double> w(n - 1);
    for (double& v : w) v = uniform_unit(rng);
    return DistanceDistribution::from_weights(std::move(w));
}

DistanceDistribution geometric_distribution(std::size_t n, double ratio)
{
    std::vector<double> w(n - 1);
    double v = 1.0;
    for (double& x : w) {
        x = v;
        v *= ratio;
    }
    return DistanceDistribution::from_weights(std::move(w));
}

} // namespace

TEST_CASE("two-vertex ring")
{
    const HittingVector h = hitting_from_links(DistanceDistribution({1.0}));
    CHECK(h.ring_size() == 2);
    CHECK(h(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(tau(h) == doctest::Approx(1.0).epsilon(1e-15));
    const DistanceDistribution b = balance_map(DistanceDistribution({1.0}));
    CHECK(b(1) == doctest::Approx(1.0));
}

TEST_CASE("three-vertex ring with the harmonic law")
{
    const DistanceDistribution ell = harmonic_distribution(3);
    CHECK(ell(1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(ell(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    const HittingVector h = hitting_from_links(ell);
    CHECK(std::abs(h(1) - 5.0 / 6.0) < 1e-15);
    CHECK(std::abs(h(2) - 0.5) < 1e-15);
    CHECK(std::abs(tau(h) - 4.0 / 3.0) < 1e-15);
    const DistanceDistribution b = balance_map(ell);
    CHECK(std::abs(b(1) - 5.0 / 8.0) < 1e-15);
    CHECK(std::abs(b(2) - 3.0 / 8.0) < 1e-15);
}

TEST_CASE("a ring with only unit shortcuts behaves like the bare ring")
{
    // mean distance from a uniform start on the bare ring of 4 is (1+2+3)/3
    const HittingVector h = hitting_from_links(DistanceDistribution({1.0, 0.0, 0.0}));
    CHECK(std::abs(h(1) - 1.0) < 1e-15);
    CHECK(std::abs(h(2) - 2.0 / 3.0) < 1e-15);
    CHECK(std::abs(h(3) - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(tau(h) - 2.0) < 1e-15);

    for (std::size_t n : {5u, 50u, 3000u}) {
        std::vector<double> w(n - 1, 0.0);
        w[0] = 1.0;
        const double expect = static_cast<double>(n) / 2.0;
        CHECK(tau(hitting_from_links(DistanceDistribution(w))) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("harmonic and uniform laws are normalized")
{
    CHECK(harmonic_distribution(2)(1) == 1.0);
    for (std::size_t n : {2u, 10u, 1000u, 1000000u}) {
        const auto h = harmonic_distribution(n);
        const auto u = uniform_distribution(n);
        CHECK(h.max_distance() == n - 1);
        CHECK(std::abs(compensated_sum(h.weights()) - 1.0) < 1e-12);
        CHECK(std::abs(compensated_sum(u.weights()) - 1.0) < 1e-12);
        CHECK(h(1) / h(static_cast<Distance>(n - 1)) == doctest::Approx(static_cast<double>(n - 1)));
    }
    CHECK_THROWS_AS(harmonic_distribution(1), InputError);
    CHECK_THROWS_AS(uniform_distribution(0), InputError);
}

TEST_CASE("recursion agrees with exhaustive enumeration for n <= 7")
{
    Rng rng = make_rng(41);
    for (std::size_t n = 2; n <= 7; ++n) {
        std::vector<DistanceDistribution> laws{harmonic_distribution(n), uniform_distribution(n),
                                               geometric_distribution(n, 0.3), random_distribution(n, rng),
                                               random_distribution(n, rng)};
        if (n > 2) {
            std::vector<double> w(n - 1, 0.0);
            w.back() = 1.0; // every shortcut overshoots except from the far end
            laws.emplace_back(w);
        }
        for (const auto& ell : laws) {
            const HittingVector h = hitting_from_links(ell);
            const std::vector<double> brute = oracle::brute_force_hitting(ell);
            REQUIRE(brute.size() == n - 1);
            for (Distance x = 1; x < n; ++x) {
                INFO("n=" << n << " x=" << x);
                CHECK(std::abs(h(x) - brute[x - 1]) < 1e-12);
            }
        }
    }
}

TEST_CASE("the farthest vertex is hit only by starting there")
{
    Rng rng = make_rng(42);
    for (std::size_t n : {2u, 3u, 17u, 600u, 5000u}) {
        const HittingVector h = hitting_from_links(random_distribution(n, rng));
        CHECK(h(static_cast<Distance>(n - 1)) == 1.0 / static_cast<double>(n - 1));
    }
}

TEST_CASE("hitting probabilities are non-increasing in the distance")
{
    for (std::size_t n = 4; n <= 4096; n *= 2) {
        for (const auto& ell : {harmonic_distribution(n), uniform_distribution(n), geometric_distribution(n, 0.9)}) {
            const HittingVector h = hitting_from_links(ell);
            for (Distance x = 1; x + 1 < n; ++x) REQUIRE(h(x) >= h(x + 1) - 1e-12);
        }
    }
}

TEST_CASE("tiling does not change the result")
{
    // Sizes straddling the row/column block edges compared with a plain
    // row-by-row evaluation of the same recursion.
    for (std::size_t n : {511u, 512u, 513u, 514u, 2049u, 2050u, 2600u}) {
        const DistanceDistribution ell = harmonic_distribution(n);
        std::vector<double> ref(n + 1, 0.0), tail(n + 2, 0.0);
        for (std::size_t k = n - 1; k >= 1; --k) tail[k] = tail[k + 1] + ell(static_cast<Distance>(k));
        for (std::size_t x = n - 1; x >= 1; --x) {
            double acc = 0.0;
            for (std::size_t xi = x + 1; xi < n; ++xi) acc += ref[xi] * ell(static_cast<Distance>(xi - x));
            ref[x] = acc + ref[x + 1] * tail[x + 2] + 1.0 / static_cast<double>(n - 1);
        }
        const HittingVector h = hitting_from_links(ell);
        for (Distance x = 1; x < n; ++x) REQUIRE(std::abs(h(x) - ref[x]) < 1e-12);
    }
}

TEST_CASE("balance map stays on the simplex")
{
    Rng rng = make_rng(43);
    for (std::size_t n : {2u, 3u, 10u, 257u, 2000u}) {
        const DistanceDistribution b = balance_map(random_distribution(n, rng));
        CHECK(b.max_distance() == n - 1);
        double sum = 0.0;
        for (double v : b.weights()) {
            CHECK(v >= 0.0);
            sum += v;
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
}

TEST_CASE("balanced fixed point for n = 3 and n = 2")
{
    const BalancedSolution s3 = solve_balanced(3);
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK(std::abs(s3.ell(1) - golden) < 1e-10);
    CHECK(std::abs(s3.ell(2) - (1.0 - golden)) < 1e-10);
    CHECK(std::abs(s3.tau - (1.0 + golden / 2.0)) < 1e-10);
    CHECK(s3.residual < 1e-12);

    const BalancedSolution s2 = solve_balanced(2);
    CHECK(s2.iterations == 1);
    CHECK(s2.ell(1) == 1.0);
    CHECK(s2.tau == doctest::Approx(1.0));
}

TEST_CASE("balanced solution is a fixed point with monotone residuals")
{
    for (std::size_t n : {16u, 200u, 1000u}) {
        const BalancedSolution s = solve_balanced(n);
        INFO("n=" << n << " iterations=" << s.iterations);
        const DistanceDistribution b = balance_map(s.ell);
        double l1 = 0.0;
        for (Distance d = 1; d < n; ++d) l1 += std::abs(b(d) - s.ell(d));
        CHECK(l1 < 1e-11);
        CHECK(s.residual_history.size() == s.iterations);
        // after damping settles the residual only shrinks
        std::size_t from = 0;
        for (std::size_t i = 1; i < s.residual_history.size(); ++i)
            if (s.residual_history[i] > s.residual_history[i - 1]) from = i;
        CHECK(from <= 1);
        CHECK(tau(hitting_from_links(s.ell)) == doctest::Approx(s.tau).epsilon(1e-12));
    }
}

TEST_CASE("balanced iteration reports failure and bad options")
{
    BalancedOptions opts;
    opts.max_iter = 2;
    try {
        (void)solve_balanced(500, opts);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.iterations() == 2);
        CHECK(e.residual() > 1e-12);
    }
    BalancedOptions bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(solve_balanced(10, bad), InputError);
    bad = {};
    bad.damping = 1.5;
    CHECK_THROWS_AS(solve_balanced(10, bad), InputError);
    CHECK_THROWS_AS(solve_balanced(1), InputError);
}

TEST_CASE("distribution validation")
{
    CHECK_THROWS_AS(DistanceDistribution({0.5, 0.4}), InputError);
    CHECK_THROWS_AS(DistanceDistribution({1.5, -0.5}), InputError);
    CHECK_THROWS_AS(DistanceDistribution({std::nan(""), 1.0}), InputError);
    CHECK_THROWS_AS(DistanceDistribution::from_weights({0.0, 0.0}), InputError);
}
