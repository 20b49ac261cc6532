#include "oracles.hpp"

#include <cmath>

#include "swnav/routing.hpp"

namespace oracle {

std::vector<double> brute_force_hitting(const swnav::DistanceDistribution& ell)
{
    using namespace swnav;
    const std::size_t n = static_cast<std::size_t>(ell.max_distance()) + 1;
    const Topology topo = Topology::directed_ring(n);
    std::vector<long double> h(n - 1, 0.0L);

    // lengths[x] in 1..n-1 for x = 1..n-1, odometer order
    std::vector<Distance> lengths(n, 1);
    for (;;) {
        long double weight = 1.0L;
        ShortcutGraph graph(topo, 1);
        for (Vertex x = 1; x < n; ++x) {
            weight *= ell(lengths[x]);
            graph.add_shortcut(x, static_cast<Vertex>((x + n - lengths[x]) % n));
        }
        if (weight > 0.0) {
            for (Vertex y = 1; y < n; ++y) {
                const WalkRecord walk = greedy_walk(graph, y, 0);
                for (std::size_t i = 0; i + 1 < walk.path.size(); ++i) {
                    h[walk.path[i] - 1] += weight / static_cast<long double>(n - 1);
                }
            }
        }
        std::size_t pos = 1;
        while (pos < n && lengths[pos] == n - 1) lengths[pos++] = 1;
        if (pos == n) break;
        ++lengths[pos];
    }
    return std::vector<double>(h.begin(), h.end());
}

std::vector<double> kleinberg_class_probabilities(const swnav::Topology& topo, double alpha)
{
    std::vector<double> mass(topo.max_distance() + 1, 0.0);
    double total = 0.0;
    for (swnav::Vertex z = 1; z < topo.size(); ++z) {
        const auto d = topo.distance(0, z);
        const double w = std::pow(static_cast<double>(d), alpha);
        mass[d] += w;
        total += w;
    }
    for (double& m : mass) m /= total;
    return mass;
}

} // namespace oracle
