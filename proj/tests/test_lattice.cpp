#include <doctest.h>

#include <algorithm>
#include <set>

#include "swnav/lattice.hpp"
#include "swnav/rng.hpp"

using namespace swnav;

TEST_CASE("directed ring distance follows the orientation")
{
    const Topology ring = Topology::directed_ring(10);
    for (Vertex x = 1; x < 10; ++x) {
        CHECK(ring.distance(x, x - 1) == 1);
        CHECK(ring.distance(x - 1, x) == 9);
    }
    CHECK(ring.distance(3, 7) == 6);
    CHECK(ring.distance(4, 4) == 0);
}

TEST_CASE("torus distance wraps on both axes")
{
    const Topology torus = Topology::torus(4);
    CHECK(torus.size() == 16);
    CHECK(torus.distance(torus.vertex_at(0, 0), torus.vertex_at(2, 3)) == 3);
    CHECK(torus.distance(torus.vertex_at(1, 1), torus.vertex_at(1, 1)) == 0);
    CHECK(torus.max_distance() == 4);
    CHECK(Topology::torus(5).max_distance() == 4);
}

TEST_CASE("bidirectional ring distance is symmetric")
{
    const Topology ring = Topology::bidirectional_ring(9);
    CHECK(ring.distance(0, 8) == 1);
    CHECK(ring.distance(8, 0) == 1);
    CHECK(ring.distance(0, 4) == 4);
    CHECK(ring.max_distance() == 4);
}

TEST_CASE("base neighbors")
{
    CHECK(Topology::directed_ring(5).base_neighbors(0).to_vector() == std::vector<Vertex>{4});
    CHECK(Topology::directed_ring(2).base_neighbors(1).to_vector() == std::vector<Vertex>{0});

    const Topology torus = Topology::torus(3);
    auto nb = torus.base_neighbors(0).to_vector();
    std::set<Vertex> got(nb.begin(), nb.end());
    std::set<Vertex> want{torus.vertex_at(2, 0), torus.vertex_at(1, 0), torus.vertex_at(0, 2), torus.vertex_at(0, 1)};
    CHECK(got == want);
    CHECK(nb.size() == 4);

    // side 2 collapses opposite directions
    CHECK(Topology::torus(2).base_neighbors(0).size() == 2);
    CHECK(Topology::bidirectional_ring(2).base_neighbors(0).size() == 1);
}

TEST_CASE("invalid sizes and vertex ids are input errors")
{
    CHECK_THROWS_AS(Topology::directed_ring(1), InputError);
    CHECK_THROWS_AS(Topology::torus(1), InputError);
    const Topology ring = Topology::directed_ring(10);
    CHECK_THROWS_AS(ring.distance(10, 0), InputError);
    CHECK_THROWS_AS(ring.distance(0, 11), InputError);
    CHECK_THROWS_AS(ring.base_neighbors(10), InputError);
    CHECK_THROWS_AS(lattice_kind_from_string("hypercube"), InputError);
}

TEST_CASE("every lattice admits a progressing base step")
{
    std::vector<Topology> lattices;
    for (std::size_t n = 2; n <= 64; ++n) {
        lattices.push_back(Topology::directed_ring(n));
        lattices.push_back(Topology::bidirectional_ring(n));
    }
    for (std::size_t m = 2; m <= 8; ++m) lattices.push_back(Topology::torus(m));

    for (const auto& topo : lattices) {
        for (Vertex x = 0; x < topo.size(); ++x) {
            for (Vertex z = 0; z < topo.size(); ++z) {
                if (x == z) continue;
                const auto nb = topo.base_neighbors(x);
                const bool progress = std::any_of(nb.begin(), nb.end(), [&](Vertex y) {
                    return topo.distance(y, z) + 1 == topo.distance(x, z);
                });
                REQUIRE_MESSAGE(progress, to_string(topo.kind()) << " n=" << topo.size() << " x=" << x << " z=" << z);
            }
        }
    }
}

TEST_CASE("triangle inequality and translation invariance on sampled triples")
{
    Rng rng = make_rng(7);
    for (const auto& topo : {Topology::directed_ring(97), Topology::bidirectional_ring(50), Topology::torus(9)}) {
        const auto n = static_cast<Vertex>(topo.size());
        for (int trial = 0; trial < 5000; ++trial) {
            const Vertex x = uniform_index(rng, n), y = uniform_index(rng, n), z = uniform_index(rng, n);
            CHECK(topo.distance(x, z) <= topo.distance(x, y) + topo.distance(y, z));
            if (topo.is_ring()) {
                const Vertex c = uniform_index(rng, n);
                CHECK(topo.distance((x + c) % n, (z + c) % n) == topo.distance(x, z));
            } else {
                const auto m = topo.side();
                const auto [xr, xc] = topo.coordinates(x);
                const auto [zr, zc] = topo.coordinates(z);
                const std::size_t dr = uniform_index(rng, m), dc = uniform_index(rng, m);
                CHECK(topo.distance(topo.vertex_at((xr + dr) % m, (xc + dc) % m), topo.vertex_at((zr + dr) % m, (zc + dc) % m)) ==
                      topo.distance(x, z));
            }
        }
    }
}

TEST_CASE("offset table enumerates every distance class")
{
    for (const auto& topo : {Topology::directed_ring(12), Topology::bidirectional_ring(12), Topology::torus(5), Topology::torus(6)}) {
        const OffsetTable table(topo);
        CHECK(table.offset_count() == topo.size() - 1);
        CHECK(table.max_distance() == topo.max_distance());
        std::size_t covered = 0;
        for (Distance d = 1; d <= table.max_distance(); ++d) {
            for (auto o : table.class_members(d)) {
                for (Vertex x = 0; x < topo.size(); ++x) CHECK(topo.distance(x, table.translate(x, o)) == d);
            }
            covered += table.class_size(d);
        }
        CHECK(covered == topo.size() - 1);
    }
    const OffsetTable ring(Topology::directed_ring(12));
    for (Distance d = 1; d < 12; ++d) CHECK(ring.class_size(d) == 1);
    CHECK(OffsetTable(Topology::torus(4)).class_size(1) == 4);
}
