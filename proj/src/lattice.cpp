#include "swnav/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swnav {

std::string to_string(LatticeKind kind)
{
    switch (kind) {
    case LatticeKind::DirectedRing: return "ring";
    case LatticeKind::BidirectionalRing: return "biring";
    case LatticeKind::Torus2D: return "torus";
    }
    return "unknown";
}

LatticeKind lattice_kind_from_string(const std::string& name)
{
    if (name == "ring" || name == "directed-ring") return LatticeKind::DirectedRing;
    if (name == "biring" || name == "bidirectional-ring") return LatticeKind::BidirectionalRing;
    if (name == "torus" || name == "torus2d") return LatticeKind::Torus2D;
    throw InputError("unknown topology '" + name + "' (expected ring, biring or torus)");
}

namespace {

void check_ring_size(std::size_t n)
{
    if (n < 2) throw InputError("ring size must be at least 2, got " + std::to_string(n));
    if (n > std::numeric_limits<Vertex>::max()) throw InputError("ring size exceeds vertex id range");
}

} // namespace

Topology Topology::directed_ring(std::size_t n)
{
    check_ring_size(n);
    return Topology(LatticeKind::DirectedRing, n, n);
}

Topology Topology::bidirectional_ring(std::size_t n)
{
    check_ring_size(n);
    return Topology(LatticeKind::BidirectionalRing, n, n);
}

Topology Topology::torus(std::size_t side)
{
    if (side < 2) throw InputError("torus side must be at least 2, got " + std::to_string(side));
    if (side > 65535) throw InputError("torus side exceeds vertex id range");
    return Topology(LatticeKind::Torus2D, side * side, side);
}

Distance Topology::max_distance() const
{
    switch (kind_) {
    case LatticeKind::DirectedRing: return static_cast<Distance>(n_ - 1);
    case LatticeKind::BidirectionalRing: return static_cast<Distance>(n_ / 2);
    case LatticeKind::Torus2D: break;
    }
    return static_cast<Distance>(2 * (side_ / 2));
}

void Topology::check_vertex(Vertex x) const
{
    if (x >= n_) {
        throw InputError("vertex " + std::to_string(x) + " out of range for lattice of size " +
                         std::to_string(n_));
    }
}

Distance Topology::distance(Vertex x, Vertex z) const
{
    check_vertex(x);
    check_vertex(z);
    return distance_unchecked(x, z);
}

BaseNeighbors Topology::base_neighbors(Vertex x) const
{
    check_vertex(x);
    BaseNeighbors out;
    const auto n = static_cast<Vertex>(n_);
    switch (kind_) {
    case LatticeKind::DirectedRing:
        out.push(x == 0 ? n - 1 : x - 1);
        return out;
    case LatticeKind::BidirectionalRing: {
        Vertex down = x == 0 ? n - 1 : x - 1;
        Vertex up = x + 1 == n ? 0 : x + 1;
        out.push(down);
        if (up != down) out.push(up);
        return out;
    }
    case LatticeKind::Torus2D:
        break;
    }
    const auto m = static_cast<Vertex>(side_);
    const Vertex r = x / m;
    const Vertex c = x % m;
    const Vertex r_up = r == 0 ? m - 1 : r - 1;
    const Vertex r_down = r + 1 == m ? 0 : r + 1;
    const Vertex c_left = c == 0 ? m - 1 : c - 1;
    const Vertex c_right = c + 1 == m ? 0 : c + 1;
    // m == 2 collapses both directions along an axis onto one vertex
    out.push(r_up * m + c);
    if (r_down != r_up) out.push(r_down * m + c);
    out.push(r * m + c_left);
    if (c_right != c_left) out.push(r * m + c_right);
    return out;
}

Vertex Topology::vertex_at(std::size_t row, std::size_t col) const
{
    if (row >= side_ || (kind_ == LatticeKind::Torus2D ? col >= side_ : col != 0)) {
        throw InputError("coordinates out of range");
    }
    return static_cast<Vertex>(kind_ == LatticeKind::Torus2D ? row * side_ + col : row);
}

std::pair<std::size_t, std::size_t> Topology::coordinates(Vertex x) const
{
    check_vertex(x);
    if (is_ring()) return {x, 0};
    return {x / side_, x % side_};
}

OffsetTable::OffsetTable(const Topology& topo) : topo_(topo)
{
    const std::size_t n = topo.size();
    const Distance max_d = topo.max_distance();
    std::vector<std::size_t> counts(static_cast<std::size_t>(max_d) + 1, 0);
    std::vector<Distance> dist(n, 0);
    for (std::uint32_t o = 1; o < n; ++o) {
        dist[o] = topo.distance_unchecked(0, translate(0, o));
        ++counts[dist[o]];
    }
    class_begin_.assign(static_cast<std::size_t>(max_d) + 2, 0);
    for (Distance d = 1; d <= max_d; ++d) class_begin_[d + 1] = class_begin_[d] + counts[d];
    offsets_.resize(n - 1);
    std::vector<std::size_t> fill(class_begin_.begin(), class_begin_.end() - 1);
    for (std::uint32_t o = 1; o < n; ++o) offsets_[fill[dist[o]]++] = o;
}

std::span<const std::uint32_t> OffsetTable::class_members(Distance d) const
{
    if (d == 0 || d > max_distance()) {
        throw InputError("distance class " + std::to_string(d) + " out of range");
    }
    return std::span<const std::uint32_t>(offsets_).subspan(class_begin_[d],
                                                            class_begin_[d + 1] - class_begin_[d]);
}

Distance OffsetTable::offset_distance(std::uint32_t offset) const
{
    return topo_.distance_unchecked(0, translate(0, offset));
}

Vertex OffsetTable::translate(Vertex x, std::uint32_t offset) const
{
    const auto n = static_cast<Vertex>(topo_.size());
    if (topo_.is_ring()) {
        // ring offsets step against the orientation: x -> x - offset
        return x >= offset ? x - offset : x + n - offset;
    }
    const auto m = static_cast<Vertex>(topo_.side());
    const Vertex r = (x / m + offset / m) % m;
    const Vertex c = (x % m + offset % m) % m;
    return r * m + c;
}

} // namespace swnav
