#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace swnav {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

/// Raised for malformed inputs: out-of-range vertices, bad sizes, mismatched
/// distributions, unparseable files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a caller breaks an operation's precondition (e.g. routing from
/// a vertex to itself).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class LatticeKind {
    DirectedRing,      // base edges x -> x-1 mod n only
    BidirectionalRing, // base edges x -> x-1 and x -> x+1
    Torus2D,           // m x m wrap-around grid, 4-neighborhood
};

std::string to_string(LatticeKind kind);
LatticeKind lattice_kind_from_string(const std::string& name);

/// Up to four base neighbors, stored inline.
class BaseNeighbors {
public:
    void push(Vertex v) { items_[size_++] = v; }
    std::size_t size() const { return size_; }
    const Vertex* begin() const { return items_.data(); }
    const Vertex* end() const { return items_.data() + size_; }
    Vertex operator[](std::size_t i) const { return items_[i]; }
    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
    std::array<Vertex, 4> items_{};
    std::size_t size_ = 0;
};

/// Base lattice geometry. Vertices are dense ids 0..n-1; the torus uses
/// row-major encoding id = row * side + col.
class Topology {
public:
    static Topology directed_ring(std::size_t n);
    static Topology bidirectional_ring(std::size_t n);
    static Topology torus(std::size_t side);

    LatticeKind kind() const { return kind_; }
    std::size_t size() const { return n_; }
    /// Side length m for the torus, n for rings.
    std::size_t side() const { return side_; }
    bool is_ring() const { return kind_ != LatticeKind::Torus2D; }
    /// Lattice dimension: 1 for rings, 2 for the torus.
    int dimension() const { return is_ring() ? 1 : 2; }

    /// Largest distance between any two vertices.
    Distance max_distance() const;

    /// Lattice distance from x to z. On the directed ring this is the
    /// number of oriented steps (x - z) mod n, so it is not symmetric.
    Distance distance(Vertex x, Vertex z) const;

    BaseNeighbors base_neighbors(Vertex x) const;

    Vertex vertex_at(std::size_t row, std::size_t col) const;
    std::pair<std::size_t, std::size_t> coordinates(Vertex x) const;

    void check_vertex(Vertex x) const;

    bool operator==(const Topology&) const = default;

    /// Unchecked variants for hot loops; callers guarantee x, z < n.
    Distance distance_unchecked(Vertex x, Vertex z) const
    {
        switch (kind_) {
        case LatticeKind::DirectedRing:
            return x >= z ? x - z : static_cast<Distance>(n_ - z + x);
        case LatticeKind::BidirectionalRing: {
            Distance fwd = x >= z ? x - z : static_cast<Distance>(n_ - z + x);
            Distance back = static_cast<Distance>(n_) - fwd;
            return fwd == 0 ? 0 : (fwd < back ? fwd : back);
        }
        case LatticeKind::Torus2D:
            break;
        }
        const auto m = static_cast<Distance>(side_);
        Distance dr = axis_gap(x / m, z / m, m);
        Distance dc = axis_gap(x % m, z % m, m);
        return dr + dc;
    }

private:
    Topology(LatticeKind kind, std::size_t n, std::size_t side) : kind_(kind), n_(n), side_(side) {}

    static Distance axis_gap(Distance a, Distance b, Distance m)
    {
        Distance d = a > b ? a - b : b - a;
        return d < m - d ? d : m - d;
    }

    LatticeKind kind_;
    std::size_t n_;
    std::size_t side_;
};

/// The translation group of a lattice, enumerated once: every non-zero
/// offset together with its distance, grouped by distance class. Offsets
/// are applied with translate(); distance(x, translate(x, o)) is the offset's
/// class for every x.
class OffsetTable {
public:
    explicit OffsetTable(const Topology& topo);

    const Topology& topology() const { return topo_; }
    std::size_t offset_count() const { return offsets_.size(); }
    Distance max_distance() const { return static_cast<Distance>(class_begin_.size() - 2); }

    /// Offsets in distance class d (1 <= d <= max_distance()).
    std::span<const std::uint32_t> class_members(Distance d) const;
    std::size_t class_size(Distance d) const { return class_members(d).size(); }

    /// All offsets in distance-class order.
    std::span<const std::uint32_t> offsets() const { return offsets_; }
    Distance offset_distance(std::uint32_t offset) const;

    /// The vertex reached from x by applying the offset.
    Vertex translate(Vertex x, std::uint32_t offset) const;

private:
    Topology topo_;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::size_t> class_begin_; // class d spans [class_begin_[d], class_begin_[d + 1])
};

} // namespace swnav
