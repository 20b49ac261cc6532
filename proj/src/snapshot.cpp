#include "swnav/snapshot.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace swnav {

namespace {

constexpr const char* kMagic = "# swnav graph snapshot";

std::uint64_t parse_u64(std::string_view text, std::size_t line_no)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("snapshot line " + std::to_string(line_no) + ": bad integer '" + std::string(text) + "'");
    }
    return value;
}

Topology topology_from(const std::map<std::string, std::string>& header)
{
    auto field = [&](const std::string& key) -> const std::string& {
        auto it = header.find(key);
        if (it == header.end()) throw InputError("snapshot header lacks '" + key + "'");
        return it->second;
    };
    const LatticeKind kind = lattice_kind_from_string(field("topology"));
    const auto n = static_cast<std::size_t>(parse_u64(field("n"), 2));
    const auto side = static_cast<std::size_t>(parse_u64(field("side"), 2));
    switch (kind) {
    case LatticeKind::DirectedRing: return Topology::directed_ring(n);
    case LatticeKind::BidirectionalRing: return Topology::bidirectional_ring(n);
    case LatticeKind::Torus2D: break;
    }
    if (side * side != n) throw InputError("snapshot torus side does not match n");
    return Topology::torus(side);
}

} // namespace

void write_snapshot(std::ostream& out, const ShortcutGraph& graph)
{
    const Topology& topo = graph.topology();
    out << kMagic << '\n';
    out << "# topology=" << to_string(topo.kind()) << " n=" << topo.size() << " side=" << topo.side()
        << " capacity=" << graph.capacity() << '\n';
    out << "vertex_id";
    for (std::size_t k = 1; k <= graph.capacity(); ++k) out << ",target_" << k;
    out << '\n';
    for (Vertex x = 0; x < graph.size(); ++x) {
        out << x;
        for (Vertex t : graph.shortcuts(x)) out << ',' << t;
        out << '\n';
    }
}

ShortcutGraph read_snapshot(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kMagic) throw InputError("not a graph snapshot (missing magic line)");
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw InputError("snapshot header line missing");

    std::map<std::string, std::string> header;
    std::istringstream fields(line.substr(2));
    for (std::string kv; fields >> kv;) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("bad snapshot header field '" + kv + "'");
        header[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    const Topology topo = topology_from(header);
    auto cap_it = header.find("capacity");
    if (cap_it == header.end()) throw InputError("snapshot header lacks 'capacity'");
    const auto capacity = static_cast<std::size_t>(parse_u64(cap_it->second, 2));
    ShortcutGraph graph(topo, capacity);

    if (!std::getline(in, line) || line.rfind("vertex_id", 0) != 0) throw InputError("snapshot column header missing");

    std::size_t line_no = 3;
    Vertex expected = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::string_view rest(line);
        std::size_t comma = rest.find(',');
        const auto id = parse_u64(rest.substr(0, comma), line_no);
        if (id != expected) throw InputError("snapshot line " + std::to_string(line_no) + ": expected vertex " + std::to_string(expected));
        while (comma != std::string_view::npos) {
            rest.remove_prefix(comma + 1);
            comma = rest.find(',');
            const auto target = parse_u64(rest.substr(0, comma), line_no);
            if (target >= topo.size()) throw InputError("snapshot line " + std::to_string(line_no) + ": target out of range");
            graph.add_shortcut(static_cast<Vertex>(id), static_cast<Vertex>(target));
        }
        ++expected;
    }
    if (expected != topo.size()) throw InputError("snapshot has " + std::to_string(expected) + " vertex records, expected " + std::to_string(topo.size()));
    return graph;
}

void save_snapshot(const std::string& path, const ShortcutGraph& graph)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    write_snapshot(out, graph);
}

ShortcutGraph load_snapshot(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_snapshot(in);
}

} // namespace swnav
