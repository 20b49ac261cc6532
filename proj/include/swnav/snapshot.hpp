#pragma once

#include "swnav/graph.hpp"

#include <iosfwd>
#include <string>

namespace swnav {

/// Graph snapshots are CSV with one record per vertex,
///
///   # swnav graph snapshot
///   # topology=ring n=8 side=8 capacity=1
///   vertex_id,target_1
///   0,5
///   1
///   ...
///
/// A vertex with fewer shortcuts than its capacity simply has fewer fields.
/// write_snapshot(read_snapshot(s)) reproduces s byte for byte.
void write_snapshot(std::ostream& out, const ShortcutGraph& graph);
ShortcutGraph read_snapshot(std::istream& in);

void save_snapshot(const std::string& path, const ShortcutGraph& graph);
ShortcutGraph load_snapshot(const std::string& path);

} // namespace swnav
