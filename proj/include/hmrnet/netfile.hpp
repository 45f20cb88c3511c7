#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hmrnet/biclique.hpp"
#include "hmrnet/graph.hpp"

namespace hmrnet {

/// Line-oriented network text format, one record per line:
///
///   NX <count>          X-layer node count (once, before any X/H/TX record)
///   NY <count>          Y-layer node count (once, before any Y/H/TY record)
///   X <u> <v>           X-layer edge
///   Y <u> <v>           Y-layer edge
///   H <x> <y>           heterogeneous edge
///   TX <node> <comm>    optional ground truth; all or none of the X nodes
///   TY <node> <comm>    optional ground truth; all or none of the Y nodes
///
/// '#' starts a comment. Indices are zero-based decimal.
struct NetworkFile {
    HMRNet net;
    std::optional<Partition> truth_x;
    std::optional<Partition> truth_y;
};

NetworkFile parse_network(std::istream& in);
NetworkFile parse_network_file(const std::filesystem::path& path);

/// Canonical form: counts, sorted X, Y, H edges, truth lines, then one
/// "# biclique" comment per planted biclique.
void write_network(std::ostream& out, const NetworkFile& file, std::span<const Biclique> planted = {});

}  // namespace hmrnet
