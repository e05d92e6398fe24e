#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "structmap/emit.hpp"
#include "structmap/resolve.hpp"

namespace structmap {

enum class Command { Validate, Render, Query, Stats };

struct CliConfig {
    std::string input_path = "data/structures.cat";
    Command command = Command::Validate;
    std::string out_dir = "out";                        // render
    std::vector<EmitFormat> formats = {EmitFormat::Svg, EmitFormat::Html};  // render
    std::string map = "suite";                          // render: all | top | <section> | suite
    std::string query_name;                             // query
    int radius = 1;                                     // query
    bool outline = false;                               // name-only nodes
};

/// Exit codes: 0 success, 1 catalog (parse/semantic) error, 2 I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCatalogError = 1;
inline constexpr int kExitIoError = 2;

/// Runs one command against the catalog named by config.input_path,
/// writing regular output to `out` and diagnostics to `err`.
///
///   validate  parse + resolve; "OK: <n> structures, <m> edges, <k> sections"
///             or every error, one per line
///   render    writes one file per (map, format) into out_dir, atomically,
///             and prints a manifest line "<map>\t<format>\t<path>" per file
///   stats     catalog stats, per-section structure counts, level histogram
///   query     neighborhood of --name within --radius, as DOT on `out`
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

struct Neighborhood {
    ResolvedGraph graph;
    int focal = 0;  // index of the named node within the subgraph
};

/// Induced subgraph of every node at undirected distance <= radius from the
/// named node, levels recomputed. Absent if the name does not resolve.
std::optional<Neighborhood> neighborhood(const ResolvedGraph& graph,
                                         const std::string& name, int radius);

}  // namespace structmap
