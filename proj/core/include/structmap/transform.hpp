#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "structmap/resolve.hpp"

namespace structmap {

/// Which subset of the graph one output map contains.
struct MapSpec {
    enum class Kind { Section, Full, TopLevel };

    Kind kind = Kind::Full;
    std::string section;  // Section maps only

    static MapSpec section_map(std::string id) {
        return {Kind::Section, std::move(id)};
    }
    static MapSpec full_map() { return {Kind::Full, {}}; }
    static MapSpec top_level_map() { return {Kind::TopLevel, {}}; }
};

struct ReduceResult {
    ResolvedGraph graph;
    std::vector<EdgeInfo> removed;
    std::vector<std::string> warnings;  // one per removed edge that carried a label
};

/// Removes every non-keep edge (u,v) implied by a directed path u -> v of
/// length >= 2 (and exact duplicates of an earlier edge). Reachability is
/// preserved; the result is minimal among the non-keep edges. Precondition:
/// acyclic input, enforced upstream by resolve().
ReduceResult transitive_reduce(const ResolvedGraph& graph);

/// Fills NodeInfo::level with the length of the longest directed path from
/// any in-degree-0 node. Sources get level 0. Precondition: acyclic.
void compute_levels(ResolvedGraph& graph);

/// A selected subgraph plus a note for each edge whose general endpoint
/// fell outside the selection (parent name, child name).
struct MapSelection {
    ResolvedGraph graph;
    std::vector<std::pair<std::string, std::string>> dangling_parents;
};

/// Induces the subgraph a map spec describes. Section maps take every node
/// whose section list intersects the section and its merge partners; the
/// top-level map takes representative structures; only edges with both
/// endpoints selected survive. Levels are recomputed within the subgraph.
/// Returns absent for a section map naming an undeclared section.
std::optional<MapSelection> select_map(const ResolvedGraph& graph, const MapSpec& spec);

struct NamedMap {
    std::string name;
    MapSelection selection;
};

/// The full map suite: one map per section except that merge-with partners
/// collapse into a single combined map (named declarer_target, placed at the
/// earliest partner's position), then the full map ("all"), then the
/// top-level map ("top").
std::vector<NamedMap> map_suite(const ResolvedGraph& graph);

/// Canonical file-name stem for a section's map: the merged name when the
/// section belongs to a merge pair, otherwise the section id itself.
/// Returns absent for an undeclared section.
std::optional<std::string> map_name_for_section(const ResolvedGraph& graph,
                                                const std::string& section);

}  // namespace structmap
