#include "structmap/transform.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace structmap {

namespace {

// Reachability closure over node indices; reach[u][v] == there is a
// directed path of length >= 1 from u to v.
std::vector<std::vector<char>> reachability(int n, const std::vector<EdgeInfo>& edges) {
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (const auto& e : edges) reach[e.from][e.to] = 1;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (!reach[i][k]) continue;
            for (int j = 0; j < n; ++j) {
                if (reach[k][j]) reach[i][j] = 1;
            }
        }
    }
    return reach;
}

std::vector<int> topological_order(int n, const std::vector<EdgeInfo>& edges) {
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<int>> succ(n);
    for (const auto& e : edges) {
        succ[e.from].push_back(e.to);
        ++indegree[e.to];
    }
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (indegree[v] == 0) queue.push_back(v);
    }
    std::vector<int> order;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        order.push_back(v);
        for (int w : succ[v]) {
            if (--indegree[w] == 0) queue.push_back(w);
        }
    }
    return order;
}

ResolvedGraph induce(const ResolvedGraph& graph, const std::vector<int>& selected) {
    ResolvedGraph sub;
    sub.section_palette = graph.section_palette;
    sub.sections = graph.sections;
    std::vector<int> remap(graph.nodes.size(), -1);
    for (int v : selected) {
        remap[v] = static_cast<int>(sub.nodes.size());
        sub.nodes.push_back(graph.nodes[v]);
    }
    for (const auto& e : graph.edges) {
        if (remap[e.from] >= 0 && remap[e.to] >= 0) {
            sub.edges.push_back({remap[e.from], remap[e.to], e.label, e.keep});
        }
    }
    return sub;
}

// Sections grouped by the merge relation. Each group keeps the declaration
// position of its earliest member and the canonical map name: for a simple
// pair the declaring section comes first, otherwise members appear in
// declaration order.
struct SectionGroup {
    std::vector<std::string> members;  // declaration order
    std::string name;
};

std::vector<SectionGroup> merge_groups(const std::vector<SectionDecl>& sections) {
    const int n = static_cast<int>(sections.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index.emplace(sections[i].id, i);

    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (int i = 0; i < n; ++i) {
        if (!sections[i].merge_with) continue;
        auto it = index.find(*sections[i].merge_with);
        if (it == index.end() || it->second == i) continue;  // rejected upstream
        root[find(i)] = find(it->second);
    }

    std::vector<SectionGroup> groups;
    std::map<int, int> group_of_root;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        auto it = group_of_root.find(r);
        if (it == group_of_root.end()) {
            group_of_root.emplace(r, static_cast<int>(groups.size()));
            groups.push_back({});
            it = group_of_root.find(r);
        }
        groups[it->second].members.push_back(sections[i].id);
    }
    for (auto& group : groups) {
        if (group.members.size() == 2) {
            // Name the declaring section first (posets merge-with lattices
            // renders as posets_lattices).
            const auto& a = sections[index.at(group.members[0])];
            const auto& b = sections[index.at(group.members[1])];
            if (!a.merge_with && b.merge_with) {
                std::swap(group.members[0], group.members[1]);
            }
        }
        group.name = group.members[0];
        for (std::size_t i = 1; i < group.members.size(); ++i) {
            group.name += "_" + group.members[i];
        }
    }
    return groups;
}

}  // namespace

ReduceResult transitive_reduce(const ResolvedGraph& graph) {
    const int n = static_cast<int>(graph.nodes.size());
    ReduceResult result;
    result.graph.nodes = graph.nodes;
    result.graph.section_palette = graph.section_palette;
    result.graph.sections = graph.sections;

    assert(topological_order(n, graph.edges).size() == graph.nodes.size() &&
           "transitive_reduce requires an acyclic graph");

    // An edge (u,v) is implied when some successor w of u (w != v) still
    // reaches v; keep-flagged edges are exempt. Exact duplicates of an
    // earlier edge are dropped too.
    auto reach = reachability(n, graph.edges);
    std::vector<std::vector<int>> succ(n);
    for (const auto& e : graph.edges) succ[e.from].push_back(e.to);

    std::set<std::pair<int, int>> kept_pairs;
    for (const auto& e : graph.edges) {
        bool removable = false;
        if (!e.keep) {
            for (int w : succ[e.from]) {
                if (w != e.to && reach[w][e.to]) {
                    removable = true;
                    break;
                }
            }
            if (!removable && !kept_pairs.insert({e.from, e.to}).second) {
                removable = true;  // parallel duplicate
            }
        }
        if (removable) {
            result.removed.push_back(e);
            if (e.label) {
                result.warnings.push_back(
                    "removed redundant edge \"" + graph.nodes[e.from].structure.name +
                    "\" -> \"" + graph.nodes[e.to].structure.name +
                    "\" drops label \"" + *e.label + "\"");
            }
        } else {
            result.graph.edges.push_back(e);
        }
    }
    return result;
}

void compute_levels(ResolvedGraph& graph) {
    const int n = static_cast<int>(graph.nodes.size());
    auto order = topological_order(n, graph.edges);
    assert(static_cast<int>(order.size()) == n &&
           "compute_levels requires an acyclic graph");

    std::vector<std::vector<int>> pred(n);
    for (const auto& e : graph.edges) pred[e.to].push_back(e.from);
    std::vector<int> level(n, 0);
    for (int v : order) {
        for (int u : pred[v]) {
            level[v] = std::max(level[v], level[u] + 1);
        }
    }
    for (int v = 0; v < n; ++v) graph.nodes[v].level = level[v];
}

std::optional<MapSelection> select_map(const ResolvedGraph& graph, const MapSpec& spec) {
    std::vector<int> selected;
    switch (spec.kind) {
        case MapSpec::Kind::Full: {
            selected.resize(graph.nodes.size());
            std::iota(selected.begin(), selected.end(), 0);
            break;
        }
        case MapSpec::Kind::TopLevel: {
            for (int v = 0; v < static_cast<int>(graph.nodes.size()); ++v) {
                if (graph.nodes[v].structure.representative) selected.push_back(v);
            }
            break;
        }
        case MapSpec::Kind::Section: {
            std::set<std::string> wanted;
            bool declared = false;
            for (const auto& group : merge_groups(graph.sections)) {
                if (std::find(group.members.begin(), group.members.end(),
                              spec.section) != group.members.end()) {
                    wanted.insert(group.members.begin(), group.members.end());
                    declared = true;
                    break;
                }
            }
            if (!declared) return std::nullopt;
            for (int v = 0; v < static_cast<int>(graph.nodes.size()); ++v) {
                for (const auto& id : graph.nodes[v].structure.sections) {
                    if (wanted.count(id)) {
                        selected.push_back(v);
                        break;
                    }
                }
            }
            break;
        }
    }

    MapSelection selection;
    selection.graph = induce(graph, selected);
    compute_levels(selection.graph);

    // Parents lost at the selection boundary, for the per-map report.
    std::set<int> chosen(selected.begin(), selected.end());
    for (const auto& e : graph.edges) {
        if (chosen.count(e.to) && !chosen.count(e.from)) {
            selection.dangling_parents.emplace_back(graph.nodes[e.from].structure.name,
                                                    graph.nodes[e.to].structure.name);
        }
    }
    return selection;
}

std::vector<NamedMap> map_suite(const ResolvedGraph& graph) {
    std::vector<NamedMap> maps;
    for (const auto& group : merge_groups(graph.sections)) {
        auto selection = select_map(graph, MapSpec::section_map(group.members[0]));
        maps.push_back({group.name, std::move(*selection)});
    }
    maps.push_back({"all", std::move(*select_map(graph, MapSpec::full_map()))});
    maps.push_back({"top", std::move(*select_map(graph, MapSpec::top_level_map()))});
    return maps;
}

std::optional<std::string> map_name_for_section(const ResolvedGraph& graph,
                                                const std::string& section) {
    for (const auto& group : merge_groups(graph.sections)) {
        if (std::find(group.members.begin(), group.members.end(), section) !=
            group.members.end()) {
            return group.name;
        }
    }
    return std::nullopt;
}

}  // namespace structmap
