#include "structmap/resolve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace structmap {

const char* to_string(SemanticErrorKind kind) {
    switch (kind) {
        case SemanticErrorKind::UnresolvedTarget: return "UnresolvedTarget";
        case SemanticErrorKind::DuplicateName: return "DuplicateName";
        case SemanticErrorKind::DuplicateSection: return "DuplicateSection";
        case SemanticErrorKind::UnknownSection: return "UnknownSection";
        case SemanticErrorKind::Cycle: return "Cycle";
        case SemanticErrorKind::SelfReference: return "SelfReference";
        case SemanticErrorKind::BadMerge: return "BadMerge";
    }
    return "SemanticError";
}

std::string SemanticError::message() const {
    switch (kind) {
        case SemanticErrorKind::UnresolvedTarget:
            return "unresolved target \"" + offender + "\"";
        case SemanticErrorKind::DuplicateName:
            return "duplicate structure name \"" + offender + "\"";
        case SemanticErrorKind::DuplicateSection:
            return "duplicate section \"" + offender + "\"";
        case SemanticErrorKind::UnknownSection:
            return "unknown section \"" + offender + "\"";
        case SemanticErrorKind::SelfReference:
            return "structure \"" + offender + "\" extends itself";
        case SemanticErrorKind::BadMerge:
            return "bad merge-with \"" + offender + "\"";
        case SemanticErrorKind::Cycle: {
            std::string msg = "extension cycle: ";
            for (std::size_t i = 0; i < cycle_path.size(); ++i) {
                if (i > 0) msg += " -> ";
                msg += cycle_path[i];
            }
            return msg;
        }
    }
    return "semantic error";
}

namespace {

// Finds one directed cycle in the parent relation (node -> structures it
// extends), restricted to one strongly connected component. Starts at the
// lexicographically least member and explores least-name parents first, so
// the witness is deterministic.
std::vector<std::string> cycle_witness(
    const std::vector<std::string>& names,
    const std::vector<std::vector<int>>& parents,
    const std::vector<int>& component) {
    int start = component[0];
    for (int v : component) {
        if (names[v] < names[start]) start = v;
    }
    std::set<int> in_component(component.begin(), component.end());

    std::vector<int> path;
    std::vector<char> on_path(names.size(), 0);
    std::function<bool(int)> dfs = [&](int v) -> bool {
        path.push_back(v);
        on_path[v] = 1;
        std::vector<int> next = parents[v];
        std::sort(next.begin(), next.end(),
                  [&](int a, int b) { return names[a] < names[b]; });
        for (int p : next) {
            if (!in_component.count(p)) continue;
            if (p == start && path.size() > 1) return true;
            if (!on_path[p]) {
                if (dfs(p)) return true;
            }
        }
        path.pop_back();
        on_path[v] = 0;
        return false;
    };
    dfs(start);

    std::vector<std::string> witness;
    for (int v : path) witness.push_back(names[v]);
    witness.push_back(names[start]);
    return witness;
}

// Tarjan SCC over edges general -> specific. Components are emitted in a
// deterministic order; only those of size >= 2 matter here.
std::vector<std::vector<int>> strongly_connected_components(
    int n, const std::vector<std::vector<int>>& succ) {
    std::vector<std::vector<int>> components;
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    int counter = 0;

    std::function<void(int)> strongconnect = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : succ[v]) {
            if (index[w] < 0) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> component;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                component.push_back(w);
            } while (w != v);
            components.push_back(std::move(component));
        }
    };
    for (int v = 0; v < n; ++v) {
        if (index[v] < 0) strongconnect(v);
    }
    return components;
}

}  // namespace

ResolveResult resolve(const Catalog& catalog) {
    ResolveResult result;
    auto& errors = result.errors;

    // Sections: uniqueness, then merge sanity.
    std::map<std::string, const SectionDecl*> sections;
    for (const auto& section : catalog.sections) {
        if (!sections.emplace(section.id, &section).second) {
            errors.push_back({SemanticErrorKind::DuplicateSection, section.id,
                              section.pos, {}});
        }
    }
    for (const auto& section : catalog.sections) {
        if (!section.merge_with) continue;
        if (*section.merge_with == section.id || !sections.count(*section.merge_with)) {
            errors.push_back({SemanticErrorKind::BadMerge, *section.merge_with,
                              section.pos, {}});
        }
    }

    // Structure names: first declaration wins for resolution purposes.
    std::map<std::string, int> name_to_index;
    const int n = static_cast<int>(catalog.structures.size());
    for (int i = 0; i < n; ++i) {
        const auto& def = catalog.structures[i];
        if (!name_to_index.emplace(def.name, i).second) {
            errors.push_back({SemanticErrorKind::DuplicateName, def.name, def.pos, {}});
        }
    }

    // Per-structure checks and edge building.
    std::vector<EdgeInfo> edges;
    std::vector<std::vector<int>> parents(n);
    for (int i = 0; i < n; ++i) {
        const auto& def = catalog.structures[i];
        std::set<std::string> seen_sections;
        for (const auto& id : def.sections) {
            if (!sections.count(id)) {
                errors.push_back({SemanticErrorKind::UnknownSection, id, def.pos, {}});
            } else if (!seen_sections.insert(id).second) {
                errors.push_back({SemanticErrorKind::DuplicateSection,
                                  def.name + " in " + id, def.pos, {}});
            }
        }
        for (const auto& ref : def.types) {
            if (ref.target == def.name) {
                errors.push_back({SemanticErrorKind::SelfReference, def.name,
                                  ref.pos, {}});
                continue;
            }
            auto it = name_to_index.find(ref.target);
            if (it == name_to_index.end()) {
                errors.push_back({SemanticErrorKind::UnresolvedTarget, ref.target,
                                  ref.pos, {}});
                continue;
            }
            edges.push_back({it->second, i, ref.label, ref.keep});
            parents[i].push_back(it->second);
        }
    }

    // Cycles: one error per strongly connected component with a cycle.
    std::vector<std::vector<int>> succ(n);
    for (const auto& e : edges) succ[e.from].push_back(e.to);
    std::vector<std::string> names;
    names.reserve(catalog.structures.size());
    for (const auto& def : catalog.structures) names.push_back(def.name);

    auto components = strongly_connected_components(n, succ);
    std::vector<std::vector<int>> bad;
    for (auto& component : components) {
        if (component.size() >= 2) bad.push_back(std::move(component));
    }
    // Deterministic report order: by least member name.
    std::sort(bad.begin(), bad.end(), [&](const auto& a, const auto& b) {
        auto least = [&](const std::vector<int>& c) {
            int m = c[0];
            for (int v : c)
                if (names[v] < names[m]) m = v;
            return names[m];
        };
        return least(a) < least(b);
    });
    for (const auto& component : bad) {
        auto witness = cycle_witness(names, parents, component);
        int first = name_to_index.at(witness.front());
        errors.push_back({SemanticErrorKind::Cycle, witness.front(),
                          catalog.structures[first].pos, witness});
    }

    if (!errors.empty()) return result;

    ResolvedGraph graph;
    graph.sections = catalog.sections;
    for (const auto& section : catalog.sections) {
        graph.section_palette.emplace(section.id, section.color);
    }
    graph.nodes.reserve(catalog.structures.size());
    for (const auto& def : catalog.structures) {
        NodeInfo node;
        node.structure = def;
        for (const auto& id : def.sections) {
            node.fill_stops.push_back(graph.section_palette.at(id));
        }
        graph.nodes.push_back(std::move(node));
    }
    graph.edges = std::move(edges);
    result.graph = std::move(graph);
    return result;
}

}  // namespace structmap
