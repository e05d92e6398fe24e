#include "support/fixtures.hpp"

#include <map>
#include <stdexcept>

#include "support/generators.hpp"

namespace structmap::testing {

std::string seed_path() {
    return STRUCTMAP_SEED_PATH;
}

std::string seed_source() {
    return read_file(seed_path());
}

Catalog seed_catalog() {
    auto parsed = parse_catalog(seed_source());
    if (!parsed.ok()) {
        throw std::runtime_error("seed catalog failed to parse: " +
                                 parsed.error->message);
    }
    return std::move(*parsed.catalog);
}

ResolvedGraph seed_graph() {
    auto resolved = resolve(seed_catalog());
    if (!resolved.ok()) {
        throw std::runtime_error("seed catalog failed to resolve");
    }
    auto reduced = transitive_reduce(*resolved.graph);
    compute_levels(reduced.graph);
    return std::move(reduced.graph);
}

ResolvedGraph chain_graph(const std::vector<std::pair<std::string,
                                                      std::vector<std::string>>>& spec) {
    ResolvedGraph graph;
    RgbColor grey{0x70, 0x7B, 0x7C};
    graph.section_palette.emplace("s", grey);
    SectionDecl section;
    section.id = "s";
    section.color = grey;
    graph.sections.push_back(section);

    std::map<std::string, int> index;
    for (const auto& [name, parents] : spec) {
        NodeInfo node;
        node.structure.name = name;
        node.structure.sections = {"s"};
        node.structure.wikipedia = "https://example.org/" + std::to_string(index.size());
        node.fill_stops = {grey};
        index.emplace(name, static_cast<int>(graph.nodes.size()));
        graph.nodes.push_back(std::move(node));
        for (const auto& parent : parents) {
            graph.edges.push_back({index.at(parent),
                                   static_cast<int>(graph.nodes.size()) - 1,
                                   std::nullopt, false});
        }
    }
    return graph;
}

}  // namespace structmap::testing
