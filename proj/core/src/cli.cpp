#include "structmap/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "structmap/layout.hpp"
#include "structmap/parse.hpp"
#include "structmap/transform.hpp"

namespace structmap {

namespace fs = std::filesystem;

namespace {

struct LoadedCatalog {
    Catalog catalog;
    ResolvedGraph reduced;  // resolved, transitively reduced, levels computed
    std::vector<std::string> reduce_warnings;
};

void print_parse_error(std::ostream& err, const std::string& path,
                       const ParseError& error) {
    err << path << ":" << error.line << ":" << error.column << ": error: "
        << error.message << "\n";
    if (!error.snippet.empty()) {
        err << "  " << error.snippet << "\n";
        err << "  " << std::string(static_cast<std::size_t>(
                           error.column > 0 ? error.column - 1 : 0), ' ')
            << "^\n";
    }
}

void print_semantic_errors(std::ostream& err, const std::string& path,
                           const std::vector<SemanticError>& errors) {
    for (const auto& e : errors) {
        err << path << ":" << e.pos.line << ":" << e.pos.column
            << ": error: " << e.message() << "\n";
    }
}

// Parse + resolve + reduce + levels; on failure prints diagnostics and
// returns the exit code instead.
int load(const CliConfig& config, std::ostream& err, LoadedCatalog& out) {
    std::ifstream in(config.input_path, std::ios::binary);
    if (!in) {
        err << config.input_path << ": error: cannot open input file\n";
        return kExitIoError;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        err << config.input_path << ": error: read failure\n";
        return kExitIoError;
    }

    auto parsed = parse_catalog(buffer.str());
    if (!parsed.ok()) {
        print_parse_error(err, config.input_path, *parsed.error);
        return kExitCatalogError;
    }
    auto resolved = resolve(*parsed.catalog);
    if (!resolved.ok()) {
        print_semantic_errors(err, config.input_path, resolved.errors);
        return kExitCatalogError;
    }

    auto reduced = transitive_reduce(*resolved.graph);
    compute_levels(reduced.graph);
    out.catalog = std::move(*parsed.catalog);
    out.reduced = std::move(reduced.graph);
    out.reduce_warnings = std::move(reduced.warnings);
    return kExitOk;
}

void print_warnings(std::ostream& err, const std::string& path,
                    const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) {
        err << path << ": warning: " << w << "\n";
    }
}

int run_validate(const CliConfig& config, std::ostream& out, std::ostream& err) {
    LoadedCatalog loaded;
    if (int code = load(config, err, loaded); code != kExitOk) return code;
    print_warnings(err, config.input_path, loaded.reduce_warnings);
    auto stats = catalog_stats(loaded.catalog);
    out << "OK: " << stats.structure_count << " structures, " << stats.edge_count
        << " edges, " << stats.section_count << " sections\n";
    return kExitOk;
}

int run_stats(const CliConfig& config, std::ostream& out, std::ostream& err) {
    LoadedCatalog loaded;
    if (int code = load(config, err, loaded); code != kExitOk) return code;
    auto stats = catalog_stats(loaded.catalog);
    out << "OK: " << stats.structure_count << " structures, " << stats.edge_count
        << " edges, " << stats.section_count << " sections\n";

    std::map<std::string, int> per_section;
    for (const auto& structure : loaded.catalog.structures) {
        for (const auto& id : structure.sections) ++per_section[id];
    }
    for (const auto& section : loaded.catalog.sections) {
        auto it = per_section.find(section.id);
        out << "section " << section.id << ": "
            << (it == per_section.end() ? 0 : it->second) << "\n";
    }

    std::map<int, int> histogram;
    for (const auto& node : loaded.reduced.nodes) ++histogram[node.level];
    for (const auto& [level, count] : histogram) {
        out << "level " << level << ": " << count << "\n";
    }
    return kExitOk;
}

// Writes content atomically: a temporary file in the same directory is
// renamed over the final name only after a complete write.
bool write_file_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return false;
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) return false;
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    return !ec;
}

int run_render(const CliConfig& config, std::ostream& out, std::ostream& err) {
    LoadedCatalog loaded;
    if (int code = load(config, err, loaded); code != kExitOk) return code;
    print_warnings(err, config.input_path, loaded.reduce_warnings);

    std::vector<NamedMap> maps;
    if (config.map == "suite") {
        maps = map_suite(loaded.reduced);
    } else {
        MapSpec spec;
        std::string name = config.map;
        if (config.map == "all") {
            spec = MapSpec::full_map();
        } else if (config.map == "top") {
            spec = MapSpec::top_level_map();
        } else {
            spec = MapSpec::section_map(config.map);
            auto canonical = map_name_for_section(loaded.reduced, config.map);
            if (!canonical) {
                err << config.input_path << ": error: unknown section \""
                    << config.map << "\"\n";
                return kExitCatalogError;
            }
            name = *canonical;
        }
        auto selection = select_map(loaded.reduced, spec);
        if (!selection) {
            err << config.input_path << ": error: unknown section \"" << config.map
                << "\"\n";
            return kExitCatalogError;
        }
        maps.push_back({name, std::move(*selection)});
    }

    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec || !fs::is_directory(config.out_dir)) {
        err << config.out_dir << ": error: cannot create output directory\n";
        return kExitIoError;
    }

    for (auto& map : maps) {
        for (const auto& [parent, child] : map.selection.dangling_parents) {
            err << "note: map " << map.name << ": parent \"" << parent << "\" of \""
                << child << "\" is not shown\n";
        }
        size_nodes(map.selection.graph);
        LayoutOptions layout_options;
        layout_options.include_body = !config.outline;
        RenderPlan plan = layout(map.selection.graph, layout_options);
        for (EmitFormat format : config.formats) {
            EmitOptions emit_options;
            emit_options.format = format;
            emit_options.include_body = !config.outline;
            emit_options.title = map.name;
            std::string content = emit(plan, emit_options);
            fs::path path = fs::path(config.out_dir) /
                            (map.name + "." + format_extension(format));
            if (!write_file_atomic(path, content)) {
                err << path.string() << ": error: cannot write output file\n";
                return kExitIoError;
            }
            out << map.name << "\t" << format_name(format) << "\t"
                << path.generic_string() << "\n";
        }
    }
    return kExitOk;
}

int run_query(const CliConfig& config, std::ostream& out, std::ostream& err) {
    LoadedCatalog loaded;
    if (int code = load(config, err, loaded); code != kExitOk) return code;

    auto hood = neighborhood(loaded.reduced, config.query_name, config.radius);
    if (!hood) {
        err << config.input_path << ": error: unknown structure \""
            << config.query_name << "\"\n";
        return kExitCatalogError;
    }
    size_nodes(hood->graph);
    LayoutOptions layout_options;
    layout_options.include_body = !config.outline;
    layout_options.focal_node = hood->focal;
    RenderPlan plan = layout(hood->graph, layout_options);
    EmitOptions emit_options;
    emit_options.format = EmitFormat::Dot;
    emit_options.include_body = !config.outline;
    emit_options.title = "query";
    out << emit_dot(plan, emit_options);
    return kExitOk;
}

}  // namespace

std::optional<Neighborhood> neighborhood(const ResolvedGraph& graph,
                                         const std::string& name, int radius) {
    int focal = -1;
    for (int v = 0; v < static_cast<int>(graph.nodes.size()); ++v) {
        if (graph.nodes[v].structure.name == name) {
            focal = v;
            break;
        }
    }
    if (focal < 0) return std::nullopt;

    // Breadth-first over undirected adjacency.
    std::vector<std::vector<int>> adjacent(graph.nodes.size());
    for (const auto& e : graph.edges) {
        adjacent[e.from].push_back(e.to);
        adjacent[e.to].push_back(e.from);
    }
    std::vector<int> distance(graph.nodes.size(), -1);
    std::vector<int> queue = {focal};
    distance[focal] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        if (distance[v] == radius) continue;
        for (int w : adjacent[v]) {
            if (distance[w] < 0) {
                distance[w] = distance[v] + 1;
                queue.push_back(w);
            }
        }
    }

    Neighborhood result;
    std::vector<int> remap(graph.nodes.size(), -1);
    for (int v = 0; v < static_cast<int>(graph.nodes.size()); ++v) {
        if (distance[v] < 0) continue;
        remap[v] = static_cast<int>(result.graph.nodes.size());
        result.graph.nodes.push_back(graph.nodes[v]);
    }
    for (const auto& e : graph.edges) {
        if (remap[e.from] >= 0 && remap[e.to] >= 0) {
            result.graph.edges.push_back({remap[e.from], remap[e.to], e.label, e.keep});
        }
    }
    result.graph.section_palette = graph.section_palette;
    result.graph.sections = graph.sections;
    result.focal = remap[focal];
    compute_levels(result.graph);
    return result;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.command) {
        case Command::Validate: return run_validate(config, out, err);
        case Command::Render: return run_render(config, out, err);
        case Command::Stats: return run_stats(config, out, err);
        case Command::Query: return run_query(config, out, err);
    }
    return kExitIoError;
}

}  // namespace structmap
