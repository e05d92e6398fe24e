// Acceptance suite: runs every acceptance criterion end to end against the
// shipped catalog and the built CLI, printing one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "structmap/cli.hpp"
#include "structmap/parse.hpp"
#include "structmap/transform.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/proc.hpp"

namespace fs = std::filesystem;
using namespace structmap;
using namespace structmap::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure {
    std::string message;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw Failure{message};
}

std::string seed() {
    return STRUCTMAP_SEED_PATH;
}

std::string tool() {
    return STRUCTMAP_TOOL_PATH;
}

fs::path work_dir() {
    return fs::temp_directory_path() / "structmap_acceptance";
}

Catalog load_seed() {
    auto parsed = parse_catalog(read_file(seed()));
    require(parsed.ok(), "seed catalog failed to parse");
    return std::move(*parsed.catalog);
}

ResolvedGraph load_reduced_seed() {
    auto resolved = resolve(load_seed());
    require(resolved.ok(), "seed catalog failed to resolve");
    auto reduced = transitive_reduce(*resolved.graph);
    compute_levels(reduced.graph);
    return std::move(reduced.graph);
}

struct RenderOutputs {
    fs::path dir;
    std::vector<std::string> manifest_lines;
    double elapsed_seconds = 0;
};

std::optional<RenderOutputs> g_render;

const RenderOutputs& rendered() {
    if (!g_render) {
        RenderOutputs outputs;
        outputs.dir = work_dir() / "render1";
        fs::remove_all(outputs.dir);
        auto start = Clock::now();
        auto result = run_process(
            tool(), {"--input", seed(), "render", "--out-dir", outputs.dir.string(),
                     "--formats", "svg,tikz,dot,html", "--map", "suite"});
        outputs.elapsed_seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
        require(result.exit_code == 0,
                "render exited with code " + std::to_string(result.exit_code) + ": " +
                    result.err);
        std::istringstream stream(result.out);
        std::string line;
        while (std::getline(stream, line)) outputs.manifest_lines.push_back(line);
        g_render = std::move(outputs);
    }
    return *g_render;
}

std::string xml_attr_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

// --- criteria ---------------------------------------------------------

// render --map suite produces exactly 11 maps in under five seconds.
void criterion_suite_cardinality() {
    const auto& outputs = rendered();
    std::set<std::string> names;
    for (const auto& line : outputs.manifest_lines) {
        auto tab = line.find('\t');
        require(tab != std::string::npos, "manifest line without tab: " + line);
        names.insert(line.substr(0, tab));
    }
    require(outputs.manifest_lines.size() == 44,
            "expected 44 manifest lines (11 maps x 4 formats), got " +
                std::to_string(outputs.manifest_lines.size()));
    require(names.size() == 11,
            "expected 11 maps, got " + std::to_string(names.size()));
    const std::set<std::string> expected = {
        "algebras", "fields", "graphs", "groups", "posets_lattices",
        "modules", "rings", "sets", "topological_spaces", "all", "top"};
    require(names == expected, "map name set differs from the expected eleven");
    require(outputs.elapsed_seconds < 5.0,
            "render took " + std::to_string(outputs.elapsed_seconds) + "s (limit 5s)");
}

// The catalog declares exactly the ten sections, and validate agrees.
void criterion_ten_sections() {
    auto catalog = load_seed();
    const std::vector<std::string> expected = {
        "algebras", "fields", "graphs", "groups", "lattices",
        "posets", "modules", "rings", "sets", "topological_spaces"};
    require(catalog.sections.size() == expected.size(), "section count != 10");
    for (std::size_t i = 0; i < expected.size(); ++i) {
        require(catalog.sections[i].id == expected[i],
                "section " + std::to_string(i) + " is " + catalog.sections[i].id);
    }
    auto result = run_process(tool(), {"--input", seed(), "validate"});
    require(result.exit_code == 0, "validate failed: " + result.err);
    require(result.out.find(" 10 sections") != std::string::npos,
            "validate output missing ' 10 sections': " + result.out);
}

// The Topological Group node in the full-map SVG fades from the groups
// color to the topological_spaces color, in that order.
void criterion_fading() {
    auto graph = load_reduced_seed();
    int tg = -1;
    for (int v = 0; v < static_cast<int>(graph.nodes.size()); ++v) {
        if (graph.nodes[v].structure.name == "Topological Group") tg = v;
    }
    require(tg >= 0, "Topological Group missing from the catalog");

    std::string svg = read_file((rendered().dir / "all.svg").string());
    std::string gradient_id = "grad" + std::to_string(tg);
    auto begin = svg.find("<linearGradient id=\"" + gradient_id + "\"");
    require(begin != std::string::npos, "no gradient definition for " + gradient_id);
    auto end = svg.find("</linearGradient>", begin);
    require(end != std::string::npos, "unterminated gradient definition");
    std::string block = svg.substr(begin, end - begin);

    std::vector<std::string> stops;
    const std::string marker = "stop-color=\"";
    for (auto pos = block.find(marker); pos != std::string::npos;
         pos = block.find(marker, pos + 1)) {
        auto close = block.find('"', pos + marker.size());
        stops.push_back(block.substr(pos + marker.size(),
                                     close - pos - marker.size()));
    }
    require(stops.size() == 2,
            "expected a two-stop gradient, got " + std::to_string(stops.size()));
    require(stops[0] == graph.section_palette.at("groups").to_hex(),
            "first stop is " + stops[0] + ", not the groups color");
    require(stops[1] == graph.section_palette.at("topological_spaces").to_hex(),
            "second stop is " + stops[1] + ", not the topological_spaces color");
    require(svg.find("fill=\"url(#" + gradient_id + ")\"") != std::string::npos,
            "Topological Group box does not reference its gradient");
    require(block.find("offset=\"0%\"") != std::string::npos &&
                block.find("offset=\"100%\"") != std::string::npos,
            "gradient stops are not at 0% and 100%");
}

// 1000 random DAGs: reduction preserves reachability exactly, keeps keep
// edges, and leaves no removable non-keep edge.
void criterion_reduction_oracle() {
    auto start = Clock::now();
    std::mt19937 rng(1234321);
    for (int trial = 0; trial < 1000; ++trial) {
        auto graph = random_dag(rng, 12);
        const int n = static_cast<int>(graph.nodes.size());
        auto result = transitive_reduce(graph);

        require(brute_force_closure(n, result.graph.edges) ==
                    brute_force_closure(n, graph.edges),
                "trial " + std::to_string(trial) + ": reachability changed");

        std::size_t keep_in = 0, keep_out = 0;
        for (const auto& e : graph.edges) keep_in += e.keep ? 1 : 0;
        for (const auto& e : result.graph.edges) keep_out += e.keep ? 1 : 0;
        require(keep_in == keep_out,
                "trial " + std::to_string(trial) + ": a keep edge was removed");

        auto full = brute_force_closure(n, graph.edges);
        for (std::size_t skip = 0; skip < result.graph.edges.size(); ++skip) {
            if (result.graph.edges[skip].keep) continue;
            std::vector<EdgeInfo> fewer;
            for (std::size_t i = 0; i < result.graph.edges.size(); ++i) {
                if (i != skip) fewer.push_back(result.graph.edges[i]);
            }
            require(brute_force_closure(n, fewer) != full,
                    "trial " + std::to_string(trial) + ": removable edge survived");
        }
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    require(elapsed < 30.0,
            "oracle took " + std::to_string(elapsed) + "s (limit 30s)");
}

// level(from) < level(to) on every edge of every seed map and of 1000
// random reduced DAGs.
void criterion_level_monotonicity() {
    auto graph = load_reduced_seed();
    for (auto& map : map_suite(graph)) {
        for (const auto& e : map.selection.graph.edges) {
            require(map.selection.graph.nodes[e.from].level <
                        map.selection.graph.nodes[e.to].level,
                    "seed map " + map.name + " violates level monotonicity");
        }
    }
    std::mt19937 rng(777);
    for (int trial = 0; trial < 1000; ++trial) {
        auto dag = random_dag(rng, 12);
        auto reduced = transitive_reduce(dag);
        compute_levels(reduced.graph);
        for (const auto& e : reduced.graph.edges) {
            require(reduced.graph.nodes[e.from].level <
                        reduced.graph.nodes[e.to].level,
                    "trial " + std::to_string(trial) + " violates monotonicity");
        }
    }
}

// Two consecutive full renders are byte-identical across all formats.
void criterion_determinism() {
    fs::path dir_a = work_dir() / "det_a";
    fs::path dir_b = work_dir() / "det_b";
    for (const auto& dir : {dir_a, dir_b}) {
        fs::remove_all(dir);
        auto result = run_process(
            tool(), {"--input", seed(), "render", "--out-dir", dir.string(),
                     "--formats", "svg,tikz,dot,html", "--map", "suite"});
        require(result.exit_code == 0, "render failed: " + result.err);
    }
    std::set<std::string> names_a, names_b;
    for (const auto& entry : fs::directory_iterator(dir_a)) {
        names_a.insert(entry.path().filename().string());
    }
    for (const auto& entry : fs::directory_iterator(dir_b)) {
        names_b.insert(entry.path().filename().string());
    }
    require(names_a == names_b, "the two renders produced different file sets");
    require(names_a.size() == 44, "expected 44 files per render");
    for (const auto& name : names_a) {
        require(read_file((dir_a / name).string()) ==
                    read_file((dir_b / name).string()),
                name + " differs between the two renders");
    }
}

// parse . print . parse is the identity on the seed catalog and on 500
// random well-formed catalogs.
void criterion_parser_round_trip() {
    auto catalog = load_seed();
    auto reparsed = parse_catalog(print_catalog(catalog));
    require(reparsed.ok(), "canonical seed text failed to parse");
    require(*reparsed.catalog == catalog, "seed round-trip changed the catalog");

    std::mt19937 rng(13579);
    for (int trial = 0; trial < 500; ++trial) {
        Catalog random = random_catalog(rng);
        auto back = parse_catalog(print_catalog(random));
        require(back.ok(), "trial " + std::to_string(trial) + ": reparse failed");
        require(*back.catalog == random,
                "trial " + std::to_string(trial) + ": round-trip changed the catalog");
    }
}

// Every structure in the full-map HTML is hyperlinked to its wikipedia
// page, and nothing else is.
void criterion_link_completeness() {
    auto catalog = load_seed();
    std::string html = read_file((rendered().dir / "all.html").string());

    std::size_t external = 0;
    const std::string marker = "<a href=\"";
    for (auto pos = html.find(marker); pos != std::string::npos;
         pos = html.find(marker, pos + 1)) {
        if (html[pos + marker.size()] != '#') ++external;
    }
    require(external == catalog.structures.size(),
            "anchor count " + std::to_string(external) + " != structure count " +
                std::to_string(catalog.structures.size()));

    for (std::size_t i = 0; i < catalog.structures.size(); ++i) {
        const auto& def = catalog.structures[i];
        std::string needle = "<a href=\"" + xml_attr_escape(def.wikipedia) +
                             "\">\n      <g id=\"n" + std::to_string(i) + "\">";
        require(html.find(needle) != std::string::npos,
                def.name + " is not linked to its wikipedia page");
    }
}

// Ten deliberately broken catalogs each produce the expected error kind on
// the expected line.
void criterion_error_reporting() {
    struct Case {
        const char* file;
        const char* kind;  // "ParseError" or a SemanticErrorKind name
        int line;
    };
    const Case cases[] = {
        {"unclosed_brace.cat", "ParseError", 5},
        {"duplicate_name.cat", "DuplicateName", 3},
        {"unknown_section.cat", "UnknownSection", 2},
        {"cycle.cat", "Cycle", 2},
        {"self_reference.cat", "SelfReference", 3},
        {"undefined_target.cat", "UnresolvedTarget", 3},
        {"bad_merge.cat", "BadMerge", 1},
        {"bad_color.cat", "ParseError", 1},
        {"duplicate_section.cat", "DuplicateSection", 2},
        {"unterminated_string.cat", "ParseError", 3},
    };
    const std::string dir = std::string(STRUCTMAP_TEST_DATA_DIR) + "/broken/";
    for (const auto& c : cases) {
        auto source = read_file(dir + c.file);
        auto parsed = parse_catalog(source);
        if (std::string(c.kind) == "ParseError") {
            require(!parsed.ok(), std::string(c.file) + ": expected a parse error");
            require(parsed.error->line == c.line,
                    std::string(c.file) + ": parse error on line " +
                        std::to_string(parsed.error->line) + ", expected " +
                        std::to_string(c.line));
            continue;
        }
        require(parsed.ok(), std::string(c.file) + ": unexpected parse error");
        auto resolved = resolve(*parsed.catalog);
        require(!resolved.ok(), std::string(c.file) + ": expected a semantic error");
        require(resolved.errors.size() == 1,
                std::string(c.file) + ": expected exactly one error, got " +
                    std::to_string(resolved.errors.size()));
        const auto& error = resolved.errors[0];
        require(to_string(error.kind) == std::string(c.kind),
                std::string(c.file) + ": kind " + to_string(error.kind) +
                    ", expected " + c.kind);
        require(error.pos.line == c.line,
                std::string(c.file) + ": line " + std::to_string(error.pos.line) +
                    ", expected " + std::to_string(c.line));
    }
}

// The shipped catalog substitutes breadth for the full published roster:
// at least 40 structures, at least 2 per section, all ten sections.
void criterion_scale_substitution() {
    auto catalog = load_seed();
    require(catalog.structures.size() >= 40,
            "catalog ships " + std::to_string(catalog.structures.size()) +
                " structures, expected at least 40");
    std::map<std::string, int> per_section;
    for (const auto& def : catalog.structures) {
        for (const auto& id : def.sections) ++per_section[id];
    }
    require(per_section.size() == 10, "structures do not span all ten sections");
    for (const auto& [id, count] : per_section) {
        require(count >= 2, "section " + id + " has " + std::to_string(count) +
                                " structures, expected at least 2");
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> check;
    };
    const std::vector<Criterion> criteria = {
        {"suite-cardinality", criterion_suite_cardinality},
        {"ten-sections", criterion_ten_sections},
        {"fading", criterion_fading},
        {"reduction-oracle", criterion_reduction_oracle},
        {"level-monotonicity", criterion_level_monotonicity},
        {"determinism", criterion_determinism},
        {"parser-round-trip", criterion_parser_round_trip},
        {"link-completeness", criterion_link_completeness},
        {"error-reporting", criterion_error_reporting},
        {"scale-substitution", criterion_scale_substitution},
    };

    fs::create_directories(work_dir());
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = Clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            criteria[i].check();
        } catch (const Failure& failure) {
            verdict = "FAIL";
            detail = failure.message;
            ++failed;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failed;
        }
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("[%2zu/%zu] %s  %s (%.2fs)%s%s\n", i + 1, criteria.size(),
                    verdict.c_str(), criteria[i].name, elapsed,
                    detail.empty() ? "" : ": ", detail.c_str());
    }
    if (failed == 0) {
        std::printf("RESULT: all %zu acceptance criteria passed\n", criteria.size());
    } else {
        std::printf("RESULT: %d of %zu acceptance criteria failed\n", failed,
                    criteria.size());
    }
    return failed == 0 ? 0 : 1;
}
