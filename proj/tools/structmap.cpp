// Command-line front end for the structure-map pipeline: parse a catalog,
// validate it, and render relationship maps as SVG, TikZ, DOT, or HTML.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "structmap/cli.hpp"

namespace {

std::vector<structmap::EmitFormat> parse_format_list(const std::string& spec,
                                                     std::string& bad_token) {
    std::vector<structmap::EmitFormat> formats;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) continue;
        auto format = structmap::parse_format(token);
        if (!format) {
            bad_token = token;
            return {};
        }
        bool seen = false;
        for (auto f : formats) seen = seen || f == *format;
        if (!seen) formats.push_back(*format);
    }
    return formats;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structmap: compile a catalog of mathematical structures into "
                 "hierarchical relationship maps"};
    app.require_subcommand(1);

    structmap::CliConfig config;
    std::string formats_spec = "svg,html";

    app.add_option("--input", config.input_path, "Catalog file")
        ->capture_default_str();

    auto* validate = app.add_subcommand("validate", "Parse and resolve the catalog");
    auto* render = app.add_subcommand("render", "Render maps into an output directory");
    auto* query = app.add_subcommand(
        "query", "Print the neighborhood of one structure as DOT");
    auto* stats = app.add_subcommand("stats", "Catalog and hierarchy statistics");
    // --input may appear before or after the subcommand.
    for (auto* sub : {validate, render, query, stats}) sub->fallthrough();

    render->add_option("--out-dir", config.out_dir, "Output directory")
        ->capture_default_str();
    render->add_option("--formats", formats_spec,
                       "Comma-separated subset of svg,tikz,dot,html")
        ->capture_default_str();
    render->add_option("--map", config.map,
                       "Map selector: suite, all, top, or a section id")
        ->capture_default_str();
    render->add_flag("--outline", config.outline, "Name-only outline nodes");

    query->add_option("--name", config.query_name, "Structure name")->required();
    query->add_option("--radius", config.radius, "Neighborhood radius (>= 0)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    query->add_flag("--outline", config.outline, "Name-only outline nodes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : structmap::kExitIoError;
    }

    if (validate->parsed()) config.command = structmap::Command::Validate;
    if (render->parsed()) config.command = structmap::Command::Render;
    if (query->parsed()) config.command = structmap::Command::Query;
    if (stats->parsed()) config.command = structmap::Command::Stats;

    if (render->parsed()) {
        std::string bad_token;
        config.formats = parse_format_list(formats_spec, bad_token);
        if (config.formats.empty()) {
            std::cerr << "error: invalid --formats value \""
                      << (bad_token.empty() ? formats_spec : bad_token)
                      << "\" (expected a subset of svg,tikz,dot,html)\n";
            return structmap::kExitIoError;
        }
    }

    return structmap::run(config, std::cout, std::cerr);
}
