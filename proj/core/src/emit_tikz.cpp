#include "structmap/emit.hpp"

#include <string>
#include <vector>

#include "emit_util.hpp"

namespace structmap {

using namespace emit_util;

namespace {

std::string color_macro(const RgbColor& color) {
    std::string hex = color.to_hex();
    return "c" + hex.substr(1);
}

}  // namespace

std::string emit_tikz(const RenderPlan& plan, const EmitOptions& options) {
    std::string out;
    if (options.title) {
        out += "% " + *options.title + "\n";
    }
    out += "\\documentclass[tikz,border=4pt]{standalone}\n";
    out += "\\usepackage{hyperref}\n";
    out += "\\usetikzlibrary{arrows.meta}\n";

    // One \definecolor per distinct fill color, in first-use order.
    std::vector<RgbColor> distinct;
    for (const auto& box : plan.node_boxes) {
        for (const auto& color : box.fill_stops) {
            bool known = false;
            for (const auto& seen : distinct) known = known || seen == color;
            if (!known) distinct.push_back(color);
        }
    }
    for (const auto& color : distinct) {
        out += "\\definecolor{" + color_macro(color) + "}{HTML}{" +
               color.to_hex().substr(1) + "}\n";
    }

    out += "\\begin{document}\n";
    out += "\\begin{tikzpicture}[x=1pt,y=1pt]\n";

    for (const auto& box : plan.node_boxes) {
        std::string fill_opts;
        if (box.fill_stops.empty()) {
            fill_opts = "fill=white";
        } else if (box.fill_stops.size() == 1) {
            fill_opts = "fill=" + color_macro(box.fill_stops[0]);
        } else {
            if (box.fill_stops.size() > 2) {
                // TikZ two-color shading only; further stops are dropped.
                out += "  % node \"" + tex_escape(box.name) +
                       "\": additional fill colors omitted\n";
            }
            fill_opts = "left color=" + color_macro(box.fill_stops[0]) +
                        ", right color=" + color_macro(box.fill_stops[1]);
        }
        std::string body;
        body += "\\href{" + tex_escape_url(box.wikipedia) + "}{\\textbf{" +
                tex_escape(box.name) + "}}";
        if (options.include_body) {
            for (const auto& line : box.body_lines) {
                body += "\\\\ {\\scriptsize " + tex_escape(line) + "}";
            }
        }
        out += "  \\node[draw, rounded corners, align=center, " + fill_opts +
               ", text width=" + fmt_num(box.width - 2 * layout_units::kPadding) +
               "pt, minimum height=" + fmt_num(box.height) + "pt" +
               (box.focal ? ", very thick" : "") + "] (n" + std::to_string(box.node) +
               ") at (" + fmt_num(box.cx) + "," + fmt_num(-box.cy) + ") {" + body +
               "};\n";
    }

    for (const auto& path : plan.edge_paths) {
        out += "  \\draw[-{Stealth}] (" + fmt_num(path.source.x) + "," +
               fmt_num(-path.source.y) + ") -- (" + fmt_num(path.target.x) + "," +
               fmt_num(-path.target.y) + ")";
        if (path.label) {
            out += " node[midway, right, font=\\tiny] {" + tex_escape(*path.label) + "}";
        }
        out += ";\n";
    }

    out += "\\end{tikzpicture}\n";
    out += "\\end{document}\n";
    return out;
}

}  // namespace structmap
