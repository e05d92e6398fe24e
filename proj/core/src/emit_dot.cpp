#include "structmap/emit.hpp"

#include <string>

#include "emit_util.hpp"

namespace structmap {

using namespace emit_util;

namespace {

// Quote and backslash escaping without the surrounding quotes, for label
// strings assembled with explicit \n line breaks.
std::string dot_escape_inner(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string emit_dot(const RenderPlan& plan, const EmitOptions& options) {
    std::string out;
    out += "digraph " + dot_quote(options.title.value_or("map")) + " {\n";
    if (!plan.node_boxes.empty()) {
        out += "  graph [splines=line];\n";
        out += "  node [shape=box, style=\"filled,rounded\"];\n";
    }
    for (const auto& box : plan.node_boxes) {
        std::string label = dot_escape_inner(box.name);
        if (options.include_body) {
            for (const auto& line : box.body_lines) {
                label += "\\n" + dot_escape_inner(line);
            }
        }
        // Graphviz y grows upward; positions are pinned in points.
        out += "  " + dot_quote(box.name) + " [pos=" +
               dot_quote(fmt_num(box.cx) + "," + fmt_num(plan.height - box.cy) + "!") +
               ", width=" + fmt_num(box.width / 72.0) + ", height=" +
               fmt_num(box.height / 72.0);
        if (!box.fill_stops.empty()) {
            std::string fill = box.fill_stops[0].to_hex();
            for (std::size_t i = 1; i < box.fill_stops.size(); ++i) {
                fill += ":" + box.fill_stops[i].to_hex();
            }
            out += ", fillcolor=" + dot_quote(fill);
        }
        if (!box.wikipedia.empty()) {
            out += ", URL=" + dot_quote(box.wikipedia);
        }
        if (box.focal) {
            out += ", peripheries=2";
        }
        out += ", label=\"" + label + "\"];\n";
    }
    for (const auto& path : plan.edge_paths) {
        out += "  " + dot_quote(plan.node_boxes[path.from_node].name) + " -> " +
               dot_quote(plan.node_boxes[path.to_node].name);
        if (path.label) {
            out += " [label=" + dot_quote(*path.label) + "]";
        }
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace structmap
