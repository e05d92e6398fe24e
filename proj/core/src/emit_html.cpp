#include "structmap/emit.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "emit_internal.hpp"
#include "emit_util.hpp"

namespace structmap {

using namespace emit_util;

std::string emit_html(const RenderPlan& plan, const EmitOptions& options) {
    const std::string title = options.title.value_or("map");

    // Alphabetical index; entries scroll to the node's group in the SVG.
    std::vector<const NodeBox*> index;
    index.reserve(plan.node_boxes.size());
    for (const auto& box : plan.node_boxes) index.push_back(&box);
    std::sort(index.begin(), index.end(), [](const NodeBox* a, const NodeBox* b) {
        if (a->name != b->name) return a->name < b->name;
        return a->node < b->node;
    });

    std::string out;
    out += "<!DOCTYPE html>\n";
    out += "<html lang=\"en\">\n";
    out += "<head>\n";
    out += "<meta charset=\"utf-8\"/>\n";
    out += "<title>" + xml_escape_text(title) + "</title>\n";
    out += "<style>\n";
    out += "body { font-family: Helvetica, Arial, sans-serif; margin: 1.5em; }\n";
    out += "nav.index ul { columns: 18em 4; list-style: none; padding: 0; }\n";
    out += "nav.index a { text-decoration: none; }\n";
    out += ".map { overflow: auto; border: 1px solid #cccccc; }\n";
    out += "</style>\n";
    out += "</head>\n";
    out += "<body>\n";
    out += "<h1>" + xml_escape_text(title) + "</h1>\n";
    out += "<nav class=\"index\">\n";
    out += "<ul>\n";
    for (const NodeBox* box : index) {
        out += "<li><a href=\"#n" + std::to_string(box->node) + "\">" +
               xml_escape_text(box->name) + "</a></li>\n";
    }
    out += "</ul>\n";
    out += "</nav>\n";
    out += "<div class=\"map\">\n";
    out += svg_element(plan, options);
    out += "</div>\n";
    out += "</body>\n";
    out += "</html>\n";
    return out;
}

}  // namespace structmap
