#include "structmap/emit.hpp"

#include <string>

#include "emit_internal.hpp"
#include "emit_util.hpp"

namespace structmap {

using namespace emit_util;

namespace {

void emit_svg_body(std::string& out, const RenderPlan& plan, const EmitOptions& options) {
    out += "  <defs>\n";
    out += "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\""
           " markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\n";
    out += "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#333333\"/>\n";
    out += "    </marker>\n";
    for (const auto& box : plan.node_boxes) {
        if (box.fill_stops.size() < 2) continue;
        out += "    <linearGradient id=\"grad" + std::to_string(box.node) +
               "\" x1=\"0\" y1=\"0\" x2=\"1\" y2=\"0\">\n";
        const int k = static_cast<int>(box.fill_stops.size());
        for (int i = 0; i < k; ++i) {
            out += "      <stop offset=\"" + stop_offset(i, k) + "\" stop-color=\"" +
                   box.fill_stops[i].to_hex() + "\"/>\n";
        }
        out += "    </linearGradient>\n";
    }
    out += "  </defs>\n";

    out += "  <g class=\"edges\">\n";
    for (const auto& path : plan.edge_paths) {
        out += "    <line x1=\"" + fmt_num(path.source.x) + "\" y1=\"" +
               fmt_num(path.source.y) + "\" x2=\"" + fmt_num(path.target.x) +
               "\" y2=\"" + fmt_num(path.target.y) +
               "\" stroke=\"#333333\" stroke-width=\"1\" marker-end=\"url(#arrow)\"/>\n";
        if (path.label) {
            out += "    <text x=\"" + fmt_num(path.label_pos.x) + "\" y=\"" +
                   fmt_num(path.label_pos.y) +
                   "\" font-size=\"8\" fill=\"#333333\">" + xml_escape_text(*path.label) +
                   "</text>\n";
        }
    }
    out += "  </g>\n";

    out += "  <g class=\"nodes\" font-family=\"Helvetica, Arial, sans-serif\">\n";
    for (const auto& box : plan.node_boxes) {
        const double scale = box.width / layout_units::kBaseWidth;
        const double left = box.cx - box.width / 2;
        const double top = box.cy - box.height / 2;
        std::string fill = box.fill_stops.size() >= 2
                               ? "url(#grad" + std::to_string(box.node) + ")"
                               : (box.fill_stops.empty() ? std::string("#FFFFFF")
                                                         : box.fill_stops[0].to_hex());
        out += "    <a href=\"" + xml_escape_attr(box.wikipedia) + "\">\n";
        out += "      <g id=\"n" + std::to_string(box.node) + "\">\n";
        out += "        <rect x=\"" + fmt_num(left) + "\" y=\"" + fmt_num(top) +
               "\" width=\"" + fmt_num(box.width) + "\" height=\"" + fmt_num(box.height) +
               "\" rx=\"" + fmt_num(6 * scale) + "\" fill=\"" + fill +
               "\" stroke=\"#333333\" stroke-width=\"" + (box.focal ? "3" : "1") +
               "\"/>\n";
        out += "        <text x=\"" + fmt_num(box.cx) + "\" y=\"" +
               fmt_num(top + (layout_units::kPadding + layout_units::kNameHeight * 0.75) *
                                 scale) +
               "\" text-anchor=\"middle\" font-weight=\"bold\" font-size=\"" +
               fmt_num(11 * scale) + "\">" + xml_escape_text(box.name) + "</text>\n";
        if (options.include_body) {
            const double body_x = left + layout_units::kPadding * scale;
            for (std::size_t i = 0; i < box.body_lines.size(); ++i) {
                const double body_y =
                    top + (layout_units::kPadding + layout_units::kNameHeight +
                           layout_units::kLineHeight * (static_cast<double>(i) + 0.8)) *
                              scale;
                out += "        <text x=\"" + fmt_num(body_x) + "\" y=\"" +
                       fmt_num(body_y) + "\" font-size=\"" + fmt_num(8.5 * scale) +
                       "\">" + xml_escape_text(box.body_lines[i]) + "</text>\n";
            }
        }
        out += "      </g>\n";
        out += "    </a>\n";
    }
    out += "  </g>\n";
}

}  // namespace

std::string emit_svg(const RenderPlan& plan, const EmitOptions& options) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += svg_element(plan, options);
    return out;
}

std::string svg_element(const RenderPlan& plan, const EmitOptions& options) {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_num(plan.width) +
           "\" height=\"" + fmt_num(plan.height) + "\" viewBox=\"0 0 " +
           fmt_num(plan.width) + " " + fmt_num(plan.height) + "\">\n";
    if (options.title) {
        out += "  <title>" + xml_escape_text(*options.title) + "</title>\n";
    }
    emit_svg_body(out, plan, options);
    out += "</svg>\n";
    return out;
}

}  // namespace structmap
