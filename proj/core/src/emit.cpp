#include "structmap/emit.hpp"

namespace structmap {

std::optional<EmitFormat> parse_format(const std::string& name) {
    if (name == "svg") return EmitFormat::Svg;
    if (name == "tikz") return EmitFormat::Tikz;
    if (name == "dot") return EmitFormat::Dot;
    if (name == "html") return EmitFormat::Html;
    return std::nullopt;
}

const char* format_name(EmitFormat format) {
    switch (format) {
        case EmitFormat::Svg: return "svg";
        case EmitFormat::Tikz: return "tikz";
        case EmitFormat::Dot: return "dot";
        case EmitFormat::Html: return "html";
    }
    return "svg";
}

const char* format_extension(EmitFormat format) {
    switch (format) {
        case EmitFormat::Svg: return "svg";
        case EmitFormat::Tikz: return "tex";
        case EmitFormat::Dot: return "dot";
        case EmitFormat::Html: return "html";
    }
    return "svg";
}

std::string emit(const RenderPlan& plan, const EmitOptions& options) {
    switch (options.format) {
        case EmitFormat::Svg: return emit_svg(plan, options);
        case EmitFormat::Tikz: return emit_tikz(plan, options);
        case EmitFormat::Dot: return emit_dot(plan, options);
        case EmitFormat::Html: return emit_html(plan, options);
    }
    return {};
}

}  // namespace structmap
