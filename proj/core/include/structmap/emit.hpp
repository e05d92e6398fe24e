#pragma once

#include <optional>
#include <string>
#include <vector>

#include "structmap/layout.hpp"

namespace structmap {

enum class EmitFormat { Svg, Tikz, Dot, Html };

/// Parses one of "svg", "tikz", "dot", "html".
std::optional<EmitFormat> parse_format(const std::string& name);

const char* format_name(EmitFormat format);

/// Output file extension: svg, tex, dot, html.
const char* format_extension(EmitFormat format);

struct EmitOptions {
    EmitFormat format = EmitFormat::Svg;
    bool include_body = true;  // false: name-only outline nodes
    std::optional<std::string> title;
};

/// All four emitters are pure and deterministic: identical plans yield
/// byte-identical output.
std::string emit_svg(const RenderPlan& plan, const EmitOptions& options);
std::string emit_tikz(const RenderPlan& plan, const EmitOptions& options);
std::string emit_dot(const RenderPlan& plan, const EmitOptions& options);
std::string emit_html(const RenderPlan& plan, const EmitOptions& options);

/// Dispatches on options.format.
std::string emit(const RenderPlan& plan, const EmitOptions& options);

}  // namespace structmap
