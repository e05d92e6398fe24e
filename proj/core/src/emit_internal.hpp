#pragma once

#include <string>

#include "structmap/emit.hpp"

namespace structmap {

/// The <svg> element without the XML prolog; emit_html embeds this inline.
std::string svg_element(const RenderPlan& plan, const EmitOptions& options);

}  // namespace structmap
