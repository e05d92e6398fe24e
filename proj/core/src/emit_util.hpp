#pragma once

#include <string>

namespace structmap::emit_util {

/// Fixed-point number formatting shared by every emitter: three decimals,
/// trailing zeros trimmed, no negative zero. Keeps output byte-stable.
std::string fmt_num(double value);

/// Gradient stop offset for stop i of k evenly spaced stops ("0%", "50%").
std::string stop_offset(int i, int k);

// Escaping tables are fixed here; golden tests depend on them.
//
//   XML text:       & < >                 become &amp; &lt; &gt;
//   XML attribute:  & < > "               become &amp; &lt; &gt; &quot;
//   TeX text:       backslash & % $ # _ { } ~ ^  become control sequences
//   TeX URL:        % # &                 get a leading backslash (href arg)
//   DOT string:     quote and backslash   get a leading backslash

std::string xml_escape_text(const std::string& text);
std::string xml_escape_attr(const std::string& text);
std::string tex_escape(const std::string& text);
std::string tex_escape_url(const std::string& url);
std::string dot_quote(const std::string& text);

}  // namespace structmap::emit_util
