#include "emit_util.hpp"

#include <cstdio>

namespace structmap::emit_util {

std::string fmt_num(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    std::string out = buf;
    auto dot = out.find('.');
    if (dot != std::string::npos) {
        auto last = out.find_last_not_of('0');
        out.erase(last == dot ? dot : last + 1);
    }
    if (out == "-0") out = "0";
    return out;
}

std::string stop_offset(int i, int k) {
    return fmt_num(100.0 * i / (k - 1)) + "%";
}

std::string xml_escape_text(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string xml_escape_attr(const std::string& text) {
    std::string out;
    out.reserve(text.size());
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

std::string tex_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '\\': out += "\\textbackslash{}"; break;
            case '&': out += "\\&"; break;
            case '%': out += "\\%"; break;
            case '$': out += "\\$"; break;
            case '#': out += "\\#"; break;
            case '_': out += "\\_"; break;
            case '{': out += "\\{"; break;
            case '}': out += "\\}"; break;
            case '~': out += "\\textasciitilde{}"; break;
            case '^': out += "\\textasciicircum{}"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string tex_escape_url(const std::string& url) {
    std::string out;
    out.reserve(url.size());
    for (char c : url) {
        switch (c) {
            case '%': out += "\\%"; break;
            case '#': out += "\\#"; break;
            case '&': out += "\\&"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string dot_quote(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    out.push_back('"');
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace structmap::emit_util
