#include "structmap/parse.hpp"

#include <string>

namespace structmap {

namespace {

std::string quote(const std::string& text) {
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

void print_ref(std::string& out, const ExtensionRef& ref) {
    out += quote(ref.target);
    if (ref.label) {
        out += " label ";
        out += quote(*ref.label);
    }
    if (ref.keep) {
        out += " keep";
    }
}

void print_string_list(std::string& out, const char* field,
                       const std::vector<std::string>& items) {
    if (items.empty()) return;
    out += "  ";
    out += field;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += i == 0 ? " " : ", ";
        out += quote(items[i]);
    }
    out += '\n';
}

}  // namespace

std::string print_catalog(const Catalog& catalog) {
    std::string out;
    for (const auto& section : catalog.sections) {
        out += "section ";
        out += section.id;
        out += " color ";
        out += quote(section.color.to_hex());
        if (section.merge_with) {
            out += " merge-with ";
            out += *section.merge_with;
        }
        out += '\n';
    }
    for (const auto& def : catalog.structures) {
        out += "structure ";
        out += quote(def.name);
        out += " in ";
        for (std::size_t i = 0; i < def.sections.size(); ++i) {
            if (i > 0) out += ", ";
            out += def.sections[i];
        }
        out += " {\n";
        if (!def.types.empty()) {
            out += "  types:";
            for (std::size_t i = 0; i < def.types.size(); ++i) {
                out += i == 0 ? " " : ", ";
                print_ref(out, def.types[i]);
            }
            out += '\n';
        }
        print_string_list(out, "functions:", def.functions);
        print_string_list(out, "relations:", def.relations);
        print_string_list(out, "properties:", def.properties);
        if (!def.wikipedia.empty()) {
            out += "  wikipedia: ";
            out += quote(def.wikipedia);
            out += '\n';
        }
        if (def.representative) {
            out += "  representative\n";
        }
        out += "}\n";
    }
    return out;
}

}  // namespace structmap
