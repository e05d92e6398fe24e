#include "structmap/catalog.hpp"

#include <cstdio>

namespace structmap {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::optional<RgbColor> RgbColor::parse(const std::string& text) {
    if (text.size() != 7 || text[0] != '#') return std::nullopt;
    int v[6];
    for (int i = 0; i < 6; ++i) {
        v[i] = hex_digit(text[i + 1]);
        if (v[i] < 0) return std::nullopt;
    }
    RgbColor c;
    c.r = static_cast<std::uint8_t>(v[0] * 16 + v[1]);
    c.g = static_cast<std::uint8_t>(v[2] * 16 + v[3]);
    c.b = static_cast<std::uint8_t>(v[4] * 16 + v[5]);
    return c;
}

std::string RgbColor::to_hex() const {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02X%02X%02X", r, g, b);
    return buf;
}

const StructureDef* catalog_lookup(const Catalog& catalog, const std::string& name) {
    for (const auto& s : catalog.structures) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

CatalogStats catalog_stats(const Catalog& catalog) {
    CatalogStats stats;
    stats.section_count = static_cast<int>(catalog.sections.size());
    stats.structure_count = static_cast<int>(catalog.structures.size());
    for (const auto& s : catalog.structures) {
        stats.edge_count += static_cast<int>(s.types.size());
    }
    return stats;
}

}  // namespace structmap
