#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace structmap {

/// 1-based position of a token or declaration in a catalog file.
struct SourcePos {
    int line = 1;
    int column = 1;

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// An RGB color, always constructed from a "#RRGGBB" string.
struct RgbColor {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    /// Parses "#RRGGBB" (hex digits case-insensitive). Returns absent on any
    /// other shape.
    static std::optional<RgbColor> parse(const std::string& text);

    /// Canonical form: uppercase "#RRGGBB".
    std::string to_hex() const;

    friend bool operator==(const RgbColor&, const RgbColor&) = default;
};

/// One `section` declaration: a family of structures sharing a color.
/// merge_with names another section this one shares a single map with.
struct SectionDecl {
    std::string id;
    RgbColor color;
    std::optional<std::string> merge_with;
    SourcePos pos;

    // Positions are not part of value identity (round-trips re-parse from
    // canonical text, which has different positions).
    friend bool operator==(const SectionDecl& a, const SectionDecl& b) {
        return a.id == b.id && a.color == b.color && a.merge_with == b.merge_with;
    }
};

/// A reference from one structure to a more general one it extends.
/// keep exempts the resulting edge from transitive reduction.
struct ExtensionRef {
    std::string target;
    std::optional<std::string> label;
    bool keep = false;
    SourcePos pos;

    friend bool operator==(const ExtensionRef& a, const ExtensionRef& b) {
        return a.target == b.target && a.label == b.label && a.keep == b.keep;
    }
};

/// One mathematical structure. The four description categories are opaque
/// display strings; types additionally carry the extension edges.
struct StructureDef {
    std::string name;
    std::vector<std::string> sections;
    std::vector<ExtensionRef> types;
    std::vector<std::string> functions;
    std::vector<std::string> relations;
    std::vector<std::string> properties;
    std::string wikipedia;
    bool representative = false;
    SourcePos pos;

    friend bool operator==(const StructureDef& a, const StructureDef& b) {
        return a.name == b.name && a.sections == b.sections && a.types == b.types &&
               a.functions == b.functions && a.relations == b.relations &&
               a.properties == b.properties && a.wikipedia == b.wikipedia &&
               a.representative == b.representative;
    }
};

/// A parsed catalog. Declaration order is preserved; values are immutable
/// after construction and safe to share across threads.
struct Catalog {
    std::vector<SectionDecl> sections;
    std::vector<StructureDef> structures;

    friend bool operator==(const Catalog& a, const Catalog& b) {
        return a.sections == b.sections && a.structures == b.structures;
    }
};

struct CatalogStats {
    int section_count = 0;
    int structure_count = 0;
    int edge_count = 0;  // total ExtensionRef entries

    friend bool operator==(const CatalogStats&, const CatalogStats&) = default;
};

/// Finds the structure with exactly that name. Names are case-sensitive;
/// absence is a value, not an error.
const StructureDef* catalog_lookup(const Catalog& catalog, const std::string& name);

CatalogStats catalog_stats(const Catalog& catalog);

}  // namespace structmap
