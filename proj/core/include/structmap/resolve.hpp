#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "structmap/catalog.hpp"

namespace structmap {

/// One node of the resolved extension graph. fill_stops holds one color per
/// section of the structure, in the structure's declared section order (the
/// author controls fade direction). level and size_scale start at defaults
/// and are filled by the transform and layout passes.
struct NodeInfo {
    StructureDef structure;
    std::vector<RgbColor> fill_stops;
    int level = 0;
    double size_scale = 1.0;
};

/// A directed extension edge. Direction is general -> specific: `from` is
/// the target of the ExtensionRef, `to` the declaring structure.
struct EdgeInfo {
    int from = 0;
    int to = 0;
    std::optional<std::string> label;
    bool keep = false;

    friend bool operator==(const EdgeInfo&, const EdgeInfo&) = default;
};

/// Validated, acyclic extension graph. Node and edge order follow catalog
/// declaration order. Immutable by convention after construction.
struct ResolvedGraph {
    std::vector<NodeInfo> nodes;
    std::vector<EdgeInfo> edges;
    std::map<std::string, RgbColor> section_palette;
    std::vector<SectionDecl> sections;  // declaration order, drives map naming
};

enum class SemanticErrorKind {
    UnresolvedTarget,
    DuplicateName,
    DuplicateSection,
    UnknownSection,
    Cycle,
    SelfReference,
    BadMerge,
};

struct SemanticError {
    SemanticErrorKind kind;
    std::string offender;
    SourcePos pos;
    std::vector<std::string> cycle_path;  // non-empty iff kind == Cycle; first == last

    /// Human-readable one-line description.
    std::string message() const;
};

const char* to_string(SemanticErrorKind kind);

/// Either the resolved graph or the complete list of semantic errors.
struct ResolveResult {
    std::optional<ResolvedGraph> graph;
    std::vector<SemanticError> errors;

    bool ok() const { return graph.has_value(); }
};

/// Validates a catalog and builds the extension graph. Unlike the parser
/// this collects every error before giving up: k independent violations
/// yield k errors. Succeeds iff all names and sections resolve, no structure
/// extends itself, merges are sane, and the extension relation is a DAG.
/// Cycle witnesses start at the lexicographically least member and follow
/// the extends direction (each entry extends the next).
ResolveResult resolve(const Catalog& catalog);

}  // namespace structmap
