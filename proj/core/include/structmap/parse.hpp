#pragma once

#include <string>
#include <optional>

#include "structmap/catalog.hpp"

namespace structmap {

/// First grammar violation found in a catalog source. line/column are
/// 1-based and point into the input (or one past its end for unexpected
/// end-of-input). snippet is the offending source line, untrimmed.
struct ParseError {
    int line = 1;
    int column = 1;
    std::string message;
    std::string snippet;
};

/// Either a catalog or the first parse error; never both.
struct ParseResult {
    std::optional<Catalog> catalog;
    std::optional<ParseError> error;

    bool ok() const { return catalog.has_value(); }
};

/// Parses catalog source text. Fail-fast: stops at the first grammar
/// violation. Performs no name resolution; undefined targets are legal here
/// and rejected later by resolve(). Total: any input yields a catalog or an
/// error, never a crash.
ParseResult parse_catalog(const std::string& source);

/// Pretty-prints a catalog to canonical text: sections first, then
/// structures, fields one per line in fixed order with two-space indent,
/// strings quoted with backslash escaping. parse_catalog(print_catalog(c))
/// equals c for every well-formed catalog.
std::string print_catalog(const Catalog& catalog);

}  // namespace structmap
