#pragma once

// Shared fixtures: the shipped catalog, tiny hand-built graphs, and the
// pipeline steps tests run most often.

#include <string>
#include <vector>

#include "structmap/parse.hpp"
#include "structmap/resolve.hpp"
#include "structmap/transform.hpp"

namespace structmap::testing {

std::string seed_path();
std::string seed_source();
Catalog seed_catalog();

/// Resolved, reduced, levelled seed graph.
ResolvedGraph seed_graph();

/// Graph from (name, parents) pairs, single grey section, for transform
/// and layout tests. Parents must name earlier entries.
ResolvedGraph chain_graph(const std::vector<std::pair<std::string,
                                                      std::vector<std::string>>>& spec);

}  // namespace structmap::testing
