#pragma once

#include "srg/params.hpp"
#include "srg/partial_graph.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace srg {

inline constexpr int kSearchGuard = 19;

struct SearchOptions {
    /// Pre-commit the anchor labeling: N(0) = {1..k}, N(1) meets N(0) in
    /// {2..lambda+1} and takes the next block outside, and for lambda = 1
    /// N(2) takes the block after that. Without it, lexicographic row
    /// ordering is the only symmetry breaking.
    bool seeded = false;
    int jobs = 1;
};

struct SearchOutcome {
    SrgParams params;
    std::vector<std::string> solutions; // canonical graph6, sorted
    std::size_t nodes_explored = 0;
    std::size_t max_depth = 0;
    double wall_time_ms = 0.0;
};

/// The seeded root for p, or nullopt when the seed blocks do not fit in n
/// vertices (no graph with these parameters exists then).
std::optional<PartialGraph> seeded_root(const SrgParams& p);

/// All srg(p) up to isomorphism. Throws OutOfScopeError for n > 19 and
/// InputError for parameters that are out of range or fail the identity.
SearchOutcome exhaustive_search(const SrgParams& p, const SearchOptions& options = {});

/// {params, solutions, nodes_explored, max_depth, wall_time_ms}
nlohmann::json to_json(const SearchOutcome& outcome);

} // namespace srg
