#pragma once

#include "srg/proof.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace srg {

// Trace JSON:
// {
//   "params": {n, k, lambda, mu},
//   "labeling": {"anchor": [a, b, c], "A": [...], "B": [...], "C": [...], "W": [...]},
//   "lemmas": [{"name", "statement", "holds"}],
//   "excluded_structures": [{"structure": [...], "reason"}],
//   "cases": [{"structure": [...], "label", "cycle_edges": [[x, y], ...], "nodes",
//              "leaves": [{"path": [{"edge": [x, y], "apex": w} | {"chord": [x, y]}],
//                          "certificate": {"kind", "witnesses": [...],
//                                          "blocked": [{"apex", "certificate"}]}}],
//              "surviving_completions", "counterexamples": [graph6...], "note"}],
//   "surviving_completions": N,
//   "counterexamples": [graph6...],
//   "stats": {"nodes_explored", "leaves", "surviving_completions", "certificates": {kind: count}}
// }

nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const ProofTrace& trace);

/// Throws nlohmann::json::exception or InputError on schema mismatch.
ProofTrace trace_from_json(const nlohmann::json& j);

struct ReplayFailure {
    std::size_t case_index = 0;
    std::string case_label;
    std::size_t leaf_index = 0; // SIZE_MAX for case-level failures
    std::string message;
};

struct ReplayReport {
    std::size_t leaves_checked = 0;
    std::vector<ReplayFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Re-validates a trace using only graph-core primitives: rebuilds each
/// leaf's partial graph from the labeling, cycle edges and path, then checks
/// the certificate against it. Also checks that the leaves cover every
/// branch (used apexes plus one fresh apex) and that the stats add up.
ReplayReport replay(const ProofTrace& trace);

} // namespace srg
