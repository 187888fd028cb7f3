#pragma once

#include "srg/graph.hpp"
#include "srg/params.hpp"
#include "srg/partition.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srg {

enum class CertificateKind {
    edge_in_two_triangles,
    vertex_exceeds_three_triangles,
    mu_violation_with_witnesses,
    w_adjacency_quota_violation,
    no_apex_available,
};

std::string_view to_string(CertificateKind kind);
std::optional<CertificateKind> certificate_kind_from(std::string_view name);

struct BlockedApex;

/// Typed contradiction with explicit vertex witnesses.
///
///  - edge_in_two_triangles: [u, v, z1, z2]; u ~ v and z1, z2 are both
///    adjacent to u and v, so the edge uv lies in more than lambda triangles.
///  - vertex_exceeds_three_triangles: [v]; more than k*lambda/2 triangles
///    through v.
///  - mu_violation_with_witnesses: [u, v, c1, ..., cm]; u and v are known
///    non-adjacent and the c's are common neighbors, m > mu (or, in a fully
///    decided graph, m != mu and the c's are all of them).
///  - w_adjacency_quota_violation: [w, x]; x is an anchor vertex and w already
///    has more than mu neighbors in x's class, or too few triangle slots left
///    to reach mu.
///  - no_apex_available: [x, y]; the cycle edge xy and one blocking
///    certificate per W vertex, each valid after adding w~x, w~y.
struct Certificate {
    CertificateKind kind = CertificateKind::no_apex_available;
    std::vector<Vertex> witnesses;
    std::vector<BlockedApex> blocked;
};

struct BlockedApex {
    Vertex apex = 0;
    Certificate reason;
};

/// One decision on a branch: apex w for cycle edge xy, or (no apex) the
/// in-class edge xy.
struct PathStep {
    Vertex x = 0;
    Vertex y = 0;
    std::optional<Vertex> apex;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct TraceLeaf {
    std::vector<PathStep> path;
    Certificate certificate;
};

/// Anchor triangle and vertex classes of the fixed labeling.
struct Labeling {
    Vertex a = 0, b = 1, c = 2;
    std::vector<Vertex> A, B, C, W;

    VertexSet set_of(const std::vector<Vertex>& cls) const;
    /// a = 0, b = 1, c = 2, then A, B, C, W as consecutive label blocks.
    static Labeling canonical(const SrgParams& p);
};

struct CaseTrace {
    CycleStructure structure;
    std::vector<std::pair<Vertex, Vertex>> cycle_edges; // in branching order
    std::size_t nodes = 0;
    std::vector<TraceLeaf> leaves;
    std::size_t surviving_completions = 0;
    std::vector<std::string> counterexamples; // graph6 of full survivors
    std::string note;
};

/// A forced fact about every hypothetical srg with the given parameters,
/// recorded at the root of the trace.
struct LemmaStep {
    std::string name;
    std::string statement;
    bool holds = false;
};

struct ExcludedStructure {
    CycleStructure structure;
    std::string reason;
};

struct TraceStats {
    std::size_t nodes_explored = 0;
    std::size_t leaves = 0;
    std::size_t surviving_completions = 0;
    std::map<std::string, std::size_t> certificates;
};

struct ProofTrace {
    SrgParams params;
    Labeling labeling;
    std::vector<LemmaStep> lemmas;
    std::vector<ExcludedStructure> excluded;
    std::vector<CaseTrace> cases;
    TraceStats stats;
    std::vector<std::string> counterexamples;

    void recompute_stats();
};

/// Graph holding every edge the labeling forces: the anchor triangle, each
/// anchor to its class, and the given cycle edges.
Graph forced_graph(const SrgParams& p, const Labeling& lab, const std::vector<std::pair<Vertex, Vertex>>& cycle_edges);

/// Cycle edges of a structure laid out on the labeling: cycle j runs
/// a b c a b c ... over consecutive members of each class.
std::vector<std::pair<Vertex, Vertex>> layout_cycle_edges(const Labeling& lab, const CycleStructure& structure);

/// Backtracking over apex assignments for every cycle edge of `structure`.
/// Requires lambda = 1 and structure in admissible_cycle_structures(k - 2).
/// When W is empty no apex triangles are required and the root is the single
/// surviving completion.
CaseTrace exhaust_apex_assignments(const CycleStructure& structure, const SrgParams& p = {19, 6, 1, 2});

ProofTrace prove_nonexistence_19();

} // namespace srg
