#pragma once

#include "srg/graph.hpp"
#include "srg/params.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace srg {

enum class PairState { undecided, edge, non_edge };

/// Tri-state adjacency under construction. Decided edges and still-open
/// pairs are kept as bit rows, so committed and potential common-neighbor
/// counts are popcounts. Every decision goes on a trail for undo.
class PartialGraph {
public:
    explicit PartialGraph(int n);

    int order() const { return n_; }
    PairState state(Vertex u, Vertex v) const;

    VertexSet edges(Vertex v) const { return edge_[static_cast<std::size_t>(v)]; }
    VertexSet open(Vertex v) const { return open_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return popcount(edges(v)); }

    /// Committed common neighbors of u and v.
    int committed_common(Vertex u, Vertex v) const { return popcount(edges(u) & edges(v)); }
    /// Common neighbors still achievable (committed or open on both sides).
    int possible_common(Vertex u, Vertex v) const;

    /// Decide an undecided pair. Deciding an already decided pair the same
    /// way is a no-op; the other way throws InputError.
    void set_edge(Vertex u, Vertex v);
    void set_non_edge(Vertex u, Vertex v);

    std::size_t trail_size() const { return trail_.size(); }
    void undo_to(std::size_t mark);

    bool complete() const;
    std::size_t undecided_pairs() const;
    Graph to_graph() const;
    static PartialGraph from_graph(const Graph& g);

private:
    void decide(Vertex u, Vertex v, bool edge);

    int n_ = 0;
    std::vector<VertexSet> edge_;
    std::vector<VertexSet> open_;
    std::vector<std::pair<Vertex, Vertex>> trail_;
};

struct Propagation {
    bool consistent = true;
    std::string reason; // set on contradiction
    std::size_t forced = 0;
};

/// Runs the degree and common-neighbor rules of srg(p) to a fixpoint,
/// committing every forced decision to pg. A contradiction is returned as a
/// value; pg then holds a partial fixpoint and should be undone by the caller.
Propagation propagate(PartialGraph& pg, const SrgParams& p);

} // namespace srg
