#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace srg {

struct SrgParams;

using Vertex = int;
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 62;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }

/// Vertices of a set in ascending order.
std::vector<Vertex> members(VertexSet s);

/// Undirected simple graph on at most 62 vertices, one 64-bit adjacency row
/// per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph petersen();

    int order() const { return n_; }
    VertexSet row(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet all() const { return n_ == 64 ? ~VertexSet{0} : bit(n_) - 1; }

    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    int edge_count() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    /// Graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

/// Diagnostic result of a strong-regularity check. On failure exactly one of
/// the optionals names the first violation found.
struct SrgReport {
    struct PairViolation {
        Vertex u;
        Vertex v;
        bool adjacent;
        int observed_common;
        std::int64_t expected;
    };
    struct DegreeViolation {
        Vertex v;
        int observed_degree;
    };

    bool is_srg = false;
    std::optional<PairViolation> violating_pair;
    std::optional<DegreeViolation> degree_violation;
    int lambda_checked_pairs = 0;
    int mu_checked_pairs = 0;
};

int common_neighbors(const Graph& g, Vertex u, Vertex v);

/// Throws InputError when g.order() != p.n.
SrgReport is_strongly_regular(const Graph& g, const SrgParams& p);

long long triangle_count(const Graph& g);
int triangles_through(const Graph& g, Vertex v);

/// Relabels the members of s to 0..|s|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, VertexSet s);

} // namespace srg
