#include "srg/graph.hpp"

#include "srg/error.hpp"
#include "srg/params.hpp"

#include <string>

namespace srg {

std::vector<Vertex> members(VertexSet s)
{
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw InputError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n)
{
    Graph g(n);
    for (Vertex v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph Graph::petersen()
{
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw InputError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1U;
}

int Graph::degree(Vertex v) const
{
    check_vertex(v);
    return popcount(row(v));
}

int Graph::edge_count() const
{
    int twice = 0;
    for (Vertex v = 0; v < n_; ++v)
        twice += popcount(row(v));
    return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InputError("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~bit(v);
    adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw InputError("permutation length does not match graph order");
    Graph out(n_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : members(row(u)))
            if (u < v)
                out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

bool operator==(const Graph& a, const Graph& b)
{
    if (a.n_ != b.n_)
        return false;
    for (Vertex v = 0; v < a.n_; ++v)
        if (a.row(v) != b.row(v))
            return false;
    return true;
}

int common_neighbors(const Graph& g, Vertex u, Vertex v)
{
    if (u == v)
        throw InputError("common_neighbors needs two distinct vertices");
    // adjacent() range-checks both arguments
    (void)g.adjacent(u, v);
    return popcount(g.row(u) & g.row(v));
}

SrgReport is_strongly_regular(const Graph& g, const SrgParams& p)
{
    if (g.order() != p.n)
        throw InputError("graph order " + std::to_string(g.order()) + " does not match n = " + std::to_string(p.n));

    SrgReport report;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != p.k) {
            report.degree_violation = SrgReport::DegreeViolation{v, g.degree(v)};
            return report;
        }
    }
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            const bool adj = g.adjacent(u, v);
            const std::int64_t expected = adj ? p.lambda : p.mu;
            const int observed = popcount(g.row(u) & g.row(v));
            ++(adj ? report.lambda_checked_pairs : report.mu_checked_pairs);
            if (observed != expected) {
                report.violating_pair = SrgReport::PairViolation{u, v, adj, observed, expected};
                return report;
            }
        }
    }
    report.is_srg = true;
    return report;
}

long long triangle_count(const Graph& g)
{
    long long total = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        const VertexSet higher = g.row(u) & ~((bit(u) << 1) - 1);
        for (Vertex v : members(higher)) {
            const VertexSet above_v = ~((bit(v) << 1) - 1);
            total += popcount(g.row(u) & g.row(v) & above_v);
        }
    }
    return total;
}

int triangles_through(const Graph& g, Vertex v)
{
    (void)g.degree(v);
    const VertexSet nb = g.row(v);
    int twice = 0;
    for (Vertex u : members(nb))
        twice += popcount(g.row(u) & nb);
    return twice / 2;
}

Graph induced_subgraph(const Graph& g, VertexSet s)
{
    s &= g.all();
    const auto keep = members(s);
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

} // namespace srg
