#include "srg/partial_graph.hpp"

#include "srg/error.hpp"

#include <algorithm>

namespace srg {

PartialGraph::PartialGraph(int n) : n_(n), edge_(static_cast<std::size_t>(n), 0), open_(static_cast<std::size_t>(n), 0)
{
    if (n < 0 || n > kMaxVertices)
        throw InputError("partial graph order " + std::to_string(n) + " outside 0..62");
    const VertexSet all = n == 0 ? 0 : (bit(n) - 1);
    for (Vertex v = 0; v < n; ++v)
        open_[static_cast<std::size_t>(v)] = all & ~bit(v);
}

PairState PartialGraph::state(Vertex u, Vertex v) const
{
    if (u == v)
        return PairState::non_edge;
    if (edges(u) & bit(v))
        return PairState::edge;
    if (open(u) & bit(v))
        return PairState::undecided;
    return PairState::non_edge;
}

int PartialGraph::possible_common(Vertex u, Vertex v) const
{
    return popcount((edges(u) | open(u)) & (edges(v) | open(v)));
}

void PartialGraph::decide(Vertex u, Vertex v, bool edge)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw InputError("invalid pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const PairState current = state(u, v);
    if (current != PairState::undecided) {
        if ((current == PairState::edge) != edge)
            throw InputError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") already decided otherwise");
        return;
    }
    const auto ui = static_cast<std::size_t>(u);
    const auto vi = static_cast<std::size_t>(v);
    open_[ui] &= ~bit(v);
    open_[vi] &= ~bit(u);
    if (edge) {
        edge_[ui] |= bit(v);
        edge_[vi] |= bit(u);
    }
    trail_.emplace_back(u, v);
}

void PartialGraph::set_edge(Vertex u, Vertex v) { decide(u, v, true); }
void PartialGraph::set_non_edge(Vertex u, Vertex v) { decide(u, v, false); }

void PartialGraph::undo_to(std::size_t mark)
{
    while (trail_.size() > mark) {
        const auto [u, v] = trail_.back();
        trail_.pop_back();
        const auto ui = static_cast<std::size_t>(u);
        const auto vi = static_cast<std::size_t>(v);
        edge_[ui] &= ~bit(v);
        edge_[vi] &= ~bit(u);
        open_[ui] |= bit(v);
        open_[vi] |= bit(u);
    }
}

bool PartialGraph::complete() const
{
    return std::all_of(open_.begin(), open_.end(), [](VertexSet s) { return s == 0; });
}

std::size_t PartialGraph::undecided_pairs() const
{
    std::size_t twice = 0;
    for (VertexSet s : open_)
        twice += static_cast<std::size_t>(popcount(s));
    return twice / 2;
}

Graph PartialGraph::to_graph() const
{
    Graph g(n_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : members(edges(u)))
            if (u < v)
                g.add_edge(u, v);
    return g;
}

PartialGraph PartialGraph::from_graph(const Graph& g)
{
    PartialGraph pg(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            pg.decide(u, v, g.adjacent(u, v));
    return pg;
}

Propagation propagate(PartialGraph& pg, const SrgParams& p)
{
    Propagation out;
    const int n = pg.order();
    const auto fail = [&](std::string why) {
        out.consistent = false;
        out.reason = std::move(why);
        return out;
    };
    const auto pair_name = [](Vertex u, Vertex v) {
        return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    };

    for (bool changed = true; changed;) {
        changed = false;
        const auto force = [&](Vertex u, Vertex v, bool edge) {
            if (edge)
                pg.set_edge(u, v);
            else
                pg.set_non_edge(u, v);
            ++out.forced;
            changed = true;
        };

        for (Vertex v = 0; v < n; ++v) {
            const int deg = pg.degree(v);
            const int open = popcount(pg.open(v));
            if (deg > p.k)
                return fail("vertex " + std::to_string(v) + " exceeds degree k");
            if (deg + open < p.k)
                return fail("vertex " + std::to_string(v) + " cannot reach degree k");
            if (open > 0 && (deg == p.k || deg + open == p.k)) {
                const bool edge = deg < p.k;
                for (Vertex u : members(pg.open(v)))
                    force(v, u, edge);
            }
        }

        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                const int have = pg.committed_common(u, v);
                const int reach = pg.possible_common(u, v);
                const PairState st = pg.state(u, v);

                if (st == PairState::undecided) {
                    const std::int64_t hi = std::max(p.lambda, p.mu);
                    const std::int64_t lo = std::min(p.lambda, p.mu);
                    if (have > hi || reach < lo)
                        return fail("pair " + pair_name(u, v) + " can match neither lambda nor mu");
                    if (have > p.lambda || reach < p.lambda)
                        force(u, v, false);
                    else if (have > p.mu || reach < p.mu)
                        force(u, v, true);
                    continue;
                }

                const std::int64_t target = st == PairState::edge ? p.lambda : p.mu;
                if (have > target)
                    return fail("pair " + pair_name(u, v) + " has too many common neighbors");
                if (reach < target)
                    return fail("pair " + pair_name(u, v) + " cannot reach its common-neighbor count");
                if (have == target) {
                    // a half-committed common neighbor would exceed the cap
                    for (Vertex w : members(pg.edges(u) & pg.open(v)))
                        force(v, w, false);
                    for (Vertex w : members(pg.open(u) & pg.edges(v)))
                        force(u, w, false);
                } else if (reach == target) {
                    const VertexSet needed = (pg.edges(u) | pg.open(u)) & (pg.edges(v) | pg.open(v));
                    for (Vertex w : members(needed & pg.open(u)))
                        force(u, w, true);
                    for (Vertex w : members(needed & pg.open(v)))
                        force(v, w, true);
                }
            }
        }
    }
    return out;
}

} // namespace srg
