#include "srg/error.hpp"
#include "srg/graph6.hpp"
#include "srg/proof.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace srg {

std::string_view to_string(CertificateKind kind)
{
    switch (kind) {
    case CertificateKind::edge_in_two_triangles: return "edge_in_two_triangles";
    case CertificateKind::vertex_exceeds_three_triangles: return "vertex_exceeds_three_triangles";
    case CertificateKind::mu_violation_with_witnesses: return "mu_violation_with_witnesses";
    case CertificateKind::w_adjacency_quota_violation: return "w_adjacency_quota_violation";
    case CertificateKind::no_apex_available: return "no_apex_available";
    }
    return "unknown";
}

std::optional<CertificateKind> certificate_kind_from(std::string_view name)
{
    for (auto kind : {CertificateKind::edge_in_two_triangles, CertificateKind::vertex_exceeds_three_triangles,
                      CertificateKind::mu_violation_with_witnesses, CertificateKind::w_adjacency_quota_violation,
                      CertificateKind::no_apex_available})
        if (to_string(kind) == name)
            return kind;
    return std::nullopt;
}

VertexSet Labeling::set_of(const std::vector<Vertex>& cls) const
{
    VertexSet s = 0;
    for (Vertex v : cls)
        s |= bit(v);
    return s;
}

Labeling Labeling::canonical(const SrgParams& p)
{
    const auto counts = expected_counts(p);
    if (!counts.partition)
        throw InputError("canonical labeling needs lambda = 1, got " + to_string(p));
    const auto& sizes = *counts.partition;
    if (sizes[3] < 0 || p.n > kMaxVertices)
        throw InputError("no triangle-anchored labeling fits " + to_string(p));

    Labeling lab;
    Vertex next = 3;
    for (auto [cls, size] : {std::pair{&lab.A, sizes[0]}, std::pair{&lab.B, sizes[1]}, std::pair{&lab.C, sizes[2]},
                             std::pair{&lab.W, sizes[3]}})
        for (std::int64_t i = 0; i < size; ++i)
            cls->push_back(next++);
    return lab;
}

Graph forced_graph(const SrgParams& p, const Labeling& lab, const std::vector<std::pair<Vertex, Vertex>>& cycle_edges)
{
    Graph g(static_cast<int>(p.n));
    g.add_edge(lab.a, lab.b);
    g.add_edge(lab.b, lab.c);
    g.add_edge(lab.a, lab.c);
    for (Vertex v : lab.A)
        g.add_edge(lab.a, v);
    for (Vertex v : lab.B)
        g.add_edge(lab.b, v);
    for (Vertex v : lab.C)
        g.add_edge(lab.c, v);
    for (auto [x, y] : cycle_edges)
        g.add_edge(x, y);
    return g;
}

std::vector<std::pair<Vertex, Vertex>> layout_cycle_edges(const Labeling& lab, const CycleStructure& structure)
{
    if (structure.total() != static_cast<int>(3 * lab.A.size()))
        throw InputError("structure " + structure.label() + " does not cover the classes");
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t offset = 0;
    for (int length : structure.lengths) {
        if (length % 3 != 0)
            throw InputError("cycle length " + std::to_string(length) + " is not a multiple of 3");
        const auto laps = static_cast<std::size_t>(length / 3);
        std::vector<Vertex> walk;
        for (std::size_t i = 0; i < laps; ++i) {
            walk.push_back(lab.A[offset + i]);
            walk.push_back(lab.B[offset + i]);
            walk.push_back(lab.C[offset + i]);
        }
        for (std::size_t i = 0; i < walk.size(); ++i)
            edges.emplace_back(walk[i], walk[(i + 1) % walk.size()]);
        offset += laps;
    }
    return edges;
}

namespace {

std::vector<std::vector<std::pair<Vertex, Vertex>>> perfect_matchings(std::vector<Vertex> cls)
{
    std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
    std::vector<std::pair<Vertex, Vertex>> current;
    std::function<void(std::vector<Vertex>)> go = [&](std::vector<Vertex> rest) {
        if (rest.empty()) {
            out.push_back(current);
            return;
        }
        const Vertex first = rest.front();
        for (std::size_t i = 1; i < rest.size(); ++i) {
            std::vector<Vertex> remaining;
            for (std::size_t j = 1; j < rest.size(); ++j)
                if (j != i)
                    remaining.push_back(rest[j]);
            current.emplace_back(first, rest[i]);
            go(remaining);
            current.pop_back();
        }
    };
    if (cls.size() % 2 == 0)
        go(std::move(cls));
    return out;
}

class ApexSearch {
public:
    ApexSearch(const SrgParams& p, const Labeling& lab, const CycleStructure& structure)
        : p_(p), lab_(lab), per_w_(p.k * p.lambda / 2)
    {
        trace_.structure = structure;
        trace_.cycle_edges = layout_cycle_edges(lab, structure);
        graph_ = forced_graph(p, lab, trace_.cycle_edges);
        classes_ = {{{lab.a, lab.set_of(lab.A)}, {lab.b, lab.set_of(lab.B)}, {lab.c, lab.set_of(lab.C)}}};
        used_.assign(static_cast<std::size_t>(p.n), 0);
    }

    CaseTrace run()
    {
        descend(0);
        return std::move(trace_);
    }

private:
    // Contradiction caused by making w the apex of cycle edge xy, evaluated on
    // the graph that already contains w~x and w~y.
    std::optional<Certificate> blocked_by(const Graph& g, Vertex w, Vertex x, Vertex y) const
    {
        const auto two_triangles = [&](Vertex u, Vertex v) -> std::optional<Certificate> {
            const VertexSet common = g.row(u) & g.row(v);
            if (popcount(common) <= p_.lambda)
                return std::nullopt;
            auto zs = members(common);
            Certificate cert{CertificateKind::edge_in_two_triangles, {u, v}, {}};
            cert.witnesses.insert(cert.witnesses.end(), zs.begin(), zs.begin() + p_.lambda + 1);
            return cert;
        };
        for (Vertex v : members(g.row(w)))
            if (auto cert = two_triangles(w, v))
                return cert;
        if (auto cert = two_triangles(x, y))
            return cert;

        const int through = triangles_through(g, w);
        if (through > per_w_)
            return Certificate{CertificateKind::vertex_exceeds_three_triangles, {w}, {}};

        for (Vertex other : lab_.W) {
            if (other == w)
                continue;
            const VertexSet common = g.row(w) & g.row(other);
            if (popcount(common) > p_.mu) {
                Certificate cert{CertificateKind::mu_violation_with_witnesses, {w, other}, {}};
                for (Vertex z : members(common))
                    cert.witnesses.push_back(z);
                return cert;
            }
        }

        const std::int64_t slots = per_w_ - through;
        for (auto [anchor, cls] : classes_) {
            const int have = popcount(g.row(w) & cls);
            if (have > p_.mu || p_.mu - have > slots)
                return Certificate{CertificateKind::w_adjacency_quota_violation, {w, anchor}, {}};
        }
        return std::nullopt;
    }

    std::array<std::optional<Certificate>, kMaxVertices> evaluate(std::size_t edge_index)
    {
        std::array<std::optional<Certificate>, kMaxVertices> out{};
        const auto [x, y] = trace_.cycle_edges[edge_index];
        for (Vertex w : lab_.W) {
            Graph trial = graph_;
            trial.add_edge(w, x);
            trial.add_edge(w, y);
            out[static_cast<std::size_t>(w)] = blocked_by(trial, w, x, y);
            viable_[static_cast<std::size_t>(w)] = !out[static_cast<std::size_t>(w)].has_value();
        }
        return out;
    }

    bool any_viable() const
    {
        return std::any_of(lab_.W.begin(), lab_.W.end(),
                           [&](Vertex w) { return viable_[static_cast<std::size_t>(w)]; });
    }

    Certificate no_apex(std::size_t edge_index, std::array<std::optional<Certificate>, kMaxVertices>& blocked) const
    {
        const auto [x, y] = trace_.cycle_edges[edge_index];
        Certificate cert{CertificateKind::no_apex_available, {x, y}, {}};
        for (Vertex w : lab_.W)
            cert.blocked.push_back(BlockedApex{w, std::move(*blocked[static_cast<std::size_t>(w)])});
        return cert;
    }

    void leaf(Certificate cert)
    {
        ++trace_.nodes;
        trace_.leaves.push_back(TraceLeaf{path_, std::move(cert)});
    }

    void descend(std::size_t edge_index)
    {
        ++trace_.nodes;
        if (edge_index == trace_.cycle_edges.size()) {
            complete();
            return;
        }

        auto verdicts = evaluate(edge_index);
        if (!any_viable()) {
            --trace_.nodes;
            leaf(no_apex(edge_index, verdicts));
            return;
        }

        // Unused W vertices are interchangeable, so only the first is tried.
        std::vector<Vertex> tried;
        bool fresh_taken = false;
        for (Vertex w : lab_.W) {
            if (used_[static_cast<std::size_t>(w)] > 0) {
                tried.push_back(w);
            } else if (!fresh_taken) {
                tried.push_back(w);
                fresh_taken = true;
            }
        }

        const auto [x, y] = trace_.cycle_edges[edge_index];
        for (Vertex w : tried) {
            path_.push_back(PathStep{x, y, w});
            if (auto& cert = verdicts[static_cast<std::size_t>(w)]) {
                leaf(std::move(*cert));
            } else {
                graph_.add_edge(w, x);
                graph_.add_edge(w, y);
                ++used_[static_cast<std::size_t>(w)];
                if (!forward_check(edge_index + 1))
                    descend(edge_index + 1);
                --used_[static_cast<std::size_t>(w)];
                graph_.remove_edge(w, x);
                graph_.remove_edge(w, y);
            }
            path_.pop_back();
        }
    }

    // First-fail: a later edge with no viable apex closes the branch now.
    bool forward_check(std::size_t from)
    {
        for (std::size_t j = from; j < trace_.cycle_edges.size(); ++j) {
            auto verdicts = evaluate(j);
            if (!any_viable()) {
                leaf(no_apex(j, verdicts));
                return true;
            }
        }
        return false;
    }

    // Every cycle edge has an apex; the remaining freedom is the in-class
    // matching of each class. Each full graph is checked directly.
    void complete()
    {
        --trace_.nodes;
        std::vector<std::vector<std::vector<std::pair<Vertex, Vertex>>>> per_class;
        for (const auto* cls : {&lab_.A, &lab_.B, &lab_.C})
            per_class.push_back(perfect_matchings(*cls));

        std::function<void(std::size_t, Graph&)> pick = [&](std::size_t idx, Graph& g) {
            if (idx == per_class.size()) {
                ++trace_.nodes;
                const SrgReport report = is_strongly_regular(g, p_);
                if (report.is_srg) {
                    ++trace_.surviving_completions;
                    trace_.counterexamples.push_back(to_graph6(g));
                    return;
                }
                trace_.leaves.push_back(TraceLeaf{path_, certificate_from(g, report)});
                return;
            }
            for (const auto& matching : per_class[idx]) {
                ++trace_.nodes;
                for (auto [u, v] : matching) {
                    g.add_edge(u, v);
                    path_.push_back(PathStep{u, v, std::nullopt});
                }
                pick(idx + 1, g);
                for (auto [u, v] : matching) {
                    g.remove_edge(u, v);
                    path_.pop_back();
                }
            }
        };
        Graph g = graph_;
        pick(0, g);
    }

    Certificate certificate_from(const Graph& g, const SrgReport& report) const
    {
        if (!report.violating_pair)
            throw std::logic_error("completed assignment broke degree regularity");
        const auto& pair = *report.violating_pair;
        const auto common = members(g.row(pair.u) & g.row(pair.v));
        if (!pair.adjacent) {
            Certificate cert{CertificateKind::mu_violation_with_witnesses, {pair.u, pair.v}, {}};
            cert.witnesses.insert(cert.witnesses.end(), common.begin(), common.end());
            return cert;
        }
        if (pair.observed_common > p_.lambda) {
            Certificate cert{CertificateKind::edge_in_two_triangles, {pair.u, pair.v}, {}};
            cert.witnesses.insert(cert.witnesses.end(), common.begin(), common.begin() + p_.lambda + 1);
            return cert;
        }
        throw std::logic_error("completed assignment left an edge outside every triangle");
    }

    SrgParams p_;
    Labeling lab_;
    std::int64_t per_w_;
    Graph graph_;
    std::array<std::pair<Vertex, VertexSet>, 3> classes_{};
    std::vector<int> used_;
    std::array<bool, kMaxVertices> viable_{};
    std::vector<PathStep> path_;
    CaseTrace trace_;
};

} // namespace

CaseTrace exhaust_apex_assignments(const CycleStructure& structure, const SrgParams& p)
{
    if (p.lambda != 1)
        throw InputError("apex exhaustion needs lambda = 1, got " + to_string(p));
    const auto counts = expected_counts(p);
    const auto& sizes = *counts.partition;
    const auto admissible = admissible_cycle_structures(static_cast<int>(sizes[0]));
    if (std::find(admissible.begin(), admissible.end(), structure) == admissible.end())
        throw InputError("structure " + structure.label() + " is not admissible for " + to_string(p));

    const Labeling lab = Labeling::canonical(p);
    if (lab.W.empty()) {
        CaseTrace trivial;
        trivial.structure = structure;
        trivial.cycle_edges = layout_cycle_edges(lab, structure);
        trivial.nodes = 1;
        trivial.surviving_completions = 1;
        trivial.note = "W is empty: no cycle edge needs an apex in W";
        return trivial;
    }

    // Every cycle edge needs its triangle apex in W exactly when the
    // bookkeeping leaves no triangle inside A u B u C.
    const std::int64_t apex_triangles = sizes[3] * counts.triangles_per_vertex;
    if (apex_triangles != 3 * sizes[0] ||
        counts.triangles - anchor_triangle_count(p) - apex_triangles != 0)
        throw InputError("triangle bookkeeping of " + to_string(p) + " does not put every cycle edge under a W apex");

    return ApexSearch(p, lab, structure).run();
}

} // namespace srg
