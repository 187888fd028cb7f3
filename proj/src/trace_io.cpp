#include "srg/trace_io.hpp"

#include "srg/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace srg {

using nlohmann::json;

namespace {

json structure_json(const CycleStructure& cs) { return cs.lengths; }

CycleStructure structure_from(const json& j)
{
    CycleStructure cs;
    cs.lengths = j.get<std::vector<int>>();
    return cs;
}

json step_json(const PathStep& step)
{
    if (step.apex)
        return {{"edge", {step.x, step.y}}, {"apex", *step.apex}};
    return {{"chord", {step.x, step.y}}};
}

PathStep step_from(const json& j)
{
    PathStep step;
    if (j.contains("edge")) {
        const auto e = j.at("edge").get<std::vector<Vertex>>();
        if (e.size() != 2)
            throw InputError("path edge must have two endpoints");
        step.x = e[0];
        step.y = e[1];
        step.apex = j.at("apex").get<Vertex>();
    } else {
        const auto e = j.at("chord").get<std::vector<Vertex>>();
        if (e.size() != 2)
            throw InputError("path chord must have two endpoints");
        step.x = e[0];
        step.y = e[1];
    }
    return step;
}

Certificate certificate_from(const json& j)
{
    Certificate cert;
    const auto name = j.at("kind").get<std::string>();
    const auto kind = certificate_kind_from(name);
    if (!kind)
        throw InputError("unknown certificate kind '" + name + "'");
    cert.kind = *kind;
    cert.witnesses = j.at("witnesses").get<std::vector<Vertex>>();
    if (j.contains("blocked"))
        for (const auto& b : j.at("blocked"))
            cert.blocked.push_back(BlockedApex{b.at("apex").get<Vertex>(), certificate_from(b.at("certificate"))});
    return cert;
}

} // namespace

json to_json(const Certificate& cert)
{
    json j{{"kind", std::string(to_string(cert.kind))}, {"witnesses", cert.witnesses}};
    if (cert.kind == CertificateKind::no_apex_available) {
        auto blocked = json::array();
        for (const auto& b : cert.blocked)
            blocked.push_back({{"apex", b.apex}, {"certificate", to_json(b.reason)}});
        j["blocked"] = std::move(blocked);
    }
    return j;
}

json to_json(const ProofTrace& trace)
{
    json j;
    j["params"] = to_json(trace.params);
    const auto& lab = trace.labeling;
    j["labeling"] = {{"anchor", {lab.a, lab.b, lab.c}}, {"A", lab.A}, {"B", lab.B}, {"C", lab.C}, {"W", lab.W}};

    j["lemmas"] = json::array();
    for (const auto& l : trace.lemmas)
        j["lemmas"].push_back({{"name", l.name}, {"statement", l.statement}, {"holds", l.holds}});

    j["excluded_structures"] = json::array();
    for (const auto& e : trace.excluded)
        j["excluded_structures"].push_back({{"structure", structure_json(e.structure)}, {"reason", e.reason}});

    j["cases"] = json::array();
    for (const auto& c : trace.cases) {
        json cj;
        cj["structure"] = structure_json(c.structure);
        cj["label"] = c.structure.label();
        cj["cycle_edges"] = json::array();
        for (auto [x, y] : c.cycle_edges)
            cj["cycle_edges"].push_back({x, y});
        cj["nodes"] = c.nodes;
        cj["leaves"] = json::array();
        for (const auto& leaf : c.leaves) {
            json path = json::array();
            for (const auto& step : leaf.path)
                path.push_back(step_json(step));
            cj["leaves"].push_back({{"path", std::move(path)}, {"certificate", to_json(leaf.certificate)}});
        }
        cj["surviving_completions"] = c.surviving_completions;
        cj["counterexamples"] = c.counterexamples;
        cj["note"] = c.note;
        j["cases"].push_back(std::move(cj));
    }

    j["surviving_completions"] = trace.stats.surviving_completions;
    j["counterexamples"] = trace.counterexamples;
    j["stats"] = {{"nodes_explored", trace.stats.nodes_explored},
                  {"leaves", trace.stats.leaves},
                  {"surviving_completions", trace.stats.surviving_completions},
                  {"certificates", trace.stats.certificates}};
    return j;
}

ProofTrace trace_from_json(const json& j)
{
    ProofTrace trace;
    const auto& p = j.at("params");
    trace.params = SrgParams{p.at("n").get<std::int64_t>(), p.at("k").get<std::int64_t>(),
                             p.at("lambda").get<std::int64_t>(), p.at("mu").get<std::int64_t>()};

    const auto& lab = j.at("labeling");
    const auto anchor = lab.at("anchor").get<std::vector<Vertex>>();
    if (anchor.size() != 3)
        throw InputError("labeling anchor must list three vertices");
    trace.labeling.a = anchor[0];
    trace.labeling.b = anchor[1];
    trace.labeling.c = anchor[2];
    trace.labeling.A = lab.at("A").get<std::vector<Vertex>>();
    trace.labeling.B = lab.at("B").get<std::vector<Vertex>>();
    trace.labeling.C = lab.at("C").get<std::vector<Vertex>>();
    trace.labeling.W = lab.at("W").get<std::vector<Vertex>>();

    for (const auto& l : j.at("lemmas"))
        trace.lemmas.push_back(
            LemmaStep{l.at("name").get<std::string>(), l.at("statement").get<std::string>(), l.at("holds").get<bool>()});
    for (const auto& e : j.at("excluded_structures"))
        trace.excluded.push_back(ExcludedStructure{structure_from(e.at("structure")), e.at("reason").get<std::string>()});

    for (const auto& cj : j.at("cases")) {
        CaseTrace c;
        c.structure = structure_from(cj.at("structure"));
        for (const auto& e : cj.at("cycle_edges")) {
            const auto xy = e.get<std::vector<Vertex>>();
            if (xy.size() != 2)
                throw InputError("cycle edge must have two endpoints");
            c.cycle_edges.emplace_back(xy[0], xy[1]);
        }
        c.nodes = cj.at("nodes").get<std::size_t>();
        for (const auto& lj : cj.at("leaves")) {
            TraceLeaf leaf;
            for (const auto& s : lj.at("path"))
                leaf.path.push_back(step_from(s));
            leaf.certificate = certificate_from(lj.at("certificate"));
            c.leaves.push_back(std::move(leaf));
        }
        c.surviving_completions = cj.at("surviving_completions").get<std::size_t>();
        c.counterexamples = cj.at("counterexamples").get<std::vector<std::string>>();
        c.note = cj.value("note", "");
        trace.cases.push_back(std::move(c));
    }

    trace.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
    const auto& st = j.at("stats");
    trace.stats.nodes_explored = st.at("nodes_explored").get<std::size_t>();
    trace.stats.leaves = st.at("leaves").get<std::size_t>();
    trace.stats.surviving_completions = st.at("surviving_completions").get<std::size_t>();
    trace.stats.certificates = st.at("certificates").get<std::map<std::string, std::size_t>>();
    if (j.at("surviving_completions").get<std::size_t>() != trace.stats.surviving_completions)
        throw InputError("top-level surviving_completions disagrees with stats");
    return trace;
}

// Replay. Shares no code with apex_search.cpp:
// Replay. Deliberately independent of the search code in apex_search.cpp:
// everything is recomputed from the serialized data with Graph primitives.

namespace {

constexpr std::size_t kCaseLevel = std::numeric_limits<std::size_t>::max();

struct ReplayContext {
    SrgParams params;
    Vertex a, b, c;
    VertexSet A = 0, B = 0, C = 0, W = 0;
    int n = 0;

    bool in_range(Vertex v) const { return v >= 0 && v < n; }
    int class_of(Vertex v) const
    {
        if (A & bit(v))
            return 0;
        if (B & bit(v))
            return 1;
        if (C & bit(v))
            return 2;
        return -1;
    }
};

std::string describe(const Certificate& cert)
{
    std::string s(to_string(cert.kind));
    s += " [";
    for (std::size_t i = 0; i < cert.witnesses.size(); ++i)
        s += (i ? "," : "") + std::to_string(cert.witnesses[i]);
    return s + "]";
}

bool distinct(const std::vector<Vertex>& vs)
{
    std::set<Vertex> seen(vs.begin(), vs.end());
    return seen.size() == vs.size();
}

// Returns an error message, or empty when the certificate holds on g.
std::string check_certificate(const Graph& g, const ReplayContext& ctx, const Certificate& cert, bool fully_decided,
                              bool nested)
{
    const auto& wit = cert.witnesses;
    for (Vertex v : wit)
        if (!ctx.in_range(v))
            return "witness " + std::to_string(v) + " out of range";
    if (!distinct(wit))
        return "witnesses repeat a vertex";

    const std::int64_t per_vertex = ctx.params.k * ctx.params.lambda / 2;

    switch (cert.kind) {
    case CertificateKind::edge_in_two_triangles: {
        if (static_cast<std::int64_t>(wit.size()) != 2 + ctx.params.lambda + 1)
            return "expected an edge and lambda + 1 apexes";
        const Vertex u = wit[0], v = wit[1];
        if (!g.adjacent(u, v))
            return "witness pair is not an edge";
        for (std::size_t i = 2; i < wit.size(); ++i)
            if (!g.adjacent(u, wit[i]) || !g.adjacent(v, wit[i]))
                return "vertex " + std::to_string(wit[i]) + " is not a common neighbor of the edge";
        if (common_neighbors(g, u, v) <= ctx.params.lambda)
            return "edge lies in at most lambda triangles";
        return {};
    }
    case CertificateKind::vertex_exceeds_three_triangles: {
        if (wit.size() != 1)
            return "expected a single vertex";
        if (triangles_through(g, wit[0]) <= per_vertex)
            return "vertex lies in at most k lambda / 2 triangles";
        return {};
    }
    case CertificateKind::mu_violation_with_witnesses: {
        if (wit.size() < 2)
            return "expected a vertex pair";
        const Vertex u = wit[0], v = wit[1];
        const bool known_non_edge = ((ctx.W & bit(u)) && (ctx.W & bit(v))) || fully_decided;
        if (!known_non_edge || g.adjacent(u, v))
            return "pair is not known to be non-adjacent";
        for (std::size_t i = 2; i < wit.size(); ++i)
            if (!g.adjacent(u, wit[i]) || !g.adjacent(v, wit[i]))
                return "vertex " + std::to_string(wit[i]) + " is not a common neighbor of the pair";
        const auto listed = static_cast<std::int64_t>(wit.size() - 2);
        if (listed > ctx.params.mu)
            return {};
        if (fully_decided && listed == common_neighbors(g, u, v) && listed != ctx.params.mu)
            return {};
        return "listed common neighbors do not break mu";
    }
    case CertificateKind::w_adjacency_quota_violation: {
        if (wit.size() != 2)
            return "expected a W vertex and an anchor";
        const Vertex w = wit[0], anchor = wit[1];
        if (!(ctx.W & bit(w)))
            return "first witness is not in W";
        VertexSet cls = 0;
        if (anchor == ctx.a)
            cls = ctx.A;
        else if (anchor == ctx.b)
            cls = ctx.B;
        else if (anchor == ctx.c)
            cls = ctx.C;
        else
            return "second witness is not an anchor vertex";
        // the class is re-derived from the graph as N(anchor) minus the triangle
        const VertexSet derived = g.row(anchor) & ~(bit(ctx.a) | bit(ctx.b) | bit(ctx.c));
        if (derived != cls)
            return "anchor neighborhood does not match its class";
        const int have = popcount(g.row(w) & derived);
        const std::int64_t slots = per_vertex - triangles_through(g, w);
        if (have > ctx.params.mu || ctx.params.mu - have > slots)
            return {};
        return "W vertex can still meet its quota";
    }
    case CertificateKind::no_apex_available: {
        if (nested)
            return "no_apex_available cannot nest";
        if (wit.size() != 2)
            return "expected the cycle edge";
        const Vertex x = wit[0], y = wit[1];
        if (!g.adjacent(x, y) || ctx.class_of(x) < 0 || ctx.class_of(y) < 0 || ctx.class_of(x) == ctx.class_of(y))
            return "witness pair is not a cycle edge";
        VertexSet covered = 0;
        for (const auto& blocked : cert.blocked) {
            const Vertex w = blocked.apex;
            if (!ctx.in_range(w) || !(ctx.W & bit(w)))
                return "blocked apex " + std::to_string(w) + " is not in W";
            if (covered & bit(w))
                return "apex " + std::to_string(w) + " blocked twice";
            covered |= bit(w);
            if (g.adjacent(w, x) && g.adjacent(w, y))
                return "apex " + std::to_string(w) + " already spans the edge";
            Graph trial = g;
            trial.add_edge(w, x);
            trial.add_edge(w, y);
            auto err = check_certificate(trial, ctx, blocked.reason, false, true);
            if (!err.empty())
                return "apex " + std::to_string(w) + ": " + describe(blocked.reason) + ": " + err;
        }
        if (covered != ctx.W)
            return "not every W vertex is blocked";
        return {};
    }
    }
    return "unknown certificate kind";
}

std::string check_labeling(const ProofTrace& trace, ReplayContext& ctx)
{
    const auto& lab = trace.labeling;
    ctx.params = trace.params;
    if (trace.params.n < 3 || trace.params.n > kMaxVertices)
        return "order outside 3..62";
    ctx.n = static_cast<int>(trace.params.n);
    ctx.a = lab.a;
    ctx.b = lab.b;
    ctx.c = lab.c;

    VertexSet seen = 0;
    const auto claim = [&](Vertex v) {
        if (!ctx.in_range(v) || (seen & bit(v)))
            return false;
        seen |= bit(v);
        return true;
    };
    if (!claim(lab.a) || !claim(lab.b) || !claim(lab.c))
        return "anchor vertices invalid";
    for (auto [cls, set] : {std::pair{&lab.A, &ctx.A}, std::pair{&lab.B, &ctx.B}, std::pair{&lab.C, &ctx.C},
                            std::pair{&lab.W, &ctx.W}}) {
        for (Vertex v : *cls) {
            if (!claim(v))
                return "labeling repeats or exceeds vertex " + std::to_string(v);
            *set |= bit(v);
        }
    }
    if (popcount(seen) != ctx.n)
        return "labeling does not cover every vertex";
    if (lab.A.size() != lab.B.size() || lab.B.size() != lab.C.size())
        return "classes differ in size";
    return {};
}

Graph forced_edges(const ReplayContext& ctx, const CaseTrace& c)
{
    Graph g(ctx.n);
    g.add_edge(ctx.a, ctx.b);
    g.add_edge(ctx.b, ctx.c);
    g.add_edge(ctx.a, ctx.c);
    for (Vertex v : members(ctx.A))
        g.add_edge(ctx.a, v);
    for (Vertex v : members(ctx.B))
        g.add_edge(ctx.b, v);
    for (Vertex v : members(ctx.C))
        g.add_edge(ctx.c, v);
    for (auto [x, y] : c.cycle_edges)
        g.add_edge(x, y);
    return g;
}

// Cycle edges must form a 2-regular graph on A u B u C with one neighbor in
// each other class and cycle lengths equal to the structure.
std::string check_cycle_edges(const ReplayContext& ctx, const CaseTrace& c)
{
    Graph cyc(ctx.n);
    for (auto [x, y] : c.cycle_edges) {
        if (!ctx.in_range(x) || !ctx.in_range(y) || ctx.class_of(x) < 0 || ctx.class_of(y) < 0 ||
            ctx.class_of(x) == ctx.class_of(y))
            return "cycle edge joins vertices outside distinct classes";
        cyc.add_edge(x, y);
    }
    const VertexSet abc = ctx.A | ctx.B | ctx.C;
    for (Vertex v : members(abc)) {
        if (cyc.degree(v) != 2)
            return "vertex " + std::to_string(v) + " does not have two cycle edges";
        for (VertexSet cls : {ctx.A, ctx.B, ctx.C})
            if (!(cls & bit(v)) && popcount(cyc.row(v) & cls) != 1)
                return "vertex " + std::to_string(v) + " lacks a unique neighbor in another class";
    }
    std::vector<int> lengths;
    VertexSet left = abc;
    while (left) {
        VertexSet comp = bit(members(left).front());
        for (VertexSet grow = 0; grow != comp;) {
            grow = comp;
            for (Vertex v : members(comp))
                comp |= cyc.row(v);
        }
        lengths.push_back(popcount(comp));
        left &= ~comp;
    }
    std::sort(lengths.begin(), lengths.end());
    if (lengths != c.structure.lengths)
        return "cycle edges do not realise structure " + c.structure.label();
    return {};
}

std::string check_coverage(const ReplayContext& ctx, const CaseTrace& c)
{
    const std::size_t m = c.cycle_edges.size();
    std::map<std::vector<Vertex>, std::size_t> terminal; // apex prefixes that end in a leaf
    std::map<std::vector<Vertex>, std::size_t> chord_leaves;
    std::set<std::vector<Vertex>> prefixes;
    for (const auto& leaf : c.leaves) {
        std::vector<Vertex> apexes;
        bool chords = false;
        for (const auto& step : leaf.path) {
            if (step.apex) {
                if (chords)
                    return "apex step after chord step";
                apexes.push_back(*step.apex);
            } else {
                chords = true;
            }
        }
        for (std::size_t len = 0; len < apexes.size(); ++len)
            prefixes.insert(std::vector<Vertex>(apexes.begin(), apexes.begin() + static_cast<long>(len)));
        if (chords)
            ++chord_leaves[apexes];
        else if (++terminal[apexes] > 1)
            return "two leaves close the same branch";
    }

    const auto Wlist = members(ctx.W);
    std::string error;
    std::vector<Vertex> prefix;
    std::function<void()> visit = [&]() {
        if (!error.empty())
            return;
        if (terminal.count(prefix))
            return;
        if (prefix.size() == m) {
            if (!chord_leaves.count(prefix))
                error = "completed assignment has no chord leaves";
            return;
        }
        if (!prefixes.count(prefix) && !prefix.empty()) {
            error = "branch at depth " + std::to_string(prefix.size()) + " is not covered";
            return;
        }
        VertexSet used = 0;
        for (Vertex w : prefix)
            used |= bit(w);
        bool fresh = false;
        for (Vertex w : Wlist) {
            if (!(used & bit(w))) {
                if (fresh)
                    continue;
                fresh = true;
            }
            prefix.push_back(w);
            if (!terminal.count(prefix) && !prefixes.count(prefix) && !(prefix.size() == m && chord_leaves.count(prefix)))
                error = "branch with apex " + std::to_string(w) + " at depth " + std::to_string(prefix.size()) +
                        " is not covered";
            else
                visit();
            prefix.pop_back();
            if (!error.empty())
                return;
        }
    };
    visit();
    return error;
}

} // namespace

ReplayReport replay(const ProofTrace& trace)
{
    ReplayReport report;
    ReplayContext ctx;
    if (auto err = check_labeling(trace, ctx); !err.empty()) {
        report.failures.push_back({0, "", kCaseLevel, err});
        return report;
    }

    std::size_t leaves = 0, surviving = 0;
    std::map<std::string, std::size_t> kinds;
    for (std::size_t ci = 0; ci < trace.cases.size(); ++ci) {
        const auto& c = trace.cases[ci];
        const auto label = c.structure.label();
        leaves += c.leaves.size();
        surviving += c.surviving_completions;
        if (c.counterexamples.size() > c.surviving_completions) {
            report.failures.push_back({ci, label, kCaseLevel, "more counterexamples than surviving completions"});
        }
        if (auto err = check_cycle_edges(ctx, c); !err.empty()) {
            report.failures.push_back({ci, label, kCaseLevel, err});
            continue;
        }
        if (ctx.W != 0) {
            if (auto err = check_coverage(ctx, c); !err.empty())
                report.failures.push_back({ci, label, kCaseLevel, err});
        }

        const Graph base = forced_edges(ctx, c);

        for (std::size_t li = 0; li < c.leaves.size(); ++li) {
            const auto& leaf = c.leaves[li];
            ++kinds[std::string(to_string(leaf.certificate.kind))];
            ++report.leaves_checked;
            Graph g = base;
            std::string err;
            std::size_t apex_steps = 0, chord_steps = 0;
            for (const auto& step : leaf.path) {
                if (!ctx.in_range(step.x) || !ctx.in_range(step.y) || step.x == step.y) {
                    err = "path step has invalid endpoints";
                    break;
                }
                if (step.apex) {
                    const Vertex w = *step.apex;
                    if (apex_steps >= c.cycle_edges.size() ||
                        std::pair{step.x, step.y} != c.cycle_edges[apex_steps]) {
                        err = "apex step does not follow the cycle order";
                        break;
                    }
                    if (!ctx.in_range(w) || !(ctx.W & bit(w))) {
                        err = "apex " + std::to_string(w) + " is not in W";
                        break;
                    }
                    g.add_edge(w, step.x);
                    g.add_edge(w, step.y);
                    ++apex_steps;
                } else {
                    if (ctx.class_of(step.x) < 0 || ctx.class_of(step.x) != ctx.class_of(step.y)) {
                        err = "chord step leaves its class";
                        break;
                    }
                    g.add_edge(step.x, step.y);
                    ++chord_steps;
                }
            }
            // all pairs are decided once every cycle edge has an apex and
            // every class carries its perfect matching
            const bool fully_decided = apex_steps == c.cycle_edges.size() &&
                                       chord_steps == 3 * static_cast<std::size_t>(popcount(ctx.A)) / 2;
            if (err.empty())
                err = check_certificate(g, ctx, leaf.certificate, fully_decided, false);
            if (!err.empty())
                report.failures.push_back({ci, label, li, describe(leaf.certificate) + ": " + err});
        }
    }

    if (leaves != trace.stats.leaves)
        report.failures.push_back({0, "", kCaseLevel, "stats.leaves does not match the leaves listed"});
    if (surviving != trace.stats.surviving_completions)
        report.failures.push_back({0, "", kCaseLevel, "stats.surviving_completions does not match the cases"});
    if (kinds != trace.stats.certificates)
        report.failures.push_back({0, "", kCaseLevel, "stats.certificates does not match the leaves listed"});
    return report;
}

} // namespace srg
