#include "srg/proof.hpp"

#include <future>

namespace srg {

void ProofTrace::recompute_stats()
{
    stats = TraceStats{};
    counterexamples.clear();
    for (const auto& c : cases) {
        stats.nodes_explored += c.nodes;
        stats.leaves += c.leaves.size();
        stats.surviving_completions += c.surviving_completions;
        for (const auto& leaf : c.leaves)
            ++stats.certificates[std::string(to_string(leaf.certificate.kind))];
        counterexamples.insert(counterexamples.end(), c.counterexamples.begin(), c.counterexamples.end());
    }
}

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

// Facts every srg(n,k,1,mu) with the canonical labeling must satisfy, each
// reduced to integer arithmetic on the parameters.
std::vector<LemmaStep> forced_structure(const SrgParams& p, const ExpectedCounts& counts)
{
    const auto& sizes = *counts.partition;
    const std::int64_t cls = sizes[0];
    const std::int64_t w = sizes[3];
    const std::int64_t per_vertex = counts.triangles_per_vertex;
    const std::int64_t anchor = anchor_triangle_count(p);
    const std::int64_t apex = w * per_vertex;
    const std::int64_t inside = counts.triangles - anchor - apex;
    // A class vertex sees its anchor, lambda class mates, mu - 1 vertices in
    // each other class, and the rest in W.
    const std::int64_t class_to_w = p.k - 1 - p.lambda - 2 * (p.mu - 1);

    std::vector<LemmaStep> out;
    out.push_back({"anchor_triangle",
                   "lambda = " + num(p.lambda) + " >= 1 so every edge lies in a triangle; label it 0,1,2", p.lambda >= 1});
    out.push_back({"partition_sizes",
                   "|A| = |B| = |C| = k - 2 = " + num(cls) + ", |W| = n - 3 - 3(k - 2) = " + num(w),
                   cls >= 0 && w >= 0});
    out.push_back({"w_quotas",
                   "w in W is not adjacent to a, so N(w) meets A in mu = " + num(p.mu) + " vertices; likewise B, C",
                   3 * p.mu <= p.k});
    out.push_back({"w_independent",
                   "deg(w) = k = " + num(p.k) + " = 3 mu, so W has no internal edges", 3 * p.mu == p.k});
    out.push_back({"in_class_matching",
                   "adjacent pair (a, x) with x in A has lambda = 1 common neighbor, inside A: G[A] is a perfect matching",
                   p.lambda == 1 && cls % 2 == 0});
    out.push_back({"cross_class_bijections",
                   "non-adjacent pair (x, b) with x in A shares a and mu - 1 = " + num(p.mu - 1) +
                       " vertex of B: adjacency A->B, B->C, C->A are bijections",
                   p.mu - 1 == 1});
    out.push_back({"class_to_w_degree",
                   "each class vertex has k - 1 - lambda - 2(mu - 1) = " + num(class_to_w) +
                       " neighbors in W; total " + num(3 * cls * class_to_w) + " = mu |W| * 3 = " +
                       num(3 * p.mu * w),
                   3 * cls * class_to_w == 3 * p.mu * w});
    out.push_back({"abc_triangle_free",
                   "triangles: total nk/6 = " + num(counts.triangles) + ", through the anchor " + num(anchor) +
                       ", with apex in W " + num(apex) + ", inside A u B u C " + num(inside),
                   inside == 0});
    out.push_back({"cycle_edges_need_w_apex",
                   "every bijection edge lies in exactly one triangle and its apex is in W: " + num(3 * cls) +
                       " edges = |W| * k lambda / 2 = " + num(apex),
                   3 * cls == apex});
    return out;
}

} // namespace

ProofTrace prove_nonexistence_19()
{
    ProofTrace trace;
    trace.params = SrgParams{19, 6, 1, 2};
    trace.labeling = Labeling::canonical(trace.params);
    const auto counts = expected_counts(trace.params);
    trace.lemmas = forced_structure(trace.params, counts);

    const int class_size = static_cast<int>((*counts.partition)[0]);
    for (const auto& cs : raw_cycle_structures(class_size)) {
        if (cs.contains(3))
            trace.excluded.push_back({cs, "contains a 3-cycle, a triangle inside A u B u C"});
        else if (cs.contains(9))
            trace.excluded.push_back({cs, "the vertices outside a 9-cycle form a 3-cycle"});
    }

    const auto structures = admissible_cycle_structures(class_size);
    std::vector<std::future<CaseTrace>> jobs;
    for (const auto& cs : structures)
        jobs.push_back(std::async(std::launch::async, [cs, p = trace.params] { return exhaust_apex_assignments(cs, p); }));
    for (auto& job : jobs)
        trace.cases.push_back(job.get());

    trace.recompute_stats();
    return trace;
}

} // namespace srg
