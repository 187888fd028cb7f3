#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srg/error.hpp"
#include "srg/proof.hpp"
#include "srg/trace_io.hpp"

#include <functional>

using srg::CertificateKind;

namespace {

const srg::ProofTrace& trace19()
{
    static const srg::ProofTrace t = srg::prove_nonexistence_19();
    return t;
}

// Certificates at the leaf and inside no_apex_available blockers.
void visit(const srg::Certificate& cert, const std::function<void(const srg::Certificate&)>& fn)
{
    fn(cert);
    for (const auto& b : cert.blocked)
        visit(b.reason, fn);
}

} // namespace

TEST_CASE("srg(19,6,1,2) is refuted")
{
    const auto& t = trace19();
    CHECK(t.params == srg::SrgParams{19, 6, 1, 2});
    CHECK(t.stats.surviving_completions == 0);
    CHECK(t.counterexamples.empty());
    REQUIRE(t.cases.size() == 2);
    CHECK(t.cases[0].structure.label() == "C6+C6");
    CHECK(t.cases[1].structure.label() == "C12");
    CHECK(t.excluded.size() == 3);
    for (const auto& lemma : t.lemmas) {
        CAPTURE(lemma.name);
        CHECK(lemma.holds);
    }
}

TEST_CASE("both case contradictions appear")
{
    const auto& t = trace19();
    bool no_apex_in_66 = false;
    for (const auto& leaf : t.cases[0].leaves)
        no_apex_in_66 |= leaf.certificate.kind == CertificateKind::no_apex_available;
    CHECK(no_apex_in_66);

    bool mu_in_12 = false;
    for (const auto& leaf : t.cases[1].leaves)
        visit(leaf.certificate, [&](const srg::Certificate& c) {
            mu_in_12 |= c.kind == CertificateKind::mu_violation_with_witnesses && c.witnesses.size() == 5;
        });
    CHECK(mu_in_12);
}

TEST_CASE("stats add up")
{
    auto t = trace19();
    std::size_t leaves = 0, nodes = 0;
    for (const auto& c : t.cases) {
        leaves += c.leaves.size();
        nodes += c.nodes;
        CHECK(c.nodes > c.leaves.size());
    }
    CHECK(t.stats.leaves == leaves);
    CHECK(t.stats.nodes_explored == nodes);
    const auto before = t.stats.certificates;
    t.recompute_stats();
    CHECK(t.stats.certificates == before);
}

TEST_CASE("trace replays and round-trips through JSON")
{
    const auto& t = trace19();
    const auto report = srg::replay(t);
    CHECK(report.ok());
    CHECK(report.leaves_checked == t.stats.leaves);

    const auto j = srg::to_json(t);
    const auto back = srg::trace_from_json(j);
    CHECK(srg::to_json(back) == j);
    CHECK(srg::replay(back).ok());
}

TEST_CASE("tampering is caught")
{
    SUBCASE("witness edited")
    {
        auto t = trace19();
        auto& cert = t.cases[1].leaves[0].certificate;
        REQUIRE(cert.kind == CertificateKind::edge_in_two_triangles);
        cert.witnesses.back() = 18;
        const auto report = srg::replay(t);
        REQUIRE_FALSE(report.ok());
        CHECK(report.failures[0].case_index == 1);
        CHECK(report.failures[0].leaf_index == 0);
    }
    SUBCASE("kind changed")
    {
        auto t = trace19();
        t.cases[0].leaves[0].certificate.kind = CertificateKind::vertex_exceeds_three_triangles;
        CHECK_FALSE(srg::replay(t).ok());
    }
    SUBCASE("leaf dropped")
    {
        auto t = trace19();
        t.cases[0].leaves.pop_back();
        t.recompute_stats();
        CHECK_FALSE(srg::replay(t).ok());
    }
    SUBCASE("stats forged")
    {
        auto t = trace19();
        t.stats.surviving_completions = 0;
        t.stats.leaves += 1;
        CHECK_FALSE(srg::replay(t).ok());
    }
    SUBCASE("labeling broken")
    {
        auto t = trace19();
        std::swap(t.labeling.A[0], t.labeling.W[0]);
        CHECK_FALSE(srg::replay(t).ok());
    }
}

TEST_CASE("apex exhaustion preconditions")
{
    CHECK_THROWS_AS(srg::exhaust_apex_assignments({{3, 9}}), srg::InputError);
    CHECK_THROWS_AS(srg::exhaust_apex_assignments({{6, 6}}, {13, 6, 2, 3}), srg::InputError);

    // Paley(9) scale: W is empty, so nothing constrains the cycle
    const auto trivial = srg::exhaust_apex_assignments({{6}}, {9, 4, 1, 2});
    CHECK(trivial.leaves.empty());
    CHECK(trivial.surviving_completions == 1);
}

TEST_CASE("certificate kind names")
{
    for (auto kind : {CertificateKind::edge_in_two_triangles, CertificateKind::vertex_exceeds_three_triangles,
                      CertificateKind::mu_violation_with_witnesses, CertificateKind::w_adjacency_quota_violation,
                      CertificateKind::no_apex_available})
        CHECK(srg::certificate_kind_from(srg::to_string(kind)) == kind);
    CHECK_FALSE(srg::certificate_kind_from("bogus"));
}

TEST_CASE("canonical labeling layout")
{
    const auto lab = srg::Labeling::canonical({19, 6, 1, 2});
    CHECK(lab.A == std::vector<srg::Vertex>{3, 4, 5, 6});
    CHECK(lab.W == std::vector<srg::Vertex>{15, 16, 17, 18});
    const auto edges = srg::layout_cycle_edges(lab, {{12}});
    CHECK(edges.size() == 12);
    CHECK(edges.front() == std::pair<srg::Vertex, srg::Vertex>{3, 7});
}
