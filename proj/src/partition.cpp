#include "srg/partition.hpp"

#include "srg/error.hpp"

#include <algorithm>
#include <functional>

namespace srg {

TrianglePartition build_triangle_partition(const Graph& g, Vertex a, Vertex b, Vertex c)
{
    if (a == b || b == c || a == c || !g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(a, c))
        throw InputError("{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                         "} is not a triangle");

    TrianglePartition part;
    part.a = a;
    part.b = b;
    part.c = c;
    part.A = g.row(a) & ~(bit(b) | bit(c));
    part.B = g.row(b) & ~(bit(a) | bit(c));
    part.C = g.row(c) & ~(bit(a) | bit(b));

    const VertexSet overlap = (part.A & part.B) | (part.B & part.C) | (part.A & part.C);
    if (overlap) {
        const Vertex v = members(overlap).front();
        throw ClassOverlap(v, "vertex " + std::to_string(v) +
                                  " is adjacent to two anchor vertices; an anchor edge lies in two triangles");
    }
    part.W = g.all() & ~(part.anchors() | part.abc());
    return part;
}

long long anchor_triangle_count(const SrgParams& p)
{
    if (p.lambda != 1)
        throw InputError("anchor_triangle_count needs lambda = 1, got " + to_string(p));
    return 3 * (p.k * p.lambda / 2) - 2;
}

LemmaReport check_partition_lemmas(const Graph& g, const TrianglePartition& part, const SrgParams& p)
{
    LemmaReport r;
    const ExpectedCounts counts = expected_counts(p);
    const auto& sizes = *counts.partition;

    r.cardinalities = popcount(part.A) == sizes[0] && popcount(part.B) == sizes[1] && popcount(part.C) == sizes[2] &&
                      popcount(part.W) == sizes[3];

    r.w_independent = true;
    r.w_quotas = true;
    for (Vertex w : members(part.W)) {
        if (g.row(w) & part.W)
            r.w_independent = false;
        for (VertexSet cls : {part.A, part.B, part.C})
            if (popcount(g.row(w) & cls) != p.mu)
                r.w_quotas = false;
    }

    r.in_class_matching = true;
    for (VertexSet cls : {part.A, part.B, part.C})
        for (Vertex v : members(cls))
            if (popcount(g.row(v) & cls) != p.lambda)
                r.in_class_matching = false;

    r.abc_triangles_direct = triangle_count(induced_subgraph(g, part.abc()));
    r.total_triangles = counts.triangles;
    r.anchor_triangles = anchor_triangle_count(p);
    r.w_apex_triangles = popcount(part.W) * counts.triangles_per_vertex;
    r.abc_triangles_by_count = r.total_triangles - r.anchor_triangles - r.w_apex_triangles;
    r.abc_triangle_free = r.abc_triangles_direct == 0;
    r.abc_triangle_free_by_count = r.abc_triangles_by_count == 0;
    return r;
}

namespace {

struct MapCheck {
    std::vector<int> map;
    std::optional<BijectionViolation> violation;
};

// Adjacency from `from` into `to` must be a bijection. A vertex x in `from`
// is not adjacent to the anchor of `to`; their common neighbors are x's own
// anchor plus x's neighbors in `to`, so any count other than one breaks mu.
MapCheck check_map(const Graph& g, const std::string& name, const std::vector<Vertex>& from, Vertex from_anchor,
                   const std::vector<Vertex>& to, Vertex to_anchor)
{
    MapCheck out;
    VertexSet to_set = 0;
    for (Vertex v : to)
        to_set |= bit(v);
    VertexSet from_set = 0;
    for (Vertex v : from)
        from_set |= bit(v);

    const auto violation = [&](Vertex v, Vertex anchor, VertexSet across) {
        return BijectionViolation{name, v, anchor, popcount(across), members(g.row(v) & g.row(anchor))};
    };

    for (Vertex x : from) {
        const VertexSet across = g.row(x) & to_set;
        if (popcount(across) != 1) {
            out.violation = violation(x, to_anchor, across);
            return out;
        }
        const Vertex y = members(across).front();
        out.map.push_back(static_cast<int>(std::find(to.begin(), to.end(), y) - to.begin()));
    }
    for (Vertex y : to) {
        const VertexSet back = g.row(y) & from_set;
        if (popcount(back) != 1) {
            out.violation = violation(y, from_anchor, back);
            return out;
        }
    }
    return out;
}

} // namespace

BijectionResult abc_bijections(const Graph& g, const TrianglePartition& part)
{
    AbcBijections maps;
    maps.A = members(part.A);
    maps.B = members(part.B);
    maps.C = members(part.C);

    BijectionResult result;
    auto ab = check_map(g, "A->B", maps.A, part.a, maps.B, part.b);
    if (ab.violation) {
        result.violation = ab.violation;
        return result;
    }
    auto bc = check_map(g, "B->C", maps.B, part.b, maps.C, part.c);
    if (bc.violation) {
        result.violation = bc.violation;
        return result;
    }
    auto ca = check_map(g, "C->A", maps.C, part.c, maps.A, part.a);
    if (ca.violation) {
        result.violation = ca.violation;
        return result;
    }
    maps.ab = std::move(ab.map);
    maps.bc = std::move(bc.map);
    maps.ca = std::move(ca.map);
    result.maps = std::move(maps);
    return result;
}

int CycleStructure::total() const
{
    int sum = 0;
    for (int l : lengths)
        sum += l;
    return sum;
}

bool CycleStructure::contains(int length) const
{
    return std::find(lengths.begin(), lengths.end(), length) != lengths.end();
}

std::string CycleStructure::label() const
{
    std::string out;
    for (int l : lengths) {
        if (!out.empty())
            out += "+";
        out += "C" + std::to_string(l);
    }
    return out;
}

CycleStructure cycle_structure_of(const AbcBijections& maps)
{
    const std::size_t size = maps.ab.size();
    std::vector<bool> seen(size, false);
    CycleStructure cs;
    for (std::size_t start = 0; start < size; ++start) {
        if (seen[start])
            continue;
        int len = 0;
        for (std::size_t i = start; !seen[i];
             i = static_cast<std::size_t>(maps.ca[static_cast<std::size_t>(
                 maps.bc[static_cast<std::size_t>(maps.ab[i])])])) {
            seen[i] = true;
            ++len;
        }
        cs.lengths.push_back(3 * len);
    }
    std::sort(cs.lengths.begin(), cs.lengths.end());
    return cs;
}

std::vector<CycleStructure> raw_cycle_structures(int class_size)
{
    std::vector<CycleStructure> out;
    std::vector<int> parts;
    // parts in non-decreasing order so every multiset appears once
    std::function<void(int, int)> extend = [&](int remaining, int smallest) {
        if (remaining == 0) {
            CycleStructure cs;
            for (int part : parts)
                cs.lengths.push_back(3 * part);
            out.push_back(std::move(cs));
            return;
        }
        for (int part = smallest; part <= remaining; ++part) {
            parts.push_back(part);
            extend(remaining - part, part);
            parts.pop_back();
        }
    };
    if (class_size > 0)
        extend(class_size, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CycleStructure> admissible_cycle_structures(int class_size)
{
    if (class_size != 2 && class_size != 4)
        throw OutOfScopeError("cycle structures are only derived for class sizes 2 and 4, got " +
                              std::to_string(class_size));
    std::vector<CycleStructure> out;
    for (auto& cs : raw_cycle_structures(class_size))
        if (!cs.contains(3) && !cs.contains(9))
            out.push_back(std::move(cs));
    return out;
}

} // namespace srg
