#pragma once

#include "srg/graph.hpp"
#include "srg/params.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srg {

/// Anchor triangle {a, b, c} and the classes A = N(a) \ {b,c},
/// B = N(b) \ {a,c}, C = N(c) \ {a,b}, W = everything else.
struct TrianglePartition {
    Vertex a = 0;
    Vertex b = 1;
    Vertex c = 2;
    VertexSet A = 0;
    VertexSet B = 0;
    VertexSet C = 0;
    VertexSet W = 0;

    VertexSet anchors() const { return bit(a) | bit(b) | bit(c); }
    VertexSet abc() const { return A | B | C; }
};

/// Raised when two neighbor classes share a vertex, i.e. the graph has an
/// edge of the anchor triangle lying in a second triangle.
class ClassOverlap : public std::runtime_error {
public:
    ClassOverlap(Vertex v, const std::string& what) : std::runtime_error(what), vertex(v) {}
    Vertex vertex;
};

/// Throws InputError if {a,b,c} is not a triangle, ClassOverlap if the
/// classes intersect.
TrianglePartition build_triangle_partition(const Graph& g, Vertex a, Vertex b, Vertex c);

struct LemmaReport {
    bool cardinalities = false;       // L1
    bool w_independent = false;       // L2
    bool w_quotas = false;            // L3
    bool in_class_matching = false;   // L4
    bool abc_triangle_free = false;   // L5, direct enumeration
    bool abc_triangle_free_by_count = false; // L5, bookkeeping route

    long long abc_triangles_direct = 0;
    long long abc_triangles_by_count = 0;
    long long total_triangles = 0;
    long long anchor_triangles = 0;
    long long w_apex_triangles = 0;

    bool all() const
    {
        return cardinalities && w_independent && w_quotas && in_class_matching && abc_triangle_free &&
               abc_triangle_free_by_count;
    }
};

/// L1..L5 for a partition of g under parameters p (lambda must be 1).
LemmaReport check_partition_lemmas(const Graph& g, const TrianglePartition& part, const SrgParams& p);

/// Triangles meeting the anchor triangle: 3 (k lambda / 2) - 2. Requires
/// lambda = 1.
long long anchor_triangle_count(const SrgParams& p);

/// Cross-class adjacency maps. Index maps are positions in the ascending
/// member lists: B[ab[i]] is the unique B-neighbor of A[i].
struct AbcBijections {
    std::vector<Vertex> A, B, C;
    std::vector<int> ab, bc, ca;
};

/// Names the non-adjacent pair whose common-neighbor count breaks the
/// bijection, together with those common neighbors.
struct BijectionViolation {
    std::string map;   // "A->B", "B->C", "C->A"
    Vertex vertex;     // the vertex with 0 or >= 2 neighbors across
    Vertex anchor;     // anchor vertex not adjacent to `vertex`
    int cross_neighbors;
    std::vector<Vertex> common;
};

struct BijectionResult {
    std::optional<AbcBijections> maps;
    std::optional<BijectionViolation> violation;
};

BijectionResult abc_bijections(const Graph& g, const TrianglePartition& part);

/// Multiset of cycle lengths, ascending.
struct CycleStructure {
    std::vector<int> lengths;

    int total() const;
    bool contains(int length) const;
    std::string label() const;
    friend auto operator<=>(const CycleStructure&, const CycleStructure&) = default;
};

/// Cycle lengths of the 2-regular graph formed by the bijection edges; each is
/// three times a cycle length of the permutation ca . bc . ab of A.
CycleStructure cycle_structure_of(const AbcBijections& maps);

/// Every multiset of multiples of 3 summing to 3 * class_size, lexicographic.
std::vector<CycleStructure> raw_cycle_structures(int class_size);

/// raw_cycle_structures minus anything with a 3-part (a triangle in A u B u C)
/// or a 9-part (its complement is then a 3-cycle). Only class sizes 2 and 4
/// are supported; others throw OutOfScopeError.
std::vector<CycleStructure> admissible_cycle_structures(int class_size);

} // namespace srg
