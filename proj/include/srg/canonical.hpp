#pragma once

#include "srg/graph.hpp"

#include <string>
#include <vector>

namespace srg {

/// Relabeling that puts g into canonical form: vertex v becomes perm[v].
///
/// Individualization-refinement: the ordered partition is refined by
/// neighbor counts into each cell until equitable, then every vertex of the
/// first non-singleton cell is individualized in turn. Each discrete leaf
/// gives a relabeled graph; the one with the smallest graph6 string wins.
/// Vertices that are twins (same neighborhood apart from each other) lead to
/// identical subtrees, so only one per twin class is expanded.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// graph6 of the canonically relabeled graph; equal iff isomorphic.
std::string canonical_form(const Graph& g);

} // namespace srg
