#pragma once

#include "srg/graph.hpp"
#include "srg/params.hpp"

#include <string>
#include <vector>

namespace fixtures {

struct Named {
    std::string name;
    srg::Graph graph;
    srg::SrgParams params;
};

srg::Graph k3();
srg::Graph c5();
srg::Graph paley9();
srg::Graph paley13();
srg::Graph petersen();

/// K3, C5, Paley(9), Paley(13), Petersen with their parameters.
std::vector<Named> property_graphs();

// Brute-force references.
long long naive_triangles(const srg::Graph& g);
int naive_common(const srg::Graph& g, int u, int v);
bool naive_is_srg(const srg::Graph& g, const srg::SrgParams& p);

/// Reference graph6 encoder straight from the bit-vector definition.
std::string naive_graph6(const srg::Graph& g);

/// Eigenvalues of the adjacency matrix (cyclic Jacobi), ascending.
std::vector<double> eigenvalues(const srg::Graph& g);

} // namespace fixtures
