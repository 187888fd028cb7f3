#include "fixtures.hpp"

#include "srg/paley.hpp"

#include <algorithm>
#include <cmath>

namespace fixtures {

srg::Graph k3() { return srg::Graph::complete(3); }
srg::Graph c5() { return srg::Graph::cycle(5); }

// K3 x K3 (rook graph), which is Paley(9) up to isomorphism.
srg::Graph paley9()
{
    srg::Graph g(9);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            if (u / 3 == v / 3 || u % 3 == v % 3)
                g.add_edge(u, v);
    return g;
}

srg::Graph paley13()
{
    // nonzero squares mod 13: 1, 3, 4, 9, 10, 12
    srg::Graph g(13);
    for (int u = 0; u < 13; ++u)
        for (int d : {1, 3, 4})
            g.add_edge(u, (u + d) % 13);
    return g;
}

srg::Graph petersen()
{
    // Kneser graph K(5,2): 2-subsets adjacent when disjoint
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            pairs.emplace_back(a, b);
    srg::Graph g(10);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
            const auto [a, b] = pairs[static_cast<std::size_t>(u)];
            const auto [c, d] = pairs[static_cast<std::size_t>(v)];
            if (a != c && a != d && b != c && b != d)
                g.add_edge(u, v);
        }
    return g;
}

std::vector<Named> property_graphs()
{
    return {
        {"K3", k3(), {3, 2, 1, 0}},
        {"C5", c5(), {5, 2, 0, 1}},
        {"Paley(9)", paley9(), {9, 4, 1, 2}},
        {"Paley(13)", paley13(), {13, 6, 2, 3}},
        {"Petersen", petersen(), {10, 3, 0, 1}},
    };
}

long long naive_triangles(const srg::Graph& g)
{
    long long t = 0;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            for (int c = b + 1; c < g.order(); ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
                    ++t;
    return t;
}

int naive_common(const srg::Graph& g, int u, int v)
{
    int c = 0;
    for (int w = 0; w < g.order(); ++w)
        if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w))
            ++c;
    return c;
}

bool naive_is_srg(const srg::Graph& g, const srg::SrgParams& p)
{
    if (g.order() != p.n)
        return false;
    for (int u = 0; u < g.order(); ++u) {
        int deg = 0;
        for (int v = 0; v < g.order(); ++v)
            deg += (v != u && g.adjacent(u, v)) ? 1 : 0;
        if (deg != p.k)
            return false;
        for (int v = u + 1; v < g.order(); ++v)
            if (naive_common(g, u, v) != (g.adjacent(u, v) ? p.lambda : p.mu))
                return false;
    }
    return true;
}

std::string naive_graph6(const srg::Graph& g)
{
    std::vector<int> bits;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0)
        bits.push_back(0);
    std::string out(1, static_cast<char>(g.order() + 63));
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (std::size_t b = 0; b < 6; ++b)
            value = value * 2 + bits[i + b];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

std::vector<double> eigenvalues(const srg::Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<double>> a(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            a[u][v] = g.adjacent(u, v) ? 1.0 : 0.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                off += a[p][q] * a[p][q];
        if (off < 1e-22)
            break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
        out.push_back(a[i][i]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fixtures
