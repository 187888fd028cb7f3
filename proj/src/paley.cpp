#include "srg/paley.hpp"

#include "srg/error.hpp"

#include <array>
#include <string>

namespace srg {

namespace {

bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

// GF(9) = GF(3)[x]/(x^2 + 1); element a + b x stored as 3a + b.
constexpr int gf9_add(int u, int v) { return ((u / 3 + v / 3) % 3) * 3 + (u % 3 + v % 3) % 3; }
constexpr int gf9_neg(int u) { return ((3 - u / 3) % 3) * 3 + (3 - u % 3) % 3; }
constexpr int gf9_mul(int u, int v)
{
    // (a + b x)(c + d x) = (ac - bd) + (ad + bc) x since x^2 = -1
    const int a = u / 3, b = u % 3, c = v / 3, d = v % 3;
    return ((a * c + 2 * b * d) % 3) * 3 + (a * d + b * c) % 3;
}

Graph paley_gf9()
{
    std::array<bool, 9> square{};
    for (int u = 1; u < 9; ++u)
        square[static_cast<std::size_t>(gf9_mul(u, u))] = true;

    Graph g(9);
    for (Vertex u = 0; u < 9; ++u)
        for (Vertex v = u + 1; v < 9; ++v)
            if (square[static_cast<std::size_t>(gf9_add(u, gf9_neg(v)))])
                g.add_edge(u, v);
    return g;
}

} // namespace

Graph paley_graph(int q)
{
    if (q == 9)
        return paley_gf9();
    if (!is_prime(q) || q % 4 != 1 || q > kMaxVertices)
        throw InputError("Paley order q = " + std::to_string(q) + " is not a prime = 1 (mod 4) up to 61, nor 9");

    std::vector<bool> square(static_cast<std::size_t>(q), false);
    for (int x = 1; x < q; ++x)
        square[static_cast<std::size_t>(x * x % q)] = true;

    Graph g(q);
    for (Vertex u = 0; u < q; ++u)
        for (Vertex v = u + 1; v < q; ++v)
            if (square[static_cast<std::size_t>((v - u) % q)])
                g.add_edge(u, v);
    return g;
}

} // namespace srg
