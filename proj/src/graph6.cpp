#include "srg/graph6.hpp"

#include "srg/error.hpp"

namespace srg {

namespace {

constexpr int kBias = 63;

std::size_t data_bytes(int n)
{
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    if (!text.empty() && text.back() == '\n')
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty graph6 string", 0);

    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < kBias || c > kBias + 63)
            throw ParseError("non-graph6 byte " + std::to_string(c), i);
    }

    const int header = static_cast<unsigned char>(text[0]) - kBias;
    if (header == 63)
        throw ParseError("long-form order header unsupported (n > 62)", 0);
    const int n = header;
    if (n > kMaxVertices)
        throw ParseError("order " + std::to_string(n) + " exceeds 62", 0);

    const std::size_t expected = 1 + data_bytes(n);
    if (text.size() < expected)
        throw ParseError("truncated edge data, expected " + std::to_string(expected) + " bytes", text.size());
    if (text.size() > expected)
        throw ParseError("trailing garbage", expected);

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
            if ((chunk >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    for (; k % 6 != 0; ++k) {
        const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
        if ((chunk >> (5 - k % 6)) & 1)
            throw ParseError("nonzero padding bits", 1 + k / 6);
    }
    return g;
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    out.reserve(1 + data_bytes(n));
    out.push_back(static_cast<char>(n + kBias));

    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

} // namespace srg
