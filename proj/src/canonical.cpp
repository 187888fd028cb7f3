#include "srg/canonical.hpp"

#include "srg/graph6.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace srg {

namespace {

// Ordered partition of the vertex set, one bitset per cell.
struct Partition {
    std::array<VertexSet, kMaxVertices> cells{};
    int size = 0;
};

// Split cells by neighbor count into each splitter until nothing changes.
// Sub-cells are ordered by ascending count, which keeps the result
// label-independent.
void refine(const Graph& g, Partition& p)
{
    for (bool changed = true; changed;) {
        changed = false;
        for (int s = 0; s < p.size && !changed; ++s) {
            const VertexSet splitter = p.cells[static_cast<std::size_t>(s)];
            for (int c = 0; c < p.size; ++c) {
                const VertexSet cell = p.cells[static_cast<std::size_t>(c)];
                if (popcount(cell) < 2)
                    continue;
                std::array<VertexSet, kMaxVertices + 1> by_count{};
                int parts = 0;
                for (VertexSet rest = cell; rest; rest &= rest - 1) {
                    const Vertex v = std::countr_zero(rest);
                    auto& slot = by_count[static_cast<std::size_t>(popcount(g.row(v) & splitter))];
                    parts += slot == 0 ? 1 : 0;
                    slot |= bit(v);
                }
                if (parts < 2)
                    continue;
                std::copy_backward(p.cells.begin() + c + 1, p.cells.begin() + p.size,
                                   p.cells.begin() + p.size + parts - 1);
                int at = c;
                for (VertexSet part : by_count)
                    if (part)
                        p.cells[static_cast<std::size_t>(at++)] = part;
                p.size += parts - 1;
                changed = true;
                break;
            }
        }
    }
}

bool twins(const Graph& g, Vertex u, Vertex v)
{
    return (g.row(u) & ~bit(v)) == (g.row(v) & ~bit(u));
}

struct Leaf {
    std::string form;
    std::vector<Vertex> perm;
};

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g) {}

    std::vector<Vertex> run()
    {
        Partition p;
        p.cells[0] = g_.all();
        p.size = 1;
        search(p);
        return best_->perm;
    }

private:
    void search(Partition p)
    {
        refine(g_, p);
        int index = 0;
        while (index < p.size && popcount(p.cells[static_cast<std::size_t>(index)]) < 2)
            ++index;
        if (index == p.size) {
            leaf(p);
            return;
        }

        const VertexSet cell = p.cells[static_cast<std::size_t>(index)];
        std::vector<Vertex> tried;
        for (Vertex v : members(cell)) {
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(g_, t, v); }))
                continue;
            if (same_orbit(tried, v))
                continue;
            tried.push_back(v);
            Partition next = p;
            std::copy_backward(next.cells.begin() + index + 1, next.cells.begin() + next.size,
                               next.cells.begin() + next.size + 1);
            next.cells[static_cast<std::size_t>(index)] = bit(v);
            next.cells[static_cast<std::size_t>(index) + 1] = cell & ~bit(v);
            ++next.size;
            path_.push_back(v);
            search(next);
            path_.pop_back();
        }
    }

    void leaf(const Partition& p)
    {
        std::vector<Vertex> perm(static_cast<std::size_t>(g_.order()));
        for (int i = 0; i < p.size; ++i)
            perm[static_cast<std::size_t>(std::countr_zero(p.cells[static_cast<std::size_t>(i)]))] = i;
        std::string form = to_graph6(g_.relabeled(perm));
        if (!first_) {
            first_ = Leaf{form, perm};
        } else if (form == first_->form) {
            record(first_->perm, perm);
        } else if (best_ && form == best_->form) {
            record(best_->perm, perm);
        }
        if (!best_ || form < best_->form)
            best_ = Leaf{std::move(form), std::move(perm)};
    }

    // Two leaves with the same graph give the automorphism p2^-1 . p1.
    void record(const std::vector<Vertex>& p1, const std::vector<Vertex>& p2)
    {
        std::vector<Vertex> inverse(p2.size());
        for (std::size_t v = 0; v < p2.size(); ++v)
            inverse[static_cast<std::size_t>(p2[v])] = static_cast<Vertex>(v);
        std::vector<Vertex> gamma(p1.size());
        for (std::size_t v = 0; v < p1.size(); ++v)
            gamma[v] = inverse[static_cast<std::size_t>(p1[v])];
        automorphisms_.push_back(std::move(gamma));
    }

    // An automorphism fixing the current path maps the subtree of t onto the
    // subtree of its image, so only one vertex per orbit is expanded.
    bool same_orbit(const std::vector<Vertex>& tried, Vertex v) const
    {
        if (tried.empty() || automorphisms_.empty())
            return false;
        std::array<Vertex, kMaxVertices> parent{};
        for (Vertex x = 0; x < g_.order(); ++x)
            parent[static_cast<std::size_t>(x)] = x;
        const auto find = [&](Vertex x) {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            const bool fixes_path = std::all_of(path_.begin(), path_.end(),
                                                [&](Vertex p) { return gamma[static_cast<std::size_t>(p)] == p; });
            if (!fixes_path)
                continue;
            for (std::size_t x = 0; x < gamma.size(); ++x) {
                const Vertex a = find(static_cast<Vertex>(x));
                const Vertex b = find(gamma[x]);
                if (a != b)
                    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return find(t) == find(v); });
    }

    const Graph& g_;
    std::vector<Vertex> path_;
    std::optional<Leaf> first_;
    std::optional<Leaf> best_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

} // namespace

std::vector<Vertex> canonical_labeling(const Graph& g)
{
    if (g.order() == 0)
        return {};
    return Canonizer(g).run();
}

std::string canonical_form(const Graph& g)
{
    return to_graph6(g.relabeled(canonical_labeling(g)));
}

} // namespace srg
