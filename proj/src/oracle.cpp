#include "srg/oracle.hpp"

#include "srg/canonical.hpp"
#include "srg/error.hpp"
#include "srg/graph.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <set>
#include <stdexcept>
#include <thread>

namespace srg {

namespace {

constexpr std::size_t kFrontierTarget = 32;

// Row order constraint for the transposition (i, i+1): the pair-state
// sequence, read row-major with edge < non-edge, must not decrease when i and
// i+1 swap labels. The lexicographically least labeling of any graph passes
// every such check. Undecided pairs stop the comparison.
bool breaks_row_order(const PartialGraph& pg)
{
    const int n = pg.order();
    for (Vertex i = 0; i + 1 < n; ++i) {
        const Vertex j = i + 1;
        const auto compare = [&](PairState here, PairState swapped) -> int {
            if (here == PairState::undecided || swapped == PairState::undecided)
                return 0; // unknown
            if (here == swapped)
                return 2; // keep scanning
            return here == PairState::non_edge ? -1 : 1;
        };
        int verdict = 2;
        for (Vertex u = 0; u < i && verdict == 2; ++u)
            verdict = compare(pg.state(u, i), pg.state(u, j));
        for (Vertex v = j + 1; v < n && verdict == 2; ++v)
            verdict = compare(pg.state(i, v), pg.state(j, v));
        if (verdict == -1)
            return true;
    }
    return false;
}

std::pair<Vertex, Vertex> first_undecided(const PartialGraph& pg)
{
    for (Vertex u = 0; u < pg.order(); ++u)
        if (const VertexSet later = pg.open(u) & ~((bit(u) << 1) - 1))
            return {u, std::countr_zero(later)};
    throw std::logic_error("no undecided pair left");
}

struct Task {
    PartialGraph pg;
    std::size_t depth;
};

class Searcher {
public:
    Searcher(const SrgParams& p, bool seeded) : p_(p), seeded_(seeded) {}

    // Processes one node. Returns the children still to explore; on a dead
    // end or a completed graph the list is empty and pg is restored.
    std::vector<Task> expand(PartialGraph& pg, std::size_t depth)
    {
        ++nodes_;
        max_depth_ = std::max(max_depth_, depth);
        const std::size_t mark = pg.trail_size();
        std::vector<Task> children;
        if (settle(pg)) {
            const auto [u, v] = first_undecided(pg);
            for (bool edge : {true, false}) {
                Task child{pg, depth + 1};
                if (edge)
                    child.pg.set_edge(u, v);
                else
                    child.pg.set_non_edge(u, v);
                children.push_back(std::move(child));
            }
        }
        pg.undo_to(mark);
        return children;
    }

    void run(PartialGraph& pg, std::size_t depth)
    {
        ++nodes_;
        max_depth_ = std::max(max_depth_, depth);
        const std::size_t mark = pg.trail_size();
        if (settle(pg)) {
            const auto [u, v] = first_undecided(pg);
            for (bool edge : {true, false}) {
                const std::size_t branch = pg.trail_size();
                if (edge)
                    pg.set_edge(u, v);
                else
                    pg.set_non_edge(u, v);
                run(pg, depth + 1);
                pg.undo_to(branch);
            }
        }
        pg.undo_to(mark);
    }

    void merge(const Searcher& other)
    {
        nodes_ += other.nodes_;
        max_depth_ = std::max(max_depth_, other.max_depth_);
        solutions_.insert(other.solutions_.begin(), other.solutions_.end());
    }

    std::size_t nodes() const { return nodes_; }
    std::size_t max_depth() const { return max_depth_; }
    const std::set<std::string>& solutions() const { return solutions_; }

private:
    // Propagates and prunes. Returns true when the node needs branching;
    // completed graphs are recorded here.
    bool settle(PartialGraph& pg)
    {
        if (!propagate(pg, p_).consistent)
            return false;
        if (!seeded_ && breaks_row_order(pg))
            return false;
        if (!pg.complete())
            return true;
        const Graph g = pg.to_graph();
        if (!is_strongly_regular(g, p_).is_srg)
            throw std::logic_error("propagation accepted a graph that is not strongly regular");
        solutions_.insert(canonical_form(g));
        return false;
    }

    SrgParams p_;
    bool seeded_;
    std::size_t nodes_ = 0;
    std::size_t max_depth_ = 0;
    std::set<std::string> solutions_;
};

} // namespace

std::optional<PartialGraph> seeded_root(const SrgParams& p)
{
    const int n = static_cast<int>(p.n);
    const int k = static_cast<int>(p.k);
    const int lambda = static_cast<int>(p.lambda);
    PartialGraph pg(n);
    if (k == 0 || n < 2)
        return pg;

    for (Vertex v = 1; v < n; ++v) {
        if (v <= k)
            pg.set_edge(0, v);
        else
            pg.set_non_edge(0, v);
    }

    // vertex 1: lambda neighbors inside N(0), the rest in the first block
    // outside N[0]
    const int outside1 = k - 1 - lambda;
    const int block1_end = k + outside1; // inclusive
    if (block1_end > n - 1)
        return std::nullopt;
    for (Vertex v = 2; v < n; ++v) {
        const bool edge = (v <= lambda + 1) || (v > k && v <= block1_end);
        if (edge)
            pg.set_edge(1, v);
        else
            pg.set_non_edge(1, v);
    }

    if (lambda == 1 && k >= 2) {
        // anchor triangle {0,1,2}: N(2) avoids N(0) and N(1) apart from the
        // triangle, and takes the next block
        const int block2_end = block1_end + (k - 2);
        if (block2_end > n - 1)
            return std::nullopt;
        for (Vertex v = 3; v < n; ++v) {
            const bool edge = v > block1_end && v <= block2_end;
            if (edge)
                pg.set_edge(2, v);
            else
                pg.set_non_edge(2, v);
        }
    }
    return pg;
}

SearchOutcome exhaustive_search(const SrgParams& p, const SearchOptions& options)
{
    if (p.n > kSearchGuard)
        throw OutOfScopeError("n = " + std::to_string(p.n) + " exceeds the search guard n <= " +
                              std::to_string(kSearchGuard));
    if (!in_range(p))
        throw InputError("parameters " + to_string(p) + " are out of range");
    if (!check_identity(p))
        throw InputError("parameters " + to_string(p) + " violate k(k-lambda-1) = (n-k-1)mu");

    const auto start = std::chrono::steady_clock::now();
    SearchOutcome outcome;
    outcome.params = p;

    std::optional<PartialGraph> root = options.seeded ? seeded_root(p) : PartialGraph(static_cast<int>(p.n));
    Searcher main(p, options.seeded);
    if (root) {
        // Breadth-first split into a fixed-size frontier so the node count
        // does not depend on the worker count.
        std::deque<Task> frontier;
        frontier.push_back(Task{std::move(*root), 0});
        while (!frontier.empty() && frontier.size() < kFrontierTarget) {
            Task task = std::move(frontier.front());
            frontier.pop_front();
            for (auto& child : main.expand(task.pg, task.depth))
                frontier.push_back(std::move(child));
        }

        const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(options.jobs, 1)), 1,
                                                            std::max<std::size_t>(frontier.size(), 1));
        std::vector<Searcher> locals(workers, Searcher(p, options.seeded));
        std::atomic<std::size_t> next{0};
        const auto work = [&](Searcher& local) {
            for (std::size_t i = next++; i < frontier.size(); i = next++)
                local.run(frontier[i].pg, frontier[i].depth);
        };
        if (workers == 1) {
            work(locals[0]);
        } else {
            std::vector<std::thread> pool;
            for (auto& local : locals)
                pool.emplace_back(work, std::ref(local));
            for (auto& t : pool)
                t.join();
        }
        for (const auto& local : locals)
            main.merge(local);
    } else {
        main = Searcher(p, options.seeded);
    }

    outcome.solutions.assign(main.solutions().begin(), main.solutions().end());
    outcome.nodes_explored = main.nodes();
    outcome.max_depth = main.max_depth();
    outcome.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

nlohmann::json to_json(const SearchOutcome& outcome)
{
    return {{"params", to_json(outcome.params)},
            {"solutions", outcome.solutions},
            {"nodes_explored", outcome.nodes_explored},
            {"max_depth", outcome.max_depth},
            {"wall_time_ms", outcome.wall_time_ms}};
}

} // namespace srg
