// srg-lab: feasibility tables, srg verification, Paley graphs, the
// srg(19,6,1,2) nonexistence run and the exhaustive search oracle.
//
// Exit codes: 0 ok, 1 semantic failure, 2 usage or I/O error.

#include "srg/error.hpp"
#include "srg/graph.hpp"
#include "srg/graph6.hpp"
#include "srg/oracle.hpp"
#include "srg/paley.hpp"
#include "srg/params.hpp"
#include "srg/proof.hpp"
#include "srg/trace_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using srg::SrgParams;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

bool use_color()
{
    const char* env = std::getenv("SRG_LAB_COLOR");
    const std::string mode = env ? env : "auto";
    if (mode == "always")
        return true;
    if (mode == "never")
        return false;
    if (mode != "auto")
        std::cerr << "srg-lab: ignoring SRG_LAB_COLOR=" << mode << " (expected auto, always or never)\n";
    return isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
}

std::string verdict(bool pass)
{
    static const bool color = use_color();
    const char* word = pass ? "PASS" : "FAIL";
    if (!color)
        return word;
    return std::string(pass ? "\033[32m" : "\033[31m") + word + "\033[0m";
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

struct ParamFlags {
    std::int64_t n = 0, k = 0, lambda = 0, mu = 0;

    void add_to(CLI::App* app)
    {
        app->add_option("--n", n, "number of vertices")->required();
        app->add_option("--k", k, "valency")->required();
        app->add_option("--lambda", lambda, "common neighbours of adjacent pairs")->required();
        app->add_option("--mu", mu, "common neighbours of non-adjacent pairs")->required();
    }
    SrgParams params() const { return {n, k, lambda, mu}; }
};

// ---- feasible ----

int run_feasible(std::int64_t lambda, std::int64_t mu, std::int64_t kmax, bool as_json)
{
    const auto rows = srg::enumerate_family(lambda, mu, kmax);
    if (as_json) {
        emit(srg::to_json(rows));
        return kOk;
    }
    std::size_t passing = 0;
    std::cout << "k\tn\tintegrality\treason\n";
    for (const auto& row : rows) {
        passing += row.passes_integrality ? 1 : 0;
        std::cout << row.params.k << '\t' << row.params.n << '\t' << verdict(row.passes_integrality) << '\t'
                  << srg::to_string(row.reason) << '\n';
    }
    std::cout << rows.size() << " parameter sets, " << passing << " pass\n";
    return kOk;
}

// ---- check ----

struct CheckLine {
    std::size_t line = 0;
    std::string text;
    srg::Graph graph;
};

std::string read_all(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json check_one(const CheckLine& item, const SrgParams& p)
{
    json r = {{"line", item.line}, {"graph6", item.text}};
    const auto fail = [&](const std::string& reason, std::string detail, json violation = nullptr) {
        r["pass"] = false;
        r["reason"] = reason;
        r["detail"] = std::move(detail);
        if (!violation.is_null())
            r["violation"] = std::move(violation);
        return r;
    };

    if (!srg::check_identity(p)) {
        std::ostringstream os;
        os << "k(k-lambda-1) = " << p.k * (p.k - p.lambda - 1) << " but (n-k-1)mu = " << (p.n - p.k - 1) * p.mu;
        return fail("identity_violation", os.str());
    }
    if (item.graph.order() != p.n)
        return fail("order_mismatch", "graph has " + std::to_string(item.graph.order()) + " vertices, expected " +
                                          std::to_string(p.n));

    const srg::SrgReport report = srg::is_strongly_regular(item.graph, p);
    if (report.is_srg) {
        r["pass"] = true;
        r["reason"] = "ok";
        return r;
    }
    if (const auto& d = report.degree_violation) {
        return fail("degree_violation",
                    "vertex " + std::to_string(d->v) + " has degree " + std::to_string(d->observed_degree),
                    {{"vertex", d->v}, {"observed_degree", d->observed_degree}, {"expected", p.k}});
    }
    const auto& v = *report.violating_pair;
    std::ostringstream os;
    os << "vertices " << v.u << ", " << v.v << " (" << (v.adjacent ? "adjacent" : "non-adjacent") << ") have "
       << v.observed_common << " common neighbours, expected " << v.expected;
    return fail(v.adjacent ? "lambda_violation" : "mu_violation", os.str(),
                {{"u", v.u},
                 {"v", v.v},
                 {"adjacent", v.adjacent},
                 {"observed_common", v.observed_common},
                 {"expected", v.expected}});
}

int run_check(const std::string& path, const SrgParams& p, bool as_json)
{
    if (!srg::in_range(p)) {
        std::cerr << "srg-lab check: parameters " << srg::to_string(p) << " are out of range\n";
        return kUsage;
    }

    std::string content;
    if (path.empty() || path == "-") {
        content = read_all(std::cin);
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cerr << "srg-lab check: cannot open " << path << '\n';
            return kUsage;
        }
        content = read_all(in);
    }

    std::vector<CheckLine> items;
    std::size_t start = 0;
    for (std::size_t line = 1; start < content.size(); ++line) {
        std::size_t end = content.find('\n', start);
        if (end == std::string::npos)
            end = content.size();
        const std::string text = content.substr(start, end - start);
        try {
            items.push_back({line, text, srg::parse_graph6(text)});
        } catch (const srg::ParseError& e) {
            std::cerr << "srg-lab check: line " << line << ", byte " << e.offset() << ": " << e.what() << '\n';
            return kUsage;
        }
        start = end + 1;
    }
    if (items.empty())
        std::cerr << "srg-lab check: warning: no graphs in input\n";

    json results = json::array();
    std::size_t passed = 0;
    for (const auto& item : items) {
        results.push_back(check_one(item, p));
        passed += results.back()["pass"].get<bool>() ? 1 : 0;
    }

    if (as_json) {
        emit({{"params", srg::to_json(p)},
              {"graphs_checked", items.size()},
              {"passed", passed},
              {"results", results}});
    } else {
        for (const auto& r : results) {
            std::cout << "line " << r["line"].get<std::size_t>() << ": " << verdict(r["pass"].get<bool>()) << " srg"
                      << srg::to_string(p);
            if (!r["pass"].get<bool>())
                std::cout << ' ' << r["reason"].get<std::string>() << ": " << r["detail"].get<std::string>();
            std::cout << '\n';
        }
        std::cout << items.size() << " graphs checked, " << passed << " pass\n";
    }
    return passed == items.size() ? kOk : kFailed;
}

// ---- gen ----

int run_gen_paley(int q, bool as_json)
{
    const std::string g6 = srg::to_graph6(srg::paley_graph(q));
    if (as_json)
        emit({{"kind", "paley"}, {"q", q}, {"n", q}, {"graph6", g6}});
    else
        std::cout << g6 << '\n';
    return kOk;
}

// ---- prove19 ----

int run_prove19(const std::string& trace_path, bool as_json)
{
    const srg::ProofTrace trace = srg::prove_nonexistence_19();
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        out << srg::to_json(trace).dump(1) << '\n';
        if (!out) {
            std::cerr << "srg-lab prove19: cannot write " << trace_path << '\n';
            return kUsage;
        }
    }
    const bool refuted = trace.stats.surviving_completions == 0;

    if (as_json) {
        json cases = json::array();
        for (const auto& c : trace.cases)
            cases.push_back({{"structure", c.structure.lengths},
                             {"label", c.structure.label()},
                             {"nodes", c.nodes},
                             {"leaves", c.leaves.size()},
                             {"surviving_completions", c.surviving_completions}});
        emit({{"params", srg::to_json(trace.params)},
              {"nonexistence", refuted},
              {"cases", cases},
              {"nodes_explored", trace.stats.nodes_explored},
              {"leaves", trace.stats.leaves},
              {"surviving_completions", trace.stats.surviving_completions},
              {"certificates", trace.stats.certificates},
              {"trace", trace_path.empty() ? json(nullptr) : json(trace_path)}});
        return refuted ? kOk : kFailed;
    }

    std::size_t holding = 0;
    for (const auto& lemma : trace.lemmas)
        holding += lemma.holds ? 1 : 0;
    std::cout << "srg" << srg::to_string(trace.params) << '\n';
    std::cout << "lemmas: " << holding << "/" << trace.lemmas.size() << " hold\n";
    for (const auto& ex : trace.excluded)
        std::cout << "excluded " << ex.structure.label() << ": " << ex.reason << '\n';
    std::cout << trace.cases.size() << " cases\n";
    for (std::size_t i = 0; i < trace.cases.size(); ++i) {
        const auto& c = trace.cases[i];
        std::cout << "  case " << i + 1 << " " << c.structure.label() << ": " << c.nodes << " nodes, "
                  << c.leaves.size() << " leaves, " << c.surviving_completions << " surviving\n";
    }
    std::cout << "certificates:\n";
    for (const auto& [kind, count] : trace.stats.certificates)
        std::cout << "  " << kind << ": " << count << '\n';
    std::map<std::string, std::size_t> blocking;
    for (const auto& c : trace.cases)
        for (const auto& leaf : c.leaves)
            for (const auto& b : leaf.certificate.blocked)
                ++blocking[std::string(srg::to_string(b.reason.kind))];
    if (!blocking.empty()) {
        std::cout << "apex blockers inside no_apex_available:\n";
        for (const auto& [kind, count] : blocking)
            std::cout << "  " << kind << ": " << count << '\n';
    }
    std::cout << "nodes explored: " << trace.stats.nodes_explored << ", leaves: " << trace.stats.leaves << '\n';
    std::cout << "surviving completions: " << trace.stats.surviving_completions << ' ' << verdict(refuted) << '\n';
    if (!trace_path.empty())
        std::cout << "trace written to " << trace_path << '\n';
    return refuted ? kOk : kFailed;
}

// ---- replay ----

int run_replay(const std::string& path, bool as_json)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "srg-lab replay: cannot open " << path << '\n';
        return kUsage;
    }
    srg::ProofTrace trace;
    try {
        trace = srg::trace_from_json(json::parse(in));
    } catch (const json::exception& e) {
        std::cerr << "srg-lab replay: malformed trace: " << e.what() << '\n';
        return kUsage;
    }
    const srg::ReplayReport report = srg::replay(trace);

    const auto leaf_name = [](const srg::ReplayFailure& f) {
        return f.leaf_index == SIZE_MAX ? std::string("case-level") : "leaf " + std::to_string(f.leaf_index);
    };
    if (as_json) {
        json failures = json::array();
        for (const auto& f : report.failures) {
            failures.push_back({{"case", f.case_index},
                                {"label", f.case_label},
                                {"leaf", f.leaf_index == SIZE_MAX ? json(nullptr) : json(f.leaf_index)},
                                {"message", f.message}});
        }
        emit({{"ok", report.ok()}, {"leaves_checked", report.leaves_checked}, {"failures", failures}});
    } else {
        for (const auto& f : report.failures)
            std::cout << verdict(false) << " case " << f.case_index << " (" << f.case_label << ") " << leaf_name(f)
                      << ": " << f.message << '\n';
        std::cout << report.leaves_checked << " leaves checked, " << report.failures.size() << " failures "
                  << verdict(report.ok()) << '\n';
    }
    return report.ok() ? kOk : kFailed;
}

// ---- search ----

int run_search(const SrgParams& p, bool seeded, int jobs, bool as_json)
{
    const srg::SearchOutcome outcome = srg::exhaustive_search(p, {seeded, jobs});
    if (as_json) {
        emit(srg::to_json(outcome));
        return kOk;
    }
    std::cout << "srg" << srg::to_string(p) << ": " << outcome.solutions.size() << " isomorphism classes\n";
    for (const auto& g6 : outcome.solutions)
        std::cout << "  " << g6 << '\n';
    std::cout << "nodes explored: " << outcome.nodes_explored << ", max depth: " << outcome.max_depth
              << ", wall time: " << outcome.wall_time_ms << " ms\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"srg-lab: strongly regular graph toolkit"};
    app.require_subcommand(1);

    const auto add_format = [](CLI::App* sub, std::string& format) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::int64_t lambda = 0, mu = 0, kmax = 0;
    std::string feasible_format = "text";
    auto* feasible = app.add_subcommand("feasible", "integrality test over the lambda, mu family");
    feasible->add_option("--lambda", lambda)->required()->check(CLI::NonNegativeNumber);
    feasible->add_option("--mu", mu)->required()->check(CLI::NonNegativeNumber);
    feasible->add_option("--kmax", kmax)->required()->check(CLI::Range(std::int64_t{0}, std::int64_t{1000000}));
    add_format(feasible, feasible_format);

    ParamFlags check_params;
    std::string check_path, check_format = "text";
    auto* check = app.add_subcommand("check", "verify graph6 lines against srg parameters");
    check->add_option("path", check_path, "graph6 file, one graph per line (default: standard input)");
    check_params.add_to(check);
    add_format(check, check_format);

    int q = 0;
    std::string gen_format = "text";
    auto* gen = app.add_subcommand("gen", "construct a graph");
    gen->require_subcommand(1);
    auto* gen_paley = gen->add_subcommand("paley", "Paley graph on GF(q)");
    gen_paley->add_option("--q", q, "field order")->required();
    add_format(gen_paley, gen_format);

    std::string trace_path, prove_format = "text";
    auto* prove19 = app.add_subcommand("prove19", "mechanized nonexistence proof for srg(19,6,1,2)");
    prove19->add_option("--trace", trace_path, "write the proof trace JSON here");
    add_format(prove19, prove_format);

    std::string replay_path, replay_format = "text";
    auto* replay = app.add_subcommand("replay", "re-validate a proof trace");
    replay->add_option("trace", replay_path, "trace JSON written by prove19")->required();
    add_format(replay, replay_format);

    ParamFlags search_params;
    bool seeded = false;
    int jobs = 1;
    std::string search_format = "json";
    auto* search = app.add_subcommand("search", "exhaustive search for srg(n,k,lambda,mu), n <= 19");
    search_params.add_to(search);
    search->add_flag("--seeded", seeded, "pre-commit the anchor labeling");
    search->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_format(search, search_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (feasible->parsed())
            return run_feasible(lambda, mu, kmax, feasible_format == "json");
        if (check->parsed())
            return run_check(check_path, check_params.params(), check_format == "json");
        if (gen_paley->parsed())
            return run_gen_paley(q, gen_format == "json");
        if (prove19->parsed())
            return run_prove19(trace_path, prove_format == "json");
        if (replay->parsed())
            return run_replay(replay_path, replay_format == "json");
        if (search->parsed())
            return run_search(search_params.params(), seeded, jobs, search_format == "json");
    } catch (const srg::OutOfScopeError& e) {
        std::cerr << "srg-lab: " << e.what() << '\n';
        return kUsage;
    } catch (const srg::InputError& e) {
        std::cerr << "srg-lab: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "srg-lab: internal error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
