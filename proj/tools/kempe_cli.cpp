// Command-line front end: Kempe class reports, move sequences between
// L-colorings, lemma/claim checks, and theorem/conjecture sweeps.
//
// Exit codes: 0 completed, 1 usage or input error, 2 resource cap hit.
// Conjecture findings never change the exit code.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kempe/errors.hpp"
#include "kempe/graph6.hpp"
#include "kempe/json_io.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
    std::string graph_arg;
    std::string lists_path;
    std::size_t node_cap = kempe::kDefaultNodeCap;
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_classes(const CommonOpts& opts, const std::string& dot_path, bool witnesses) {
    kempe::Graph g = kempe::load_graph(opts.graph_arg);
    kempe::ListAssignment L = kempe::load_lists(opts.lists_path);
    kempe::ReconfigGraph rg = kempe::build_reconfig_graph(g, L, opts.node_cap);
    kempe::KempeClassReport report = kempe::kempe_classes(rg);
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw std::invalid_argument("cannot write DOT file: " + dot_path);
        out << kempe::to_dot(rg);
    }
    json j = kempe::class_report_to_json(report, witnesses);
    j["nodeCount"] = rg.nodes.size();
    j["edgeCount"] = rg.edges.size();
    print_json(j);
    return 0;
}

int run_path(const CommonOpts& opts, const std::string& from_path, const std::string& to_path) {
    kempe::Graph g = kempe::load_graph(opts.graph_arg);
    kempe::ListAssignment L = kempe::load_lists(opts.lists_path);
    kempe::Coloring from = kempe::load_coloring(from_path);
    kempe::Coloring to = kempe::load_coloring(to_path);
    kempe::ReconfigGraph rg = kempe::build_reconfig_graph(g, L, opts.node_cap);
    auto path = kempe::find_path(rg, from, to);
    if (!path) {
        print_json(json("unreachable"));
        return 0;
    }
    json moves = json::array();
    for (const auto& m : *path) moves.push_back(kempe::move_to_json(m));
    print_json(json{{"length", path->size()}, {"moves", moves}});
    return 0;
}

int run_check(const CommonOpts& opts, int lemma, int claim, std::optional<int> x,
              std::optional<int> y, std::optional<int> a, std::optional<int> b,
              std::optional<int> c, const std::string& coloring_path) {
    kempe::Graph g = kempe::load_graph(opts.graph_arg);
    kempe::ListAssignment L = kempe::load_lists(opts.lists_path);

    auto need = [](std::optional<int> v, const char* name) {
        if (!v) throw CLI::ValidationError(std::string("check: missing --") + name);
        return *v;
    };
    auto need_coloring = [&]() {
        if (coloring_path.empty()) throw CLI::ValidationError("check: missing --coloring");
        return kempe::load_coloring(coloring_path);
    };

    kempe::Verdict verdict;
    if (lemma == 3)
        verdict = kempe::check_lemma3(g, L, opts.node_cap);
    else if (lemma == 4)
        verdict = kempe::check_lemma4(g, L, opts.node_cap);
    else if (lemma == 5)
        verdict = kempe::check_lemma5(g, L, need(x, "x"), need(a, "a"), opts.node_cap);
    else if (lemma == 6)
        verdict = kempe::check_lemma6(g, L, need(x, "x"), need(y, "y"), need(a, "a"),
                                      need(b, "b"), opts.node_cap);
    else if (claim == 1)
        verdict = kempe::check_claim1(g, L, need_coloring(), need(x, "x"), need(c, "c"),
                                      opts.node_cap);
    else if (claim == 2)
        verdict = kempe::check_claim2(g, L, need_coloring(), need(x, "x"), need(a, "a"),
                                      opts.node_cap);
    else if (claim == 3)
        verdict = kempe::check_claim3(g, L, need(x, "x"), need(y, "y"), need(c, "c"),
                                      opts.node_cap);
    else
        throw CLI::ValidationError("check: pass --lemma {3|4|5|6} or --claim {1|2|3}");

    print_json(kempe::verdict_to_json(verdict));
    return 0;
}

int run_verify(const std::string& graph_arg, int theorem, int palette_cap,
               std::size_t samples, std::uint64_t seed, std::size_t node_cap, bool timing) {
    kempe::Graph g = kempe::load_graph(graph_arg);
    kempe::VerificationReport report;
    if (theorem == 1) {
        report = kempe::verify_theorem1_boundary(g, node_cap);
    } else if (theorem == 2) {
        kempe::AssignmentGenerator gen;
        gen.palette_cap = palette_cap > 0 ? palette_cap : g.max_degree() + 1;
        if (samples > 0) {
            gen.mode = kempe::GenMode::random;
            gen.samples = samples;
            gen.seed = seed;
        }
        report = kempe::verify_theorem2(g, gen, node_cap);
    } else {
        throw CLI::ValidationError("verify: pass --theorem 1 or --theorem 2");
    }
    print_json(kempe::verification_report_to_json(report, timing));
    return 0;
}

int run_conjecture(const std::string& graph_arg, int palette_cap, std::size_t samples,
                   std::uint64_t seed, std::size_t node_cap, bool timing) {
    kempe::Graph g = kempe::load_graph(graph_arg);
    kempe::AssignmentGenerator gen;
    gen.palette_cap = palette_cap > 0 ? palette_cap : g.max_degree() + 1;
    if (samples > 0) {
        gen.mode = kempe::GenMode::random;
        gen.samples = samples;
        gen.seed = seed;
    }
    kempe::VerificationReport report = kempe::search_conjecture(g, gen, node_cap);
    // findings are first-class report content, not a failure
    print_json(kempe::verification_report_to_json(report, timing));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kempe-change reconfiguration toolkit for list colorings"};
    app.set_version_flag("--version", kempe::kToolVersion);
    app.require_subcommand(1);

    CommonOpts opts;
    std::string dot_path, from_path, to_path, coloring_path;
    bool witnesses = false, timing = false;
    int lemma = 0, claim = 0, theorem = 0, palette_cap = 0;
    std::optional<int> x, y, a, b, c;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool with_lists) {
        cmd->add_option("-g,--graph", opts.graph_arg, "graph6 string/file or edge-list JSON file")
            ->required();
        if (with_lists)
            cmd->add_option("-l,--lists", opts.lists_path, "list-assignment JSON file")->required();
        cmd->add_option("--node-cap", opts.node_cap, "abort if the coloring count exceeds this");
    };

    CLI::App* classes = app.add_subcommand("classes", "Kempe class report for (graph, lists)");
    add_common(classes, true);
    classes->add_option("--dot", dot_path, "write the reconfiguration graph as DOT");
    classes->add_flag("--witnesses", witnesses, "include one witness coloring per class");

    CLI::App* path = app.add_subcommand("path", "shortest Kempe move sequence between colorings");
    add_common(path, true);
    path->add_option("--from", from_path, "start coloring JSON file")->required();
    path->add_option("--to", to_path, "target coloring JSON file")->required();

    CLI::App* check = app.add_subcommand("check", "verify one lemma or claim instance");
    add_common(check, true);
    check->add_option("--lemma", lemma, "lemma number: 3, 4, 5, or 6");
    check->add_option("--claim", claim, "claim number: 1, 2, or 3");
    check->add_option("--x", x, "vertex x");
    check->add_option("--y", y, "vertex y");
    check->add_option("--a", a, "color a");
    check->add_option("--b", b, "color b");
    check->add_option("--c", c, "color c");
    check->add_option("--coloring", coloring_path, "coloring JSON file (claims 1 and 2)");

    CLI::App* verify = app.add_subcommand("verify", "theorem verification sweep");
    verify->add_option("-g,--graph", opts.graph_arg, "graph6 string/file or edge-list JSON file")
        ->required();
    verify->add_option("--theorem", theorem, "theorem number: 1 or 2")->required();
    verify->add_option("--palette-cap", palette_cap, "max distinct colors (default Delta+1)");
    verify->add_option("--samples", samples, "random mode: number of sampled assignments");
    verify->add_option("--seed", seed, "random mode seed");
    verify->add_option("--node-cap", opts.node_cap, "abort if the coloring count exceeds this");
    verify->add_flag("--timing", timing, "include wall-clock seconds in the report");

    CLI::App* conjecture = app.add_subcommand("conjecture", "counterexample sweep on a 3-connected host");
    conjecture->add_option("-g,--graph", opts.graph_arg, "graph6 string/file or edge-list JSON file")
        ->required();
    conjecture->add_option("--palette-cap", palette_cap, "max distinct colors (default Delta+1)");
    conjecture->add_option("--samples", samples, "random mode: number of sampled assignments");
    conjecture->add_option("--seed", seed, "random mode seed");
    conjecture->add_option("--node-cap", opts.node_cap, "abort if the coloring count exceeds this");
    conjecture->add_flag("--timing", timing, "include wall-clock seconds in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classes->parsed()) return run_classes(opts, dot_path, witnesses);
        if (path->parsed()) return run_path(opts, from_path, to_path);
        if (check->parsed())
            return run_check(opts, lemma, claim, x, y, a, b, c, coloring_path);
        if (verify->parsed())
            return run_verify(opts.graph_arg, theorem, palette_cap, samples, seed, opts.node_cap,
                              timing);
        if (conjecture->parsed())
            return run_conjecture(opts.graph_arg, palette_cap, samples, seed, opts.node_cap,
                                  timing);
    } catch (const kempe::ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
