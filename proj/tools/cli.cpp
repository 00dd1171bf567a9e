#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pathcolor/coloring.hpp"
#include "pathcolor/errors.hpp"
#include "pathcolor/experiments.hpp"
#include "pathcolor/games.hpp"
#include "pathcolor/generators.hpp"
#include "pathcolor/io.hpp"
#include "pathcolor/reduction.hpp"
#include "pathcolor/solvers.hpp"

namespace pathcolor::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_for(Outcome o) {
    switch (o) {
        case Outcome::valid: return kExitValid;
        case Outcome::invalid: return kExitInvalid;
        case Outcome::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

std::string join(const std::vector<Vertex>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

// --- gen ---------------------------------------------------------------------

struct GenArgs {
    std::string family;
    long long param = 0;
    std::string output;
    std::string cf_output;
    std::string um_output;
};

int run_gen(const GenArgs& a, std::ostream& out) {
    if (a.param < 0 || a.param > 1'000'000) throw UsageError("--param out of range");
    const int p = static_cast<int>(a.param);
    Graph g;
    std::optional<Coloring> cf, um;
    std::map<std::string, std::string> meta{{"family", a.family}, {"param", std::to_string(p)}};

    if (a.family == "path") {
        g = path_graph(p);
        if (p >= 1) um = um_coloring_path(p), cf = um;
    } else if (a.family == "grid") {
        g = grid_graph(p).first;
    } else if (a.family == "clique") {
        g = complete_graph(p);
    } else if (a.family == "btree") {
        g = complete_binary_tree(p);
    } else if (a.family == "cycle") {
        g = cycle_graph(p);
    } else if (a.family == "star") {
        g = star_graph(p);
    } else if (a.family == "hedgehog") {
        auto [h, layout] = hedgehog(p);
        g = std::move(h);
        cf = cf_coloring_hedgehog(layout);
        um = um_coloring_hedgehog(layout);
    } else {
        throw UsageError("unknown family '" + a.family + "'");
    }

    const std::string text = serialize_graph(g);
    if (a.output.empty() || a.output == "-")
        out << text;
    else
        write_file(a.output, text);

    auto emit = [&](const std::string& path, const std::optional<Coloring>& c, const std::string& method) {
        if (path.empty()) return;
        if (!c) throw UsageError("no closed-form coloring is known for family '" + a.family + "'");
        auto m = meta;
        m["method"] = method;
        write_file(path, serialize_coloring(ColoringFile{*c, m}));
    };
    emit(a.cf_output, cf, "closed-form conflict-free");
    emit(a.um_output, um, "closed-form unique-maximum");
    return kExitValid;
}

// --- solve -------------------------------------------------------------------

struct SolveArgs {
    std::string what;
    std::string graph;
    std::uint64_t budget = 50'000'000;
    std::string output;
};

int run_solve(const SolveArgs& a, std::ostream& out) {
    const Graph g = load_graph(a.graph);
    SolverLimits limits;
    limits.cf_budget = a.budget;
    std::optional<Coloring> cert;
    std::string method;
    int code = kExitValid;

    if (a.what == "chi") {
        auto r = chi_exact(g, limits);
        out << r.k << '\n';
        cert = std::move(r.certificate);
        method = "chi branch and bound";
    } else if (a.what == "um") {
        auto r = chi_um_exact(g, limits);
        out << r.k << '\n';
        cert = std::move(r.certificate);
        method = "chi_um component game";
    } else if (a.what == "cf") {
        auto r = chi_cf_exact(g, limits);
        method = "chi_cf iterative deepening";
        if (r.solved()) {
            out << r.k << '\n';
            cert = std::move(r.certificate);
        } else {
            out << "inconclusive [" << r.lower << ", " << r.upper << "] after " << r.paths_examined
                << " partial paths\n";
            code = kExitInconclusive;
        }
    } else {
        throw UsageError("solve expects chi, um or cf");
    }

    if (cert && g.n() > 0) {
        const std::string path = a.output.empty() ? a.graph + "." + a.what + ".json" : a.output;
        write_file(path, serialize_coloring(ColoringFile{*cert, {{"method", method}}}));
        out << "certificate: " << path << '\n';
    }
    return code;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string what;
    std::string graph;
    std::string coloring;
    std::uint64_t budget = kDefaultPathBudget;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
    ColoringKind kind;
    if (a.what == "proper")
        kind = ColoringKind::proper;
    else if (a.what == "um")
        kind = ColoringKind::unique_maximum;
    else if (a.what == "cf")
        kind = ColoringKind::conflict_free;
    else
        throw UsageError("verify expects proper, um or cf");

    const Graph g = load_graph(a.graph);
    const ColoringFile c = parse_coloring(read_file(a.coloring));
    if (c.coloring.size() != g.n())
        throw UsageError("coloring has " + std::to_string(c.coloring.size()) + " entries, graph has " +
                         std::to_string(g.n()) + " vertices");

    const Verdict v = verify(g, c.coloring, kind, a.budget);
    out << to_string(v.outcome) << '\n';
    if (v.witness) {
        out << "witness: " << join(v.witness->vertices()) << '\n';
        out << "colors:";
        for (Vertex x : v.witness->vertices()) out << ' ' << c.coloring[x];
        out << '\n';
    }
    if (kind == ColoringKind::conflict_free) out << "paths examined: " << v.paths_examined << '\n';
    return exit_for(v.outcome);
}

// --- game --------------------------------------------------------------------

struct GameArgs {
    std::string what;
    std::string graph;
    std::string kind = "component";
    std::string max = "optimal";
    std::string min = "optimal";
    std::uint64_t seed = 1;
    std::uint64_t budget = 50'000'000;
};

int run_game(const GameArgs& a, std::ostream& out) {
    const Graph g = load_graph(a.graph);
    if (a.what == "vcs") {
        out << vcs_value(g) << '\n';
        return kExitValid;
    }
    if (a.what == "vp") {
        const auto r = vp_value(g, a.budget);
        if (r.solved) {
            out << r.value << '\n';
            return kExitValid;
        }
        out << "inconclusive [" << r.lower << ", " << r.upper << "]\n";
        return kExitInconclusive;
    }
    if (a.what != "play") throw UsageError("game expects vcs, vp or play");

    GameKind kind;
    if (a.kind == "component")
        kind = GameKind::component;
    else if (a.kind == "path")
        kind = GameKind::path;
    else
        throw UsageError("--kind must be component or path");
    std::unique_ptr<Strategy> maximizer, minimizer;
    try {
        maximizer = make_strategy(a.max, Role::maximizer, kind, g, a.seed);
        minimizer = make_strategy(a.min, Role::minimizer, kind, g, a.seed + 1);
    } catch (const GraphError& e) {
        throw UsageError(e.what());
    }
    const GameTranscript t = play_game(g, kind, *maximizer, *minimizer);
    out << serialize_transcript(t);
    out << "length " << t.length() << '\n';
    return kExitValid;
}

// --- reduce ------------------------------------------------------------------

int run_reduce(const std::string& graph, const std::string& prefix, std::ostream& out) {
    const Graph g = load_graph(graph);
    const ReductionArtifact r = build_reduction(g);

    std::map<std::string, std::string> meta{{"method", "hamiltonian-path reduction"}};
    auto list = [](const std::vector<Vertex>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
        return s;
    };
    meta["up"] = list(r.up);
    meta["down"] = list(r.down);
    std::string connectors;
    for (const auto& [ij, v] : r.connector)
        connectors += (connectors.empty() ? "" : ";") + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                      ":" + std::to_string(v);
    meta["connectors"] = connectors;
    for (std::size_t i = 0; i < r.connecting_paths.size(); ++i)
        meta["path_" + std::to_string(i)] = list(r.connecting_paths[i]);

    write_file(prefix + ".graph", serialize_graph(r.gstar));
    write_file(prefix + ".coloring.json", serialize_coloring(ColoringFile{r.coloring, meta}));
    out << "G*: " << r.gstar.n() << " vertices, " << r.gstar.edge_count() << " edges, " << r.coloring.k()
        << " colors\n";
    out << "wrote " << prefix << ".graph and " << prefix << ".coloring.json\n";
    return kExitValid;
}

// --- bounds ------------------------------------------------------------------

int run_bounds(const std::string& family, int m, std::ostream& out) {
    if (family != "grid") throw UsageError("bounds supports only 'grid'");
    out << "id\tstatement\tvalue\tnote\n";
    for (const auto& b : grid_bounds(m)) {
        out << b.id << '\t' << b.statement << '\t';
        if (b.value) {
            std::ostringstream v;
            v << std::fixed << std::setprecision(6) << *b.value;
            out << v.str();
        } else {
            out << "n/a";
        }
        out << '\t' << b.note << '\n';
    }
    return kExitValid;
}

// --- experiment --------------------------------------------------------------

int run_experiment_cmd(const std::string& name, const std::string& level, std::uint64_t seed,
                       const std::string& output, std::ostream& out) {
    ExperimentOptions o;
    o.seed = seed;
    if (level == "desk")
        o.level = ExperimentLevel::desk;
    else if (level == "stretch")
        o.level = ExperimentLevel::stretch;
    else
        throw UsageError("--level must be desk or stretch");
    const auto names = experiment_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw UsageError("unknown experiment '" + name + "'");

    const ExperimentReport rep = run_experiment(name, o);
    const std::string text = render_report(rep);
    if (output.empty() || output == "-")
        out << text;
    else
        write_file(output, text);
    if (rep.any_failed()) return kExitInvalid;
    if (rep.any_inconclusive()) return kExitInconclusive;
    return kExitValid;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unique-maximum and conflict-free colorings with respect to paths"};
    app.name("pathcolor");
    app.require_subcommand(1);
    std::function<int()> action;

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
    gen_cmd->add_option("family", gen.family, "path | grid | clique | btree | hedgehog | cycle | star")->required();
    gen_cmd->add_option("--param,-p", gen.param, "Family parameter (n, m, levels or k)")->required();
    gen_cmd->add_option("-o,--output", gen.output, "Graph file (default: stdout)");
    gen_cmd->add_option("--cf-coloring", gen.cf_output, "Also write the closed-form conflict-free coloring");
    gen_cmd->add_option("--um-coloring", gen.um_output, "Also write the closed-form unique-maximum coloring");
    gen_cmd->callback([&] { action = [&] { return run_gen(gen, out); }; });

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compute chi, chi_um or chi_cf exactly");
    solve_cmd->add_option("what", solve.what, "chi | um | cf")->required();
    solve_cmd->add_option("graph", solve.graph, "Graph file")->required();
    solve_cmd->add_option("--budget", solve.budget, "Partial-path budget for the conflict-free search");
    solve_cmd->add_option("-o,--output", solve.output, "Certificate file (default: GRAPH.<what>.json)");
    solve_cmd->callback([&] { action = [&] { return run_solve(solve, out); }; });

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring; exit 0 valid, 1 invalid, 2 inconclusive");
    verify_cmd->add_option("what", ver.what, "proper | um | cf")->required();
    verify_cmd->add_option("graph", ver.graph, "Graph file")->required();
    verify_cmd->add_option("coloring", ver.coloring, "Coloring file")->required();
    verify_cmd->add_option("--budget", ver.budget, "Partial-path budget for the conflict-free check");
    verify_cmd->callback([&] { action = [&] { return run_verify(ver, out); }; });

    GameArgs game;
    auto* game_cmd = app.add_subcommand("game", "Game values or a played match");
    game_cmd->add_option("what", game.what, "vcs | vp | play")->required();
    game_cmd->add_option("graph", game.graph, "Graph file")->required();
    game_cmd->add_option("--kind", game.kind, "component | path (for play)");
    game_cmd->add_option("--max", game.max, "optimal | longest | random | translated");
    game_cmd->add_option("--min", game.min, "optimal | first | random");
    game_cmd->add_option("--seed", game.seed, "Seed for random strategies");
    game_cmd->add_option("--budget", game.budget, "Path-enumeration budget for vp");
    game_cmd->callback([&] { action = [&] { return run_game(game, out); }; });

    std::string reduce_graph, reduce_prefix;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build the Hamiltonian-path reduction graph and coloring");
    reduce_cmd->add_option("graph", reduce_graph, "Graph file")->required();
    reduce_cmd->add_option("-o,--output", reduce_prefix, "Output prefix")->required();
    reduce_cmd->callback([&] { action = [&] { return run_reduce(reduce_graph, reduce_prefix, out); }; });

    std::string bounds_family;
    int bounds_m = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the grid bound formulas");
    bounds_cmd->add_option("family", bounds_family, "grid")->required();
    bounds_cmd->add_option("--m", bounds_m, "Grid side")->required();
    bounds_cmd->callback([&] { action = [&] { return run_bounds(bounds_family, bounds_m, out); }; });

    std::string exp_name, exp_level = "desk", exp_output;
    std::uint64_t exp_seed = 1;
    auto* exp_cmd = app.add_subcommand("experiment", "Regenerate a claim table");
    exp_cmd->add_option("name", exp_name, "paths | hedgehog | grid | reduction | games")->required();
    exp_cmd->add_option("--level", exp_level, "desk | stretch");
    exp_cmd->add_option("--seed", exp_seed, "Seed for random instances");
    exp_cmd->add_option("-o,--output", exp_output, "Report file (default: stdout)");
    exp_cmd->callback([&] { action = [&] { return run_experiment_cmd(exp_name, exp_level, exp_seed, exp_output, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitValid;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitValid;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const GameRuleError& e) {
        err << "illegal move: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace pathcolor::cli
