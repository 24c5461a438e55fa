#include "reeb_orbit/cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "reeb_orbit/errors.hpp"
#include "reeb_orbit/function_file.hpp"
#include "reeb_orbit/orbit.hpp"
#include "reeb_orbit/reeb.hpp"
#include "reeb_orbit/selftest.hpp"

namespace reeb_orbit {

namespace {

unsigned long long env_seed(unsigned long long fallback) {
    const char* s = std::getenv("REEB_ORBIT_SEED");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    return (end && *end == '\0') ? v : fallback;
}

int env_threads(int fallback) {
    const char* s = std::getenv("REEB_ORBIT_THREADS");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    return (end && *end == '\0' && v >= 1 && v <= 256) ? static_cast<int>(v)
                                                       : fallback;
}

// Retry once with a tiny per-vertex shear when the input asks for it.
CircleFunction build_maybe_perturbed(FunctionFile ff) {
    try {
        return build_from_file(ff);
    } catch (const FlatEdgeError&) {
        if (!ff.auto_perturb) throw;
        for (int j = 0; j < ff.m; ++j)
            for (int i = 0; i < ff.n; ++i)
                ff.perturbation[j][i] += Rat(j * ff.n + i, 1000000000);
        return build_from_file(ff);
    }
}

std::string node_kind(const ReebNode& nd) {
    std::string out;
    auto add = [&](int k, const char* name) {
        if (k == 0) return;
        if (!out.empty()) out += "+";
        out += name;
        if (k > 1) out += "*" + std::to_string(k);
    };
    add(nd.n_max, "max");
    add(nd.n_min, "min");
    add(nd.n_saddle, "saddle");
    return out.empty() ? "marker" : out;
}

std::string dot_graph(const ReebGraph& g, const std::set<int>& bold_edges) {
    std::ostringstream os;
    os << "graph reeb {\n";
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
        os << "  n" << v << " [label=\"v=" << rat_str(g.nodes[v].value) << " "
           << node_kind(g.nodes[v]) << "\"];\n";
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        os << "  n" << g.edges[e].bottom << " -- n" << g.edges[e].top;
        if (bold_edges.count(e)) os << " [style=bold]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

bool write_text(const std::string& path, const std::string& text,
                std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
        err << "cannot write " << path << "\n";
        return false;
    }
    return true;
}

// The graph and cycle behind an analyze report, rebuilt for --dot.
std::string analysis_dot(const CircleFunction& f, const OrbitReport& r,
                         int threads) {
    if (r.branch == Branch::Fibration) return "graph reeb {\n}\n";
    ReebGraph g = reeb_graph(f, threads);
    std::set<int> bold;
    if (r.branch == Branch::CycleCase) {
        DecoratedCycle dc = decorated_cycle(g);
        for (const CycleEntry& e : dc.entries) bold.insert(e.edge);
    }
    return dot_graph(g, bold);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"level-set structure of circle-valued functions on a torus"};
    app.require_subcommand(1);

    std::string file, dot_path, report_path;
    bool auto_perturb = false;
    int threads = env_threads(1);
    bool quick = false;
    unsigned long long seed = env_seed(24301);

    CLI::App* cmd_analyze =
        app.add_subcommand("analyze", "full report for a function file");
    cmd_analyze->add_option("file", file, "function description (json)")
        ->required();
    cmd_analyze->add_option("--dot", dot_path,
                            "also write the level-set graph in dot format");
    cmd_analyze->add_option("--report", report_path,
                            "also write the report to a file");
    cmd_analyze->add_flag("--auto-perturb", auto_perturb,
                          "nudge vertices off level edges and retry once");
    cmd_analyze->add_option("--threads", threads,
                            "worker threads for the band scan");

    CLI::App* cmd_reeb =
        app.add_subcommand("reeb", "level-set graph of a function file");
    cmd_reeb->add_option("file", file, "function description (json)")
        ->required();
    cmd_reeb->add_option("--dot", dot_path,
                         "also write the graph in dot format");
    cmd_reeb->add_flag("--auto-perturb", auto_perturb,
                       "nudge vertices off level edges and retry once");
    cmd_reeb->add_option("--threads", threads,
                         "worker threads for the band scan");

    CLI::App* cmd_class =
        app.add_subcommand("class", "degree pair of a function file");
    cmd_class->add_option("file", file, "function description (json)")
        ->required();

    CLI::App* cmd_selftest =
        app.add_subcommand("selftest", "run the built-in suites");
    cmd_selftest->add_flag("--quick", quick, "smaller case counts");
    cmd_selftest->add_option("--seed", seed, "suite random seed");
    cmd_selftest->add_option("--threads", threads,
                             "worker threads for the band scan");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 3;
    }
    threads = std::max(1, threads);

    try {
        if (cmd_selftest->parsed()) {
            SelfTestOptions o;
            o.seed = seed;
            o.quick = quick;
            o.threads = threads;
            std::vector<SuiteResult> results = run_selftests(o);
            out << selftest_report(o, results);
            return all_passed(results) ? 0 : 1;
        }

        FunctionFile ff = load_function_file(file);
        if (auto_perturb) ff.auto_perturb = true;
        CircleFunction f = build_maybe_perturbed(ff);

        if (cmd_class->parsed()) {
            auto [a, b] = cohomology_class(f);
            out << "(" << a << ", " << b << ")\n";
            return 0;
        }

        if (cmd_reeb->parsed()) {
            try {
                ReebGraph g = reeb_graph(f, threads);
                out << "nodes: " << g.nodes.size() << "\n";
                out << "edges: " << g.edges.size() << "\n";
                out << "first betti: " << first_betti(g) << "\n";
                for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
                    out << "n" << v << ": v=" << rat_str(g.nodes[v].value)
                        << " " << node_kind(g.nodes[v]) << " degree "
                        << g.degree(v) << "\n";
                for (const ReebEdge& e : g.edges)
                    out << "n" << e.bottom << " -- n" << e.top << " over ("
                        << rat_str(e.low) << ", " << rat_str(e.high) << ")\n";
                if (!dot_path.empty() &&
                    !write_text(dot_path, dot_graph(g, {}), err))
                    return 4;
            } catch (const FibrationError&) {
                out << "no critical vertices: every level is regular\n";
                if (!dot_path.empty() &&
                    !write_text(dot_path, "graph reeb {\n}\n", err))
                    return 4;
            }
            return 0;
        }

        OrbitReport r = analyze(f, threads);
        std::string text = render_report(r);
        out << text;
        if (!report_path.empty() && !write_text(report_path, text, err))
            return 4;
        if (!dot_path.empty() &&
            !write_text(dot_path, analysis_dot(f, r, threads), err))
            return 4;
        return 0;
    } catch (const FlatEdgeError& e) {
        err << "level edge: " << e.what() << "\n";
        if (!auto_perturb)
            err << "rerun with --auto-perturb to nudge the input\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const DimensionError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 4;
    }
}

}  // namespace reeb_orbit
