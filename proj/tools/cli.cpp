#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "domset/bench.hpp"
#include "domset/bounds.hpp"
#include "domset/exact.hpp"
#include "domset/generate.hpp"
#include "domset/graph_io.hpp"
#include "domset/greedy.hpp"
#include "domset/purify.hpp"

namespace domset::cli {
namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kVersion =
    "domset 0.1.0 (tie-break=lowest-id; greedy=max-active-degree; repair=newest-first; "
    "U=floor; exact=branch-and-bound<=64)";

struct Common {
    std::string format = "auto";
    std::vector<std::string> procs;
    double alpha = 1.0;
    double beta = 1.0;
    bool tighten = false;
};

void add_common(CLI::App& cmd, Common& c) {
    cmd.add_option("--format", c.format, "Input format: auto, edgelist, dimacs")
        ->check(CLI::IsMember({"auto", "edgelist", "edge-list", "dimacs"}));
    cmd.add_option("--proc", c.procs, "Procedures to run (pp0..pp4); repeatable or comma-separated")
        ->delimiter(',')
        ->check(CLI::IsMember({"pp0", "pp1", "pp2", "pp3", "pp4"}));
    cmd.add_option("--alpha", c.alpha, "OCS weight in [0,1]")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--beta", c.beta, "ICS weight in [0,1]")->check(CLI::Range(0.0, 1.0));
    cmd.add_flag("--tighten", c.tighten, "Apply a final redundant-vertex sweep");
}

std::vector<Procedure> procedures_of(const Common& c) {
    if (c.procs.empty()) return {kAllProcedures.begin(), kAllProcedures.end()};
    std::vector<Procedure> out;
    for (const auto& name : c.procs) {
        auto p = *parse_procedure(name);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PurifyOptions options_of(const Common& c) {
    PurifyOptions o;
    o.alpha = c.alpha;
    o.beta = c.beta;
    o.tighten = c.tighten;
    return o;
}

Graph load(const std::string& path, const std::string& format) {
    try {
        return read_graph_file(path, *parse_format_name(format));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string join_labels(const Graph& g, const VertexSet& s) {
    std::string out;
    for (Vertex v : s.members()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(g.label(v));
    }
    return out;
}

void write_atomically(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw InputError("cannot write " + tmp.string());
        f << content;
        f.flush();
        if (!f) throw InputError("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw InputError("cannot write " + path);
    }
}

int solve(const std::string& path, const Common& c, const std::string& log_path, std::ostream& out) {
    const Graph g = load(path, c.format);
    const auto stage1 = greedy_dominating_set(g);
    const auto procs = procedures_of(c);
    const auto opts = options_of(c);
    std::string log;
    for (Procedure p : procs) {
        auto r = run_procedure(p, g, stage1, opts);
        if (!is_dominating(g, r.final_set))
            throw std::logic_error(std::string(to_string(p)) + " returned a non-dominating set");
        if (procs.size() > 1) out << to_string(p) << ' ';
        out << "S=" << stage1.set.size() << " S*=" << r.final_set.size() << ": " << join_labels(g, r.final_set)
            << '\n';
        log += purify_log_json(g, r, opts) + '\n';
    }
    if (!log_path.empty()) write_atomically(log_path, log);
    return kOk;
}

struct BenchArgs {
    std::string gen;
    std::string glob;
    std::size_t count = 1;
    std::optional<std::uint64_t> seed;
    bool connect = false;
    bool all_procs = false;
    std::size_t exact_max_n = 25;
    bool timings = false;
    std::size_t workers = 0;
    std::string csv_path;
    std::string json_path;
};

int bench(const BenchArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
    BenchConfig config;
    config.procedures = a.all_procs ? std::vector<Procedure>(kAllProcedures.begin(), kAllProcedures.end())
                                    : procedures_of(c);
    config.purify = options_of(c);
    config.exact_max_n = a.exact_max_n;
    config.record_timings = a.timings;
    config.workers = a.workers;

    BatchSource source;
    if (!a.gen.empty()) {
        RandomGraphSpec spec;
        try {
            spec = parse_generator_spec(a.gen);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (a.seed) spec.seed = *a.seed;
        if (a.connect) spec.connect = true;
        source = GeneratedBatch{spec, a.count};
    } else {
        source = FileGlob{a.glob, *parse_format_name(c.format)};
    }

    BatchResult result;
    try {
        result = run_batch(source, config);
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
    for (const auto& f : result.failures) err << "skipped " << f.instance << ": " << f.reason << '\n';

    const auto csv = to_csv(result.reports);
    const auto json = to_json_lines(result.reports, result.stats);
    if (!a.csv_path.empty()) write_atomically(a.csv_path, csv);
    if (!a.json_path.empty()) write_atomically(a.json_path, json);
    if (a.csv_path.empty() && a.json_path.empty())
        out << csv;
    else
        out << "{\"aggregate\":" << stats_to_json(result.stats) << "}\n";
    return kOk;
}

int bounds(const std::string& path, const std::string& format, bool exact, std::ostream& out, std::ostream& err) {
    const Graph g = load(path, format);
    const auto b = compute_bounds(g);
    out << "lower=" << b.lower << " U=" << b.upper;
    if (b.max_degree > 0) out << " ratio_cap=" << format_ratio(b.ratio_cap);
    out << '\n';
    out << "n=" << b.n << " m=" << b.m << " delta=" << b.min_degree << " Delta=" << b.max_degree
        << " connected=" << (b.connected ? "yes" : "no") << '\n';
    if (!b.connected) err << "warning: graph is not connected; U is not meaningful\n";
    if (exact) {
        if (g.num_vertices() > kExactMaxVertices) throw UsageError("--exact supports at most 64 vertices");
        auto r = exact_gamma(g);
        if (r.timed_out)
            out << "gamma<=" << r.gamma << " (budget exhausted)\n";
        else
            out << "gamma=" << r.gamma << ": " << join_labels(g, r.witness) << '\n';
    }
    return kOk;
}

} // namespace

std::string format_ratio(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
    return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum dominating set heuristics: greedy clustering plus purification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Common common;

    auto* solve_cmd = app.add_subcommand("solve", "Run Stage 1 and purification on one graph");
    std::string solve_path, log_path;
    solve_cmd->add_option("graph", solve_path, "Graph file")->required();
    solve_cmd->add_option("--log-json", log_path, "Write per-procedure JSON logs to this file");
    add_common(*solve_cmd, common);

    auto* bench_cmd = app.add_subcommand("bench", "Run a batch and emit CSV/JSON reports");
    BenchArgs b;
    auto* gen_opt = bench_cmd->add_option("--gen", b.gen, "Generator spec, e.g. gnm:1000:1200:seed7");
    auto* glob_opt = bench_cmd->add_option("--glob", b.glob, "Shell pattern of graph files");
    gen_opt->excludes(glob_opt);
    bench_cmd->add_option("--count", b.count, "Instances to generate (seeds seed, seed+1, ...)")
        ->check(CLI::PositiveNumber)
        ->needs(gen_opt);
    bench_cmd->add_option("--seed", b.seed, "Override the generator seed")->needs(gen_opt);
    bench_cmd->add_flag("--connect", b.connect, "Make generated graphs connected")->needs(gen_opt);
    bench_cmd->add_flag("--all-procs", b.all_procs, "Run pp0..pp4 (the default)");
    bench_cmd->add_option("--exact-max-n", b.exact_max_n, "Run the exact oracle up to this n (0 disables)")
        ->capture_default_str();
    bench_cmd->add_flag("--timings", b.timings, "Record wall-clock times (output no longer reproducible)");
    bench_cmd->add_option("--workers", b.workers, "Worker threads (default: DOMSET_WORKERS or all cores)");
    bench_cmd->add_option("--out", b.csv_path, "CSV output file");
    bench_cmd->add_option("--json", b.json_path, "JSON-lines output file");
    add_common(*bench_cmd, common);

    auto* bounds_cmd = app.add_subcommand("bounds", "Print the analytic bounds for one graph");
    std::string bounds_path, bounds_format = "auto";
    bool bounds_exact = false;
    bounds_cmd->add_option("graph", bounds_path, "Graph file")->required();
    bounds_cmd->add_option("--format", bounds_format, "Input format: auto, edgelist, dimacs")
        ->check(CLI::IsMember({"auto", "edgelist", "edge-list", "dimacs"}));
    bounds_cmd->add_flag("--exact", bounds_exact, "Also compute gamma exactly (n <= 64)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (bench_cmd->parsed() && b.gen.empty() && b.glob.empty())
            throw UsageError("bench needs --gen or --glob");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (solve_cmd->parsed()) return solve(solve_path, common, log_path, out);
        if (bench_cmd->parsed()) return bench(b, common, out, err);
        return bounds(bounds_path, bounds_format, bounds_exact, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

} // namespace domset::cli
