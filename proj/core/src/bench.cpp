#include "domset/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fnmatch.h>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "domset/graph_io.hpp"
#include "domset/greedy.hpp"

namespace domset {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::size_t index_of(Procedure p) { return static_cast<std::size_t>(p); }

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::size_t resolve_workers(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DOMSET_WORKERS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

template <typename T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

} // namespace

std::optional<std::size_t> RunReport::size_of(Procedure p) const {
    const auto& o = procedures[index_of(p)];
    return o ? std::optional(o->size) : std::nullopt;
}

std::optional<double> RunReport::pct_vs_pp0(Procedure p) const {
    auto base = size_of(Procedure::kPP0);
    auto size = size_of(p);
    if (!base || !size || *base == 0) return std::nullopt;
    return 100.0 * (static_cast<double>(*base) - static_cast<double>(*size)) / static_cast<double>(*base);
}

std::optional<double> RunReport::pct_vs_greedy(Procedure p) const {
    auto size = size_of(p);
    if (!size || greedy_size == 0) return std::nullopt;
    return 100.0 * (static_cast<double>(greedy_size) - static_cast<double>(*size)) / static_cast<double>(greedy_size);
}

std::optional<std::size_t> RunReport::best_size() const {
    std::optional<std::size_t> best;
    for (Procedure p : {Procedure::kPP1, Procedure::kPP2, Procedure::kPP3, Procedure::kPP4})
        if (auto s = size_of(p); s && (!best || *s < *best)) best = s;
    return best;
}

RunReport run_instance(const Graph& g, std::string instance, const BenchConfig& config) {
    RunReport r;
    r.instance = std::move(instance);
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.alpha = config.purify.alpha;
    r.beta = config.purify.beta;

    auto t0 = Clock::now();
    const auto stage1 = greedy_dominating_set(g);
    if (config.record_timings) r.stage1_ms = elapsed_ms(t0);
    r.greedy_size = stage1.set.size();

    r.lower = lower_bound(g);
    if (is_connected(g)) r.upper = upper_bound_U(g);

    std::optional<ExactResult> exact;
    if (config.exact_max_n > 0 && r.n <= config.exact_max_n && r.n <= kExactMaxVertices) {
        exact = exact_gamma(g, config.exact_budget);
        if (exact->timed_out)
            r.exact_timed_out = true;
        else
            r.gamma = exact->gamma;
    }

    for (Procedure p : config.procedures) {
        auto t = Clock::now();
        auto result = run_procedure(p, g, stage1, config.purify);
        const double ms = elapsed_ms(t);
        if (!is_dominating(g, result.final_set))
            throw std::logic_error(std::string(to_string(p)) + " returned a non-dominating set on " + r.instance);
        ProcedureOutcome o;
        o.size = result.final_set.size();
        if (config.record_timings) o.time_ms = ms;
        o.repair_additions = result.repair_additions;
        o.quality_passed = verify_quality(g, result.final_set, exact ? &*exact : nullptr).all_passed();
        r.procedures[index_of(p)] = o;
    }
    return r;
}

AggregateStats summarize(const std::vector<RunReport>& reports) {
    AggregateStats s;
    s.instances = reports.size();

    auto mean = [](double sum, std::size_t count) -> std::optional<double> {
        return count ? std::optional(sum / static_cast<double>(count)) : std::nullopt;
    };

    double best_pp0 = 0, best_greedy = 0, ratio_u = 0, error = 0;
    std::size_t n_best_pp0 = 0, n_best_greedy = 0;
    std::array<double, 4> per_proc{};
    std::array<std::size_t, 4> per_count{};
    for (const auto& r : reports) {
        const auto best = r.best_size();
        for (std::size_t i = 0; i < 4; ++i)
            if (auto pct = r.pct_vs_pp0(static_cast<Procedure>(i + 1))) {
                per_proc[i] += *pct;
                ++per_count[i];
            }
        if (!best) continue;
        if (auto pp0 = r.size_of(Procedure::kPP0); pp0 && *pp0 > 0) {
            best_pp0 += 100.0 * (static_cast<double>(*pp0) - static_cast<double>(*best)) / static_cast<double>(*pp0);
            ++n_best_pp0;
        }
        if (r.greedy_size > 0) {
            best_greedy += 100.0 * (static_cast<double>(r.greedy_size) - static_cast<double>(*best)) /
                           static_cast<double>(r.greedy_size);
            ++n_best_greedy;
        }
        if (r.gamma) {
            ++s.gamma_known;
            if (*best == *r.gamma) {
                ++s.optimal_hits;
            } else {
                ++s.non_optimal;
                error += static_cast<double>(*best) - static_cast<double>(*r.gamma);
            }
        }
        if (r.upper && *r.upper > 0) {
            ratio_u += static_cast<double>(*best) / static_cast<double>(*r.upper);
            ++s.with_upper;
        }
    }
    s.mean_best_vs_pp0 = mean(best_pp0, n_best_pp0);
    for (std::size_t i = 0; i < 4; ++i) s.mean_vs_pp0[i] = mean(per_proc[i], per_count[i]);
    s.mean_best_vs_greedy = mean(best_greedy, n_best_greedy);
    s.optimal_hit_rate = s.gamma_known ? static_cast<double>(s.optimal_hits) / static_cast<double>(s.gamma_known) : 0.0;
    s.mean_error = s.non_optimal ? error / static_cast<double>(s.non_optimal) : 0.0;
    s.mean_ratio_to_upper = mean(ratio_u, s.with_upper);
    return s;
}

std::vector<std::string> expand_glob(std::string_view pattern) {
    namespace fs = std::filesystem;
    const std::string pat(pattern);
    const auto slash = pat.find_last_of('/');
    const fs::path dir = slash == std::string::npos ? fs::path(".") : fs::path(pat.substr(0, slash + 1));
    const std::string name = slash == std::string::npos ? pat : pat.substr(slash + 1);

    std::vector<std::string> out;
    std::error_code ec;
    if (name.find_first_of("*?[") == std::string::npos) {
        if (fs::is_regular_file(pat, ec)) out.push_back(pat);
        return out;
    }
    for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
        if (!it->is_regular_file(ec)) continue;
        const auto fname = it->path().filename().string();
        if (::fnmatch(name.c_str(), fname.c_str(), FNM_PERIOD) == 0)
            out.push_back(slash == std::string::npos ? fname : pat.substr(0, slash + 1) + fname);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BatchResult run_batch(const BatchSource& source, const BenchConfig& config) {
    struct Job {
        std::string id;
        std::optional<std::uint64_t> seed;
        std::function<Graph()> load;
    };
    std::vector<Job> jobs;
    if (auto* glob = std::get_if<FileGlob>(&source)) {
        for (auto& path : expand_glob(glob->pattern)) {
            const auto format = glob->format;
            jobs.push_back({std::filesystem::path(path).filename().string(), std::nullopt,
                            [path, format] { return read_graph_file(path, format); }});
        }
    } else {
        const auto& gen = std::get<GeneratedBatch>(source);
        for (std::size_t i = 0; i < gen.count; ++i) {
            RandomGraphSpec spec = gen.spec;
            spec.seed += i;
            jobs.push_back({describe(spec), spec.seed, [spec] { return gen_random_graph(spec); }});
        }
    }
    if (jobs.empty()) throw std::runtime_error("no instances");

    std::vector<std::optional<RunReport>> reports(jobs.size());
    std::vector<std::string> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                const Graph g = jobs[i].load();
                auto r = run_instance(g, jobs[i].id, config);
                r.seed = jobs[i].seed;
                reports[i] = std::move(r);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const std::size_t workers = std::min(resolve_workers(config.workers), jobs.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    BatchResult out;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (reports[i])
            out.reports.push_back(std::move(*reports[i]));
        else
            out.failures.push_back({jobs[i].id, errors[i]});
    }
    if (out.reports.empty()) throw std::runtime_error("no instance completed successfully");
    out.stats = summarize(out.reports);
    return out;
}

std::string to_csv(const std::vector<RunReport>& reports) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    auto field = [&](const auto& v) {
        out << ',';
        if (v) out << *v;
    };
    auto time_field = [&](const std::optional<double>& v) {
        out << ',';
        if (v) out << format_fixed(*v, 3);
    };
    for (const auto& r : reports) {
        if (r.instance.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : r.instance) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            out << quoted << '"';
        } else {
            out << r.instance;
        }
        out << ',' << r.n << ',' << r.m << ',' << r.greedy_size;
        for (Procedure p : kAllProcedures) field(r.size_of(p));
        for (Procedure p : {Procedure::kPP1, Procedure::kPP2, Procedure::kPP3, Procedure::kPP4}) {
            out << ',';
            if (auto pct = r.pct_vs_pp0(p)) out << format_fixed(*pct, 2);
        }
        field(r.gamma);
        out << ',' << r.lower;
        field(r.upper);
        time_field(r.stage1_ms);
        for (Procedure p : {Procedure::kPP1, Procedure::kPP2, Procedure::kPP3, Procedure::kPP4}) {
            const auto& o = r.procedures[index_of(p)];
            time_field(o ? o->time_ms : std::nullopt);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<RunReport> parse_csv(std::string_view text) {
    std::vector<RunReport> out;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("parse_csv: unexpected header");

    auto split = [](const std::string& l) {
        std::vector<std::string> cols;
        std::string cur;
        bool quoted = false;
        for (std::size_t i = 0; i < l.size(); ++i) {
            char c = l[i];
            if (quoted) {
                if (c == '"' && i + 1 < l.size() && l[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    cur += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                cols.push_back(std::move(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        cols.push_back(std::move(cur));
        return cols;
    };
    auto as_size = [](const std::string& s) -> std::optional<std::size_t> {
        if (s.empty()) return std::nullopt;
        return static_cast<std::size_t>(std::stoull(s));
    };
    auto as_double = [](const std::string& s) -> std::optional<double> {
        if (s.empty()) return std::nullopt;
        return std::stod(s);
    };

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto c = split(line);
        if (c.size() != 21) throw std::runtime_error("parse_csv: expected 21 columns");
        RunReport r;
        r.instance = c[0];
        r.n = *as_size(c[1]);
        r.m = *as_size(c[2]);
        r.greedy_size = *as_size(c[3]);
        for (std::size_t i = 0; i < 5; ++i)
            if (auto s = as_size(c[4 + i])) r.procedures[i] = ProcedureOutcome{*s, std::nullopt, 0, true};
        r.gamma = as_size(c[13]);
        r.lower = as_size(c[14]).value_or(0);
        r.upper = as_size(c[15]);
        r.stage1_ms = as_double(c[16]);
        for (std::size_t i = 0; i < 4; ++i)
            if (auto t = as_double(c[17 + i]); t && r.procedures[i + 1]) r.procedures[i + 1]->time_ms = t;
        out.push_back(std::move(r));
    }
    return out;
}

std::string report_to_json(const RunReport& r) {
    nlohmann::ordered_json procs = nlohmann::ordered_json::object();
    nlohmann::ordered_json vs_pp0 = nlohmann::ordered_json::object();
    nlohmann::ordered_json vs_s = nlohmann::ordered_json::object();
    for (Procedure p : kAllProcedures) {
        const auto& o = r.procedures[index_of(p)];
        if (!o) continue;
        procs[to_string(p)] = {{"size", o->size},
                               {"time_ms", opt(o->time_ms)},
                               {"repair_additions", o->repair_additions},
                               {"quality_passed", o->quality_passed}};
        if (p != Procedure::kPP0) vs_pp0[to_string(p)] = opt(r.pct_vs_pp0(p));
        vs_s[to_string(p)] = opt(r.pct_vs_greedy(p));
    }
    nlohmann::ordered_json doc = {
        {"instance", r.instance},
        {"n", r.n},
        {"m", r.m},
        {"S", r.greedy_size},
        {"procedures", procs},
        {"pct_vs_pp0", vs_pp0},
        {"pct_vs_S", vs_s},
        {"gamma", opt(r.gamma)},
        {"exact_timed_out", r.exact_timed_out},
        {"lower", r.lower},
        {"U", opt(r.upper)},
        {"t_stage1_ms", opt(r.stage1_ms)},
        {"seed", opt(r.seed)},
        {"alpha", r.alpha},
        {"beta", r.beta},
    };
    return doc.dump();
}

std::string stats_to_json(const AggregateStats& s) {
    nlohmann::ordered_json per = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < 4; ++i) per["pp" + std::to_string(i + 1)] = opt(s.mean_vs_pp0[i]);
    nlohmann::ordered_json doc = {
        {"instances", s.instances},
        {"mean_best_vs_pp0", opt(s.mean_best_vs_pp0)},
        {"mean_vs_pp0", per},
        {"mean_best_vs_S", opt(s.mean_best_vs_greedy)},
        {"gamma_known", s.gamma_known},
        {"optimal_hits", s.optimal_hits},
        {"optimal_hit_rate", s.optimal_hit_rate},
        {"non_optimal", s.non_optimal},
        {"mean_error", s.mean_error},
        {"with_U", s.with_upper},
        {"mean_ratio_to_U", opt(s.mean_ratio_to_upper)},
    };
    return doc.dump();
}

std::string to_json_lines(const std::vector<RunReport>& reports, const AggregateStats& stats) {
    std::string out;
    for (const auto& r : reports) out += report_to_json(r) + '\n';
    out += "{\"aggregate\":" + stats_to_json(stats) + "}\n";
    return out;
}

} // namespace domset
