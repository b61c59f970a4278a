#include "domset/purify.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace domset {

const char* to_string(Procedure p) noexcept {
    switch (p) {
    case Procedure::kPP0: return "pp0";
    case Procedure::kPP1: return "pp1";
    case Procedure::kPP2: return "pp2";
    case Procedure::kPP3: return "pp3";
    case Procedure::kPP4: return "pp4";
    }
    return "?";
}

std::optional<Procedure> parse_procedure(std::string_view name) {
    for (Procedure p : kAllProcedures)
        if (name == to_string(p)) return p;
    return std::nullopt;
}

const char* to_string(EventKind k) noexcept {
    switch (k) {
    case EventKind::kFirm: return "firm";
    case EventKind::kPending: return "pending";
    case EventKind::kPurify: return "purify";
    case EventKind::kRepair: return "repair";
    case EventKind::kTighten: return "tighten";
    }
    return "?";
}

namespace {

void check_inputs(const OrderedDominatingSet& s, const ClusterForest& forest, const PurifyOptions& options) {
    if (!(options.alpha >= 0.0 && options.alpha <= 1.0) || !(options.beta >= 0.0 && options.beta <= 1.0))
        throw std::invalid_argument("purify: alpha and beta must lie in [0, 1]");
    if (forest.size() != s.size() || forest.universe() != s.members.universe())
        throw std::invalid_argument("purify: forest does not match the dominating set");
    for (Vertex v : s.order)
        if (!forest.contains(v)) throw std::invalid_argument("purify: forest does not match the dominating set");
}

// One purification run: the tracker plus event logging.
class Run {
public:
    Run(Procedure p, const Graph& g, const OrderedDominatingSet& s, const PurifyOptions& options)
        : g_(g), s_(s), options_(options), tracker_(g, s.members, options.alpha, options.beta) {
        result_.procedure = p;
    }

    PurifyTracker& tracker() { return tracker_; }
    const Graph& graph() const { return g_; }

    void firm(Vertex v) {
        if (tracker_.is_firm(v)) return;
        tracker_.make_firm(v);
        log(EventKind::kFirm, v);
    }

    // Firms v and moves its non-firm surviving neighbors into pending.
    void firm_and_mark(Vertex v) {
        firm(v);
        for (Vertex u : g_.neighbors(v))
            if (tracker_.is_survivor(u) && !tracker_.is_firm(u) && !tracker_.is_pending(u)) pending(u);
    }

    void pending(Vertex v) {
        tracker_.make_pending(v);
        log(EventKind::kPending, v);
    }

    void purify(Vertex v) {
        tracker_.purify(v);
        log(EventKind::kPurify, v);
    }

    void end_iteration() {
        tracker_.next_iteration();
        if (options_.check_invariants) tracker_.state().validate(s_.members);
    }

    /// Firms every vertex with a private neighbor. Returns whether they dominate.
    bool firm_private_owners(bool mark_pending) {
        std::vector<Vertex> owners;
        for (Vertex v : s_.members.members())
            if (tracker_.has_semi_private_neighbor(v)) owners.push_back(v);
        for (Vertex v : owners) mark_pending ? firm_and_mark(v) : firm(v);
        end_iteration();
        return tracker_.firm_dominates();
    }

    /// Candidate = kept set before repair. Everything else in S counts as
    /// purified, tracker order first, then ascending.
    PurifyResult finish(const VertexSet& candidate) {
        std::vector<Vertex> removed = tracker_.state().purified;
        VertexSet listed = VertexSet::of(g_.num_vertices(), removed);
        for (Vertex v : s_.members.members())
            if (!candidate.contains(v) && !listed.contains(v)) removed.push_back(v);
        std::erase_if(removed, [&](Vertex v) { return candidate.contains(v); });

        std::vector<Vertex> added;
        VertexSet final_set = repair_domination(g_, candidate, removed, &added);
        for (Vertex v : added) log(EventKind::kRepair, v);

        std::size_t tightened = 0;
        if (options_.tighten && result_.procedure != Procedure::kPP4) {
            std::vector<Vertex> reverse(s_.order.rbegin(), s_.order.rend());
            std::vector<Vertex> dropped;
            final_set = remove_redundant(g_, std::move(final_set), reverse, &dropped);
            for (Vertex v : dropped) log(EventKind::kTighten, v);
            tightened = dropped.size();
        }

        result_.purified_count = removed.size() + tightened;
        result_.repair_additions = added.size();
        result_.final_set = std::move(final_set);
        return std::move(result_);
    }

    void set_early_exit() { result_.early_exit = true; }

private:
    void log(EventKind kind, Vertex v) { result_.log.push_back({tracker_.state().iteration, kind, v}); }

    const Graph& g_;
    const OrderedDominatingSet& s_;
    PurifyOptions options_;
    PurifyTracker tracker_;
    PurifyResult result_;
};

bool in_cluster(const ClusterForest& forest, Vertex root, Vertex u) {
    return forest.contains(u) && forest.root_of(u) == root;
}

std::vector<Vertex> sorted_members(const ClusterForest& forest, Vertex root) {
    auto c = forest.cluster_members(root);
    std::sort(c.begin(), c.end());
    return c;
}

} // namespace

PurifyResult purify_pp0(const Graph& g, const OrderedDominatingSet& s, const ClusterForest& forest,
                        const PurifyOptions& options) {
    check_inputs(s, forest, options);
    Run run(Procedure::kPP0, g, s, options);
    auto& t = run.tracker();
    auto test = [&](Vertex b) {
        if (t.is_survivor(b) && !t.has_semi_private_neighbor(b)) run.purify(b);
    };

    std::vector<std::uint8_t> visited(g.num_vertices(), 0);
    for (Vertex root : forest.roots()) {
        std::vector<Vertex> leaves;
        for (Vertex u : sorted_members(forest, root))
            if (forest.children(u).empty()) leaves.push_back(u);

        for (Vertex leaf : leaves) {
            // Leaf-to-root path, cut at the first vertex an earlier path reached.
            std::vector<Vertex> path{leaf};
            visited[leaf] = 1;
            for (auto p = forest.parent(leaf); p; p = forest.parent(*p)) {
                path.push_back(*p);
                if (visited[*p]) break;
                visited[*p] = 1;
            }
            std::size_t i = 0;
            while (true) {
                if (i + 3 < path.size()) {
                    test(path[i + 1]);
                    test(path[i + 2]);
                    i += 3;
                } else if (i + 2 < path.size()) {
                    test(path[i + 1]);
                    i += 2;
                } else {
                    break;
                }
                run.end_iteration();
            }
        }
    }
    return run.finish(t.state().survivors);
}

PurifyResult purify_pp1(const Graph& g, const OrderedDominatingSet& s, const ClusterForest& forest,
                        const PurifyOptions& options) {
    check_inputs(s, forest, options);
    Run run(Procedure::kPP1, g, s, options);
    auto& t = run.tracker();
    if (run.firm_private_owners(true)) {
        run.set_early_exit();
        return run.finish(t.state().firm);
    }

    std::vector<Vertex> kids;
    for (Vertex root : forest.roots()) {
        // Group the cluster by depth; process deepest level first.
        std::vector<std::vector<Vertex>> levels;
        std::vector<Vertex> frontier{root};
        while (!frontier.empty()) {
            levels.push_back(frontier);
            std::vector<Vertex> next;
            for (Vertex u : frontier)
                for (Vertex c : forest.children(u)) next.push_back(c);
            frontier = std::move(next);
        }

        for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
            std::sort(level->begin(), level->end());
            for (Vertex x : *level) {
                if (!t.is_survivor(x)) continue;
                kids.clear();
                for (Vertex c : forest.children(x))
                    if (t.is_survivor(c)) kids.push_back(c);
                if (kids.empty()) continue;

                const bool firm_child = std::any_of(kids.begin(), kids.end(), [&](Vertex c) { return t.is_firm(c); });
                if (t.is_firm(x)) {
                    for (Vertex c : kids)
                        if (!t.is_firm(c) && !t.has_semi_private_neighbor(c)) run.purify(c);
                } else if (!firm_child) {
                    run.firm_and_mark(x);
                    for (Vertex c : kids) {
                        if (t.has_semi_private_neighbor(c))
                            run.firm_and_mark(c);
                        else
                            run.purify(c);
                    }
                } else {
                    if (auto p = forest.parent(x); p && !t.is_firm(*p)) run.firm_and_mark(*p);
                    // x keeps its semi-private neighbors covered if it has any.
                    if (t.has_semi_private_neighbor(x))
                        run.firm_and_mark(x);
                    else
                        run.purify(x);
                }
                run.end_iteration();
            }
        }
    }
    return run.finish(t.state().survivors);
}

PurifyResult purify_pp2(const Graph& g, const OrderedDominatingSet& s, const ClusterForest& forest,
                        const PurifyOptions& options) {
    check_inputs(s, forest, options);
    Run run(Procedure::kPP2, g, s, options);
    auto& t = run.tracker();
    if (run.firm_private_owners(false)) {
        run.set_early_exit();
        return run.finish(t.state().firm);
    }

    for (Vertex root : forest.roots()) {
        const auto cluster = sorted_members(forest, root);
        auto open = [&] {
            return std::any_of(cluster.begin(), cluster.end(),
                               [&](Vertex u) { return !t.is_firm(u) && !t.is_pending(u); });
        };
        while (open()) {
            Vertex best = kNoVertex;
            double best_score = -1.0;
            for (Vertex u : cluster) {
                if (t.is_firm(u)) continue;
                double score = t.balance(u);
                if (score > best_score) {
                    best = u;
                    best_score = score;
                }
            }
            run.firm(best);
            for (Vertex u : g.neighbors(best))
                if (in_cluster(forest, root, u) && !t.is_firm(u) && !t.is_pending(u)) run.pending(u);
            run.end_iteration();
        }
        if (t.firm_dominates()) break;
    }
    return run.finish(t.state().firm);
}

PurifyResult purify_pp3(const Graph& g, const OrderedDominatingSet& s, const ClusterForest& forest,
                        const PurifyOptions& options) {
    check_inputs(s, forest, options);
    Run run(Procedure::kPP3, g, s, options);
    auto& t = run.tracker();
    if (run.firm_private_owners(true)) {
        run.set_early_exit();
        return run.finish(t.state().firm);
    }

    // Invariant: no non-firm survivor has a semi-private neighbor. After a
    // purification only v and its outside neighbors can become semi-private.
    auto firm_new_owners = [&](Vertex v) {
        auto check = [&](Vertex x) {
            if (t.is_survivor(x) || t.survivor_count(x) != 1) return;
            Vertex owner = t.sole_survivor_neighbor(x);
            if (!t.is_firm(owner)) run.firm_and_mark(owner);
        };
        check(v);
        for (Vertex x : g.neighbors(v)) check(x);
    };

    for (Vertex root : forest.roots()) {
        const auto cluster = sorted_members(forest, root);
        while (true) {
            Vertex best = kNoVertex;
            double best_score = 0.0;
            for (Vertex u : cluster) {
                if (!t.is_survivor(u) || t.is_firm(u)) continue;
                double score = t.balance(u);
                if (best == kNoVertex || score < best_score) {
                    best = u;
                    best_score = score;
                }
            }
            if (best == kNoVertex) break;
            run.purify(best);
            firm_new_owners(best);
            run.end_iteration();
        }
        if (t.firm_dominates()) break;
    }
    return run.finish(t.state().firm);
}

PurifyResult purify_pp4(const Graph& g, const OrderedDominatingSet& s) {
    PurifyResult result;
    result.procedure = Procedure::kPP4;
    std::vector<Vertex> reverse(s.order.rbegin(), s.order.rend());
    std::vector<Vertex> removed;
    result.final_set = remove_redundant(g, s.members, reverse, &removed);
    result.purified_count = removed.size();
    std::size_t i = 0;
    for (Vertex v : removed) result.log.push_back({i++, EventKind::kPurify, v});
    return result;
}

PurifyResult run_procedure(Procedure p, const Graph& g, const Stage1Result& stage1, const PurifyOptions& options) {
    switch (p) {
    case Procedure::kPP0: return purify_pp0(g, stage1.set, stage1.forest, options);
    case Procedure::kPP1: return purify_pp1(g, stage1.set, stage1.forest, options);
    case Procedure::kPP2: return purify_pp2(g, stage1.set, stage1.forest, options);
    case Procedure::kPP3: return purify_pp3(g, stage1.set, stage1.forest, options);
    case Procedure::kPP4: return purify_pp4(g, stage1.set);
    }
    throw std::invalid_argument("run_procedure: unknown procedure");
}

VertexSet repair_domination(const Graph& g, const VertexSet& reduced, std::span<const Vertex> purified,
                            std::vector<Vertex>* added) {
    const std::size_t n = g.num_vertices();
    VertexSet out = reduced;
    std::vector<std::size_t> cover(n, 0);
    std::size_t uncovered = n;
    auto add = [&](Vertex v) {
        out.insert(v);
        if (cover[v]++ == 0) --uncovered;
        for (Vertex x : g.neighbors(v))
            if (cover[x]++ == 0) --uncovered;
    };
    for (Vertex v : reduced.members()) add(v);

    // Coverage only grows, so a vertex skipped here never qualifies later and
    // one newest-to-oldest pass picks the same vertices as restarting the
    // search after every addition.
    for (auto it = purified.rbegin(); it != purified.rend() && uncovered > 0; ++it) {
        Vertex v = *it;
        if (out.contains(v)) continue;
        bool useful = cover[v] == 0;
        for (Vertex x : g.neighbors(v)) useful = useful || cover[x] == 0;
        if (!useful) continue;
        add(v);
        if (added) added->push_back(v);
    }
    if (uncovered > 0) throw std::logic_error("repair_domination: original set did not dominate");
    return out;
}

VertexSet remove_redundant(const Graph& g, VertexSet set, std::span<const Vertex> order, std::vector<Vertex>* removed) {
    std::vector<std::size_t> cover(g.num_vertices(), 0);
    for (Vertex v : set.members()) {
        ++cover[v];
        for (Vertex x : g.neighbors(v)) ++cover[x];
    }
    for (Vertex v : order) {
        if (!set.contains(v)) continue;
        auto nb = g.neighbors(v);
        bool redundant = cover[v] >= 2 && std::all_of(nb.begin(), nb.end(), [&](Vertex x) { return cover[x] >= 2; });
        if (!redundant) continue;
        set.erase(v);
        --cover[v];
        for (Vertex x : nb) --cover[x];
        if (removed) removed->push_back(v);
    }
    return set;
}

bool is_minimal_dominating(const Graph& g, const VertexSet& s) {
    if (!is_dominating(g, s)) return false;
    std::vector<std::size_t> cover(g.num_vertices(), 0);
    for (Vertex v : s.members()) {
        ++cover[v];
        for (Vertex x : g.neighbors(v)) ++cover[x];
    }
    for (Vertex v : s.members()) {
        auto nb = g.neighbors(v);
        if (cover[v] >= 2 && std::all_of(nb.begin(), nb.end(), [&](Vertex x) { return cover[x] >= 2; }))
            return false;
    }
    return true;
}

std::string purify_log_json(const Graph& g, const PurifyResult& result, const PurifyOptions& options) {
    nlohmann::ordered_json events = nlohmann::ordered_json::array();
    for (const auto& e : result.log)
        events.push_back({{"h", e.iteration}, {"kind", to_string(e.kind)}, {"v", g.label(e.vertex)}});
    nlohmann::ordered_json doc = {
        {"procedure", to_string(result.procedure)},
        {"alpha", options.alpha},
        {"beta", options.beta},
        {"tighten", options.tighten},
        {"early_exit", result.early_exit},
        {"purified", result.purified_count},
        {"repair_additions", result.repair_additions},
        {"events", events},
        {"S_star", external_ids(g, result.final_set)},
    };
    return doc.dump();
}

} // namespace domset
