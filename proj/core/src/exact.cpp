#include "domset/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace domset {
namespace {

using Mask = std::uint64_t;

class Search {
public:
    Search(const Graph& g, const ExactBudget& budget)
        : n_(g.num_vertices()), budget_(budget), start_(std::chrono::steady_clock::now()) {
        closed_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            closed_[v] = Mask{1} << v;
            for (Vertex u : g.neighbors(v)) closed_[v] |= Mask{1} << u;
            max_cover_ = std::max<std::size_t>(max_cover_, g.degree(v) + 1);
        }
        full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        best_size_ = n_;
        best_ = full_;
    }

    void run() { dfs(0, 0, full_); }

    ExactResult result() const {
        ExactResult r;
        r.gamma = best_size_;
        r.witness = VertexSet(n_);
        for (Mask m = best_; m; m &= m - 1) r.witness.insert(static_cast<Vertex>(std::countr_zero(m)));
        r.nodes = nodes_;
        r.timed_out = timed_out_;
        return r;
    }

private:
    bool out_of_budget() {
        if (++nodes_ > budget_.max_nodes) return true;
        if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_time) return true;
        return false;
    }

    void dfs(Mask chosen, std::size_t size, Mask uncovered) {
        if (timed_out_) return;
        if (out_of_budget()) {
            timed_out_ = true;
            return;
        }
        if (uncovered == 0) {
            if (size < best_size_) {
                best_size_ = size;
                best_ = chosen;
            }
            return;
        }
        const std::size_t left = static_cast<std::size_t>(std::popcount(uncovered));
        if (size + (left + max_cover_ - 1) / max_cover_ >= best_size_) return;

        // Some member of N[u] must be chosen.
        const auto u = static_cast<Vertex>(std::countr_zero(uncovered));
        struct Candidate {
            int gain;
            Vertex v;
        };
        Candidate cands[64];
        std::size_t k = 0;
        for (Mask m = closed_[u]; m; m &= m - 1) {
            auto v = static_cast<Vertex>(std::countr_zero(m));
            cands[k++] = {std::popcount(closed_[v] & uncovered), v};
        }
        std::sort(cands, cands + k, [](const Candidate& a, const Candidate& b) {
            return a.gain != b.gain ? a.gain > b.gain : a.v < b.v;
        });
        for (std::size_t i = 0; i < k; ++i) {
            Vertex v = cands[i].v;
            dfs(chosen | (Mask{1} << v), size + 1, uncovered & ~closed_[v]);
            if (timed_out_) return;
        }
    }

    std::size_t n_;
    ExactBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Mask> closed_;
    Mask full_ = 0;
    std::size_t max_cover_ = 1;
    std::size_t best_size_ = 0;
    Mask best_ = 0;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

} // namespace

ExactResult exact_gamma(const Graph& g, const ExactBudget& budget) {
    if (g.num_vertices() > kExactMaxVertices)
        throw std::invalid_argument("exact_gamma: more than 64 vertices");
    if (g.num_vertices() == 0) return {0, VertexSet(0), 0, false};
    Search search(g, budget);
    search.run();
    return search.result();
}

} // namespace domset
