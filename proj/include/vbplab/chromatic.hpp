#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "vbplab/errors.hpp"
#include "vbplab/graph.hpp"

namespace vbplab {

inline constexpr std::size_t kDefaultChromaticLimit = 16;

struct ChromaticResult {
    int chi = 0;
    Coloring witness;  // colors 1..chi
};

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g)
{
    require_limit(static_cast<std::size_t>(g.n()), 64, "bitmask oracle");
    std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u - 1)] |= Mask{1} << (v - 1);
        adj[static_cast<std::size_t>(v - 1)] |= Mask{1} << (u - 1);
    }
    return adj;
}

// Backtracking k-colorability with DSATUR branching order. A vertex may only
// open color c if colors 0..c-1 are already in use, which removes color
// permutation symmetry.
class KColorSearch {
public:
    KColorSearch(const std::vector<Mask>& adj, int k) : adj_(adj), k_(k), color_(adj.size(), -1) {}

    bool run() { return extend(0, 0); }
    [[nodiscard]] const std::vector<int>& colors() const { return color_; }

private:
    const std::vector<Mask>& adj_;
    int k_;
    std::vector<int> color_;

    [[nodiscard]] Mask forbidden(std::size_t v) const
    {
        Mask f = 0;
        Mask nb = adj_[v];
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (color_[static_cast<std::size_t>(u)] >= 0)
                f |= Mask{1} << color_[static_cast<std::size_t>(u)];
        }
        return f;
    }

    bool extend(std::size_t colored, int used)
    {
        const std::size_t n = adj_.size();
        if (colored == n)
            return true;
        std::size_t best = n;
        int best_sat = -1;
        int best_deg = -1;
        Mask best_forb = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (color_[v] >= 0)
                continue;
            Mask f = forbidden(v);
            int sat = std::popcount(f);
            int deg = std::popcount(adj_[v]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
                best_forb = f;
            }
        }
        if (best_sat >= k_)
            return false;
        int limit = std::min(k_ - 1, used);
        for (int c = 0; c <= limit; ++c) {
            if (best_forb & (Mask{1} << c))
                continue;
            color_[best] = c;
            if (extend(colored + 1, std::max(used, c + 1)))
                return true;
        }
        color_[best] = -1;
        return false;
    }
};

// Size of a greedily grown clique; a cheap lower bound on chi.
inline int greedy_clique(const std::vector<Mask>& adj)
{
    int best = adj.empty() ? 0 : 1;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        Mask cand = adj[s];
        int size = 1;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= adj[static_cast<std::size_t>(v)];
            ++size;
        }
        best = std::max(best, size);
    }
    return best;
}

} // namespace detail

/// Exact chromatic number with a witness coloring; n must not exceed `limit`.
inline ChromaticResult chromatic_number_exact(const Graph& g, std::size_t limit = kDefaultChromaticLimit)
{
    require_limit(static_cast<std::size_t>(g.n()), limit, "chromatic_number_exact");
    if (g.n() == 0)
        return {0, {}};
    auto adj = detail::adjacency_masks(g);
    for (int k = detail::greedy_clique(adj);; ++k) {
        detail::KColorSearch search(adj, k);
        if (search.run()) {
            ChromaticResult r{k, Coloring(static_cast<std::size_t>(g.n()))};
            for (std::size_t v = 0; v < r.witness.size(); ++v)
                r.witness[v] = search.colors()[v] + 1;
            return r;
        }
    }
}

/// True iff g admits a proper coloring with at most k colors.
inline bool is_k_colorable(const Graph& g, int k, std::size_t limit = kDefaultChromaticLimit)
{
    require_limit(static_cast<std::size_t>(g.n()), limit, "is_k_colorable");
    if (g.n() == 0)
        return true;
    if (k <= 0)
        return false;
    auto adj = detail::adjacency_masks(g);
    detail::KColorSearch search(adj, k);
    return search.run();
}

} // namespace vbplab
