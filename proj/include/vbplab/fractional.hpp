#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

#include "vbplab/chromatic.hpp"
#include "vbplab/errors.hpp"
#include "vbplab/graph.hpp"
#include "vbplab/rational.hpp"

namespace vbplab {

inline constexpr std::size_t kDefaultLpLimit = 12;

using VertexSet = std::vector<Vertex>;  // sorted ascending

/// Weights on independent sets covering every vertex to extent >= 1.
struct FractionalColoring {
    std::map<VertexSet, Rational> weights;
    Rational value;
};

/// Checks the covering LP constraints exactly and that `value` equals the weight sum.
inline bool validate_fractional_coloring(const Graph& g, const FractionalColoring& fc)
{
    std::vector<Rational> cover(static_cast<std::size_t>(g.n()) + 1);
    Rational total;
    for (const auto& [set, w] : fc.weights) {
        if (w < Rational(0) || !is_independent_set(g, set))
            return false;
        for (Vertex v : set)
            cover[static_cast<std::size_t>(v)] += w;
        total += w;
    }
    if (total != fc.value)
        return false;
    for (Vertex v = 1; v <= g.n(); ++v)
        if (cover[static_cast<std::size_t>(v)] < Rational(1))
            return false;
    return true;
}

/// All maximal independent sets (maximal cliques of the complement), as bitmasks over 0-based ids.
inline std::vector<std::uint64_t> maximal_independent_sets(const Graph& g)
{
    using detail::Mask;
    auto adj = detail::adjacency_masks(g);
    const std::size_t n = adj.size();
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<Mask> non_adj(n);
    for (std::size_t v = 0; v < n; ++v)
        non_adj[v] = all & ~adj[v] & ~(Mask{1} << v);

    std::vector<Mask> out;
    // Bron-Kerbosch with Tomita pivoting on the complement graph.
    auto bk = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
        if (p == 0 && x == 0) {
            out.push_back(r);
            return;
        }
        Mask px = p | x;
        int pivot = std::countr_zero(px);
        int best = -1;
        for (Mask it = px; it; it &= it - 1) {
            int u = std::countr_zero(it);
            int cnt = std::popcount(p & non_adj[static_cast<std::size_t>(u)]);
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        for (Mask cand = p & ~non_adj[static_cast<std::size_t>(pivot)]; cand; cand &= cand - 1) {
            int v = std::countr_zero(cand);
            Mask bit = Mask{1} << v;
            self(self, r | bit, p & non_adj[static_cast<std::size_t>(v)], x & non_adj[static_cast<std::size_t>(v)]);
            p &= ~bit;
            x |= bit;
        }
    };
    if (n > 0)
        bk(bk, 0, all, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Dense tableau simplex over exact rationals for
//   max 1^T y  s.t.  M y <= 1, y >= 0
// where M is the (sets x vertices) incidence matrix. b = 1 >= 0, so the slack
// basis is feasible and no phase one is needed. Bland's rule guarantees
// termination. On exit the objective row's slack entries hold the optimal
// primal covering weights.
class PackingSimplex {
public:
    PackingSimplex(const std::vector<Mask>& sets, std::size_t n_vars)
        : rows_(sets.size()), vars_(n_vars), cols_(n_vars + sets.size()),
          tab_(rows_ + 1, std::vector<Rational>(cols_ + 1)), basis_(rows_)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < vars_; ++j)
                if (sets[i] & (Mask{1} << j))
                    tab_[i][j] = 1;
            tab_[i][vars_ + i] = 1;
            tab_[i][cols_] = 1;
            basis_[i] = vars_ + i;
        }
        for (std::size_t j = 0; j < vars_; ++j)
            tab_[rows_][j] = -1;
    }

    void solve()
    {
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (tab_[rows_][j] < Rational(0)) {
                    enter = j;
                    break;
                }
            if (enter == cols_)
                return;
            std::size_t leave = rows_;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (tab_[i][enter] <= Rational(0))
                    continue;
                Rational ratio = tab_[i][cols_] / tab_[i][enter];
                if (leave == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            // The feasible region is bounded (every y_v appears in some row with coefficient 1).
            if (leave == rows_)
                throw std::logic_error("packing LP unbounded");
            pivot(leave, enter);
        }
    }

    [[nodiscard]] Rational objective() const { return tab_[rows_][cols_]; }
    [[nodiscard]] Rational set_weight(std::size_t row) const { return tab_[rows_][vars_ + row]; }
    [[nodiscard]] std::vector<Rational> vertex_values() const
    {
        std::vector<Rational> y(vars_);
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < vars_)
                y[basis_[i]] = tab_[i][cols_];
        return y;
    }

private:
    std::size_t rows_, vars_, cols_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<std::size_t> basis_;

    void pivot(std::size_t r, std::size_t c)
    {
        Rational pv = tab_[r][c];
        for (auto& x : tab_[r])
            x /= pv;
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == r || tab_[i][c].is_zero())
                continue;
            Rational f = tab_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (!tab_[r][j].is_zero())
                    tab_[i][j] -= f * tab_[r][j];
        }
        basis_[r] = c;
    }
};

} // namespace detail

struct FractionalResult {
    Rational chi_f;
    FractionalColoring witness;
    // Optimal dual: vertex weights y with sum over any independent set <= 1.
    std::vector<Rational> dual;
};

/// Exact fractional chromatic number over maximal independent sets.
inline FractionalResult fractional_chromatic_exact(const Graph& g, std::size_t limit = kDefaultLpLimit)
{
    require_limit(static_cast<std::size_t>(g.n()), limit, "fractional_chromatic_exact");
    FractionalResult res;
    if (g.n() == 0)
        return res;
    auto sets = maximal_independent_sets(g);
    detail::PackingSimplex lp(sets, static_cast<std::size_t>(g.n()));
    lp.solve();
    res.chi_f = lp.objective();
    res.dual = lp.vertex_values();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        Rational w = lp.set_weight(i);
        if (w.is_zero())
            continue;
        VertexSet s;
        for (auto m = sets[i]; m; m &= m - 1)
            s.push_back(std::countr_zero(m) + 1);
        res.witness.weights[s] += w;
        res.witness.value += w;
    }
    return res;
}

} // namespace vbplab
