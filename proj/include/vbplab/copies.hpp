#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "vbplab/chromatic.hpp"
#include "vbplab/errors.hpp"
#include "vbplab/fractional.hpp"
#include "vbplab/graph.hpp"
#include "vbplab/rational.hpp"

namespace vbplab {

/// G^t kept implicitly as (G, t): copy (v, k) for v in 1..n, k in 1..t.
struct CopiesInstance {
    Graph base;
    int t = 1;

    CopiesInstance(Graph g, int copies) : base(std::move(g)), t(copies)
    {
        require_input(t >= 1, "copies per vertex must be >= 1");
    }

    [[nodiscard]] int n() const { return base.n(); }
    // Vertex id of copy (v, k) in the explicit blow-up.
    [[nodiscard]] Vertex copy_id(Vertex v, int k) const { return (v - 1) * t + k; }
};

class CopiesColoring {
public:
    CopiesColoring() = default;
    CopiesColoring(int n, int t) : n_(n), t_(t), colors_(static_cast<std::size_t>(n) * static_cast<std::size_t>(t), -1)
    {
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int t() const { return t_; }

    ColorId& at(Vertex v, int k) { return colors_[index(v, k)]; }
    [[nodiscard]] ColorId at(Vertex v, int k) const { return colors_[index(v, k)]; }

    // The t colors of v's copies, in copy order.
    [[nodiscard]] std::span<const ColorId> copies_of(Vertex v) const
    {
        return std::span<const ColorId>(colors_).subspan(index(v, 1), static_cast<std::size_t>(t_));
    }

    [[nodiscard]] bool total() const
    {
        return std::all_of(colors_.begin(), colors_.end(), [](ColorId c) { return c >= 0; });
    }

    [[nodiscard]] std::vector<ColorId> distinct_colors() const
    {
        std::vector<ColorId> c(colors_);
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        return c;
    }

    friend bool operator==(const CopiesColoring&, const CopiesColoring&) = default;

private:
    int n_ = 0;
    int t_ = 0;
    std::vector<ColorId> colors_;

    [[nodiscard]] std::size_t index(Vertex v, int k) const
    {
        require_input(v >= 1 && v <= n_ && k >= 1 && k <= t_,
                      "copy (" + std::to_string(v) + "," + std::to_string(k) + ") out of range");
        return static_cast<std::size_t>(v - 1) * static_cast<std::size_t>(t_) + static_cast<std::size_t>(k - 1);
    }
};

/// Materializes G^t: K_t per vertex and K_{t,t} per edge; copy (v,k) -> (v-1)*t + k.
inline Graph blow_up_explicit(const CopiesInstance& inst)
{
    const int t = inst.t;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v <= inst.n(); ++v)
        for (int a = 1; a <= t; ++a)
            for (int b = a + 1; b <= t; ++b)
                edges.emplace_back(inst.copy_id(v, a), inst.copy_id(v, b));
    for (auto [u, v] : inst.base.edges())
        for (int a = 1; a <= t; ++a)
            for (int b = 1; b <= t; ++b)
                edges.emplace_back(inst.copy_id(u, a), inst.copy_id(v, b));
    return graph_from_edges(inst.n() * t, edges);
}

inline bool validate_copies_coloring(const CopiesInstance& inst, const CopiesColoring& f)
{
    require_input(f.n() == inst.n() && f.t() == inst.t && f.total(), "copies coloring is partial");
    std::vector<ColorId> mine, theirs;
    for (Vertex v = 1; v <= inst.n(); ++v) {
        auto own = f.copies_of(v);
        mine.assign(own.begin(), own.end());
        std::sort(mine.begin(), mine.end());
        if (std::adjacent_find(mine.begin(), mine.end()) != mine.end())
            return false;
        for (Vertex u : inst.base.neighbors(v)) {
            if (u > v)
                break;
            auto other = f.copies_of(u);
            theirs.assign(other.begin(), other.end());
            std::sort(theirs.begin(), theirs.end());
            std::vector<ColorId> common;
            std::set_intersection(mine.begin(), mine.end(), theirs.begin(), theirs.end(), std::back_inserter(common));
            if (!common.empty())
                return false;
        }
    }
    return true;
}

/// H_f(r): base vertices with some copy colored r.
inline VertexSet color_class_vertices(const CopiesInstance& inst, const CopiesColoring& f, ColorId r)
{
    VertexSet h;
    for (Vertex v = 1; v <= inst.n(); ++v) {
        auto c = f.copies_of(v);
        if (std::find(c.begin(), c.end(), r) != c.end())
            h.push_back(v);
    }
    return h;
}

/// Weight 1/t on every color class H_f(r); total value = (#colors)/t.
inline FractionalColoring fractional_coloring_from_copies(const CopiesInstance& inst, const CopiesColoring& f)
{
    require_input(validate_copies_coloring(inst, f), "fractional extraction needs a valid copies coloring");
    FractionalColoring fc;
    const Rational w(1, inst.t);
    for (ColorId r : f.distinct_colors()) {
        fc.weights[color_class_vertices(inst, f, r)] += w;
        fc.value += w;
    }
    return fc;
}

/// f(v, i) = (g(v), i), encoded as (g(v) - 1) * t + i.
inline CopiesColoring product_coloring(const CopiesInstance& inst, const Coloring& g)
{
    require_input(g.size() == static_cast<std::size_t>(inst.n()), "base coloring is partial");
    CopiesColoring f(inst.n(), inst.t);
    for (Vertex v = 1; v <= inst.n(); ++v) {
        require_input(g[static_cast<std::size_t>(v - 1)] >= 1, "product coloring expects colors >= 1");
        for (int i = 1; i <= inst.t; ++i)
            f.at(v, i) = (g[static_cast<std::size_t>(v - 1)] - 1) * inst.t + i;
    }
    return f;
}

struct CopiesChromaticResult {
    int chi = 0;
    CopiesColoring witness;
};

inline CopiesChromaticResult chromatic_number_copies_exact(const CopiesInstance& inst,
                                                           std::size_t limit = kDefaultChromaticLimit)
{
    require_limit(static_cast<std::size_t>(inst.n()) * static_cast<std::size_t>(inst.t), limit,
                  "chromatic_number_copies_exact");
    auto exact = chromatic_number_exact(blow_up_explicit(inst), limit);
    CopiesChromaticResult res{exact.chi, CopiesColoring(inst.n(), inst.t)};
    for (Vertex v = 1; v <= inst.n(); ++v)
        for (int k = 1; k <= inst.t; ++k)
            res.witness.at(v, k) = exact.witness[static_cast<std::size_t>(inst.copy_id(v, k) - 1)];
    return res;
}

/// Online copies-coloring algorithm: colors all t copies of the arriving vertex at once.
template <class A>
concept OnlineCcpAlgorithm = requires(A a, const OnlineVertexEvent& e) {
    { a.color_copies(e) } -> std::same_as<std::vector<ColorId>>;
};

/// Online First-Fit on copies: each arriving vertex's copies, in copy order,
/// take the smallest colors not used by earlier copies of the vertex or by
/// copies of its earlier neighbors.
class GreedyCcp {
public:
    GreedyCcp(int n, int t) : t_(t), colors_(static_cast<std::size_t>(n) + 1)
    {
        require_input(t >= 1, "copies per vertex must be >= 1");
    }

    std::vector<ColorId> color_copies(const OnlineVertexEvent& e)
    {
        require_input(e.id >= 1 && static_cast<std::size_t>(e.id) < colors_.size(), "vertex out of range");
        std::vector<ColorId> used;
        for (Vertex u : e.back_edges) {
            require_input(u >= 1 && u < e.id, "bad back-edge");
            const auto& c = colors_[static_cast<std::size_t>(u)];
            used.insert(used.end(), c.begin(), c.end());
        }
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        std::vector<ColorId> out;
        out.reserve(static_cast<std::size_t>(t_));
        ColorId c = 1;
        auto it = used.begin();
        while (out.size() < static_cast<std::size_t>(t_)) {
            while (it != used.end() && *it < c)
                ++it;
            if (it != used.end() && *it == c) {
                ++c;
                continue;
            }
            out.push_back(c++);
        }
        colors_[static_cast<std::size_t>(e.id)] = out;
        return out;
    }

    [[nodiscard]] int t() const { return t_; }

private:
    int t_;
    std::vector<std::vector<ColorId>> colors_;
};

inline CopiesColoring greedy_online_ccp(const CopiesInstance& inst)
{
    GreedyCcp alg(inst.n(), inst.t);
    CopiesColoring f(inst.n(), inst.t);
    for (Vertex v = 1; v <= inst.n(); ++v) {
        auto c = alg.color_copies(arrival_event(inst.base, v));
        for (int k = 1; k <= inst.t; ++k)
            f.at(v, k) = c[static_cast<std::size_t>(k - 1)];
    }
    return f;
}

struct SandwichReport {
    Rational chi_f;
    Rational chi_t_over_t;
    int chi = 0;
    int chi_t = 0;
    bool holds = false;
};

/// chi_f(G) <= chi(G^t)/t <= chi(G), all three computed by exact oracles.
inline SandwichReport check_sandwich(const CopiesInstance& inst, std::size_t chromatic_limit = kDefaultChromaticLimit,
                                     std::size_t lp_limit = kDefaultLpLimit)
{
    SandwichReport r;
    r.chi_f = fractional_chromatic_exact(inst.base, lp_limit).chi_f;
    r.chi = chromatic_number_exact(inst.base, chromatic_limit).chi;
    r.chi_t = chromatic_number_copies_exact(inst, chromatic_limit).chi;
    r.chi_t_over_t = Rational(r.chi_t, inst.t);
    r.holds = r.chi_f <= r.chi_t_over_t && r.chi_t_over_t <= Rational(r.chi);
    return r;
}

} // namespace vbplab
