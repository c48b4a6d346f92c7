#pragma once

#include <vector>

#include "vbplab/copies.hpp"
#include "vbplab/errors.hpp"
#include "vbplab/graph.hpp"
#include "vbplab/vbp.hpp"

namespace vbplab {

/// Streaming coloring -> VBP transducer with d = n.
///
/// Vertex i becomes the item with coordinate i equal to 1, coordinate j equal
/// to 1/n for every earlier neighbor j, and 0 elsewhere. A set of items fits
/// in one bin exactly when the corresponding vertices are independent, so a
/// packing is a coloring and vice versa. Output i depends only on events 1..i.
class ColoringToVbp {
public:
    explicit ColoringToVbp(int n) : n_(n) { require_input(n >= 1, "reduction needs n >= 1"); }

    VbpItem push(const OnlineVertexEvent& e)
    {
        require_input(next_ <= n_, "more than n = " + std::to_string(n_) + " events");
        check_event(e, next_);
        ++next_;
        VbpItem item{std::vector<Rational>(static_cast<std::size_t>(n_), Rational(0))};
        const Rational small(1, n_);
        for (Vertex j : e.back_edges)
            item.coords[static_cast<std::size_t>(j - 1)] = small;
        item.coords[static_cast<std::size_t>(e.id - 1)] = 1;
        return item;
    }

    [[nodiscard]] int dimension() const { return n_; }

private:
    int n_;
    Vertex next_ = 1;
};

/// Copies variant: every event yields t identical items, still with d = n.
class CcpToVbp {
public:
    CcpToVbp(int n, int t) : base_(n), t_(t) { require_input(t >= 1, "copies per vertex must be >= 1"); }

    std::vector<VbpItem> push(const OnlineVertexEvent& e)
    {
        return std::vector<VbpItem>(static_cast<std::size_t>(t_), base_.push(e));
    }

    [[nodiscard]] int copies() const { return t_; }

private:
    ColoringToVbp base_;
    int t_;
};

inline VbpInstance coloring_to_vbp(int n, std::span<const OnlineVertexEvent> events)
{
    ColoringToVbp red(n);
    VbpInstance inst;
    inst.d = static_cast<std::size_t>(n);
    for (const auto& e : events)
        inst.items.push_back(red.push(e));
    return inst;
}

inline VbpInstance coloring_to_vbp(const Graph& g)
{
    auto ev = arrival_events(g);
    return coloring_to_vbp(g.n(), ev);
}

inline VbpInstance ccp_to_vbp(int n, int t, std::span<const OnlineVertexEvent> events)
{
    CcpToVbp red(n, t);
    VbpInstance inst;
    inst.d = static_cast<std::size_t>(n);
    for (const auto& e : events)
        for (auto& item : red.push(e))
            inst.items.push_back(std::move(item));
    return inst;
}

inline VbpInstance ccp_to_vbp(const CopiesInstance& inst)
{
    auto ev = arrival_events(inst.base);
    return ccp_to_vbp(inst.n(), inst.t, ev);
}

/// Item (v-1)*t + (k-1) of a ccp_to_vbp instance is copy (v, k); its color is its 1-based bin number.
inline CopiesColoring packing_to_copies_coloring(const CopiesInstance& inst, const PackingState& p)
{
    auto vbp = ccp_to_vbp(inst);
    require_input(validate_packing(vbp, p), "packing is not a feasible complete packing of the reduced instance");
    CopiesColoring f(inst.n(), inst.t);
    for (std::size_t b = 0; b < p.bins.size(); ++b)
        for (std::size_t i : p.bins[b].items) {
            auto v = static_cast<Vertex>(i / static_cast<std::size_t>(inst.t)) + 1;
            auto k = static_cast<int>(i % static_cast<std::size_t>(inst.t)) + 1;
            f.at(v, k) = static_cast<ColorId>(b) + 1;
        }
    return f;
}

/// True iff no bin holds two copies of the same base vector.
inline bool at_most_one_copy_per_bin(const CopiesInstance& inst, const PackingState& p)
{
    for (const auto& bin : p.bins) {
        std::vector<bool> seen(static_cast<std::size_t>(inst.n()), false);
        for (std::size_t i : bin.items) {
            auto v = i / static_cast<std::size_t>(inst.t);
            if (seen[v])
                return false;
            seen[v] = true;
        }
    }
    return true;
}

/// Wraps an online VBP algorithm as an online CCP algorithm: each arriving
/// vertex's t copies are reduced to items and fed in copy order; the 1-based
/// bin number becomes the color. Placements are re-checked against exact
/// loads and an infeasible one raises ProtocolError.
template <OnlineVbpAlgorithm A>
class VbpBackedCcp {
public:
    VbpBackedCcp(A alg, int n, int t) : alg_(std::move(alg)), red_(n, t) {}

    std::vector<ColorId> color_copies(const OnlineVertexEvent& e)
    {
        std::vector<ColorId> out;
        for (const auto& item : red_.push(e)) {
            std::size_t b = alg_.place(item);
            if (b > loads_.size())
                throw ProtocolError("VBP algorithm skipped bin index " + std::to_string(loads_.size()));
            if (b == loads_.size())
                loads_.emplace_back();
            if (!fits(loads_[b], item))
                throw ProtocolError("VBP algorithm overfilled bin " + std::to_string(b));
            if (loads_[b].empty())
                loads_[b].assign(item.dim(), Rational(0));
            for (std::size_t j = 0; j < item.dim(); ++j)
                loads_[b][j] += item.coords[j];
            out.push_back(static_cast<ColorId>(b) + 1);
        }
        return out;
    }

    [[nodiscard]] std::size_t bins() const { return loads_.size(); }

private:
    A alg_;
    CcpToVbp red_;
    std::vector<std::vector<Rational>> loads_;
};

template <OnlineVbpAlgorithm A>
VbpBackedCcp<A> vbp_algorithm_to_ccp_algorithm(A alg, int n, int t)
{
    return VbpBackedCcp<A>(std::move(alg), n, t);
}

/// Runs any online CCP algorithm over the arrival order of inst.
template <OnlineCcpAlgorithm A>
CopiesColoring run_online_ccp(A& alg, const CopiesInstance& inst)
{
    CopiesColoring f(inst.n(), inst.t);
    for (Vertex v = 1; v <= inst.n(); ++v) {
        auto c = alg.color_copies(arrival_event(inst.base, v));
        if (c.size() != static_cast<std::size_t>(inst.t))
            throw ProtocolError("CCP algorithm returned " + std::to_string(c.size()) + " colors for " +
                                std::to_string(inst.t) + " copies");
        for (int k = 1; k <= inst.t; ++k)
            f.at(v, k) = c[static_cast<std::size_t>(k - 1)];
    }
    return f;
}

} // namespace vbplab
