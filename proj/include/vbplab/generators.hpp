#pragma once

#include <concepts>
#include <map>
#include <span>
#include <vector>

#include "vbplab/errors.hpp"
#include "vbplab/graph.hpp"
#include "vbplab/rng.hpp"

namespace vbplab {

/// Erdos-Renyi G(n, p): pairs (u, v), u < v, in lexicographic order, one draw each.
inline Graph gen_gnp(int n, double edge_prob, std::uint64_t seed)
{
    require_input(n >= 0, "negative vertex count");
    require_input(edge_prob >= 0.0 && edge_prob <= 1.0, "edge probability outside [0,1]");
    CounterRng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rng.uniform01() < edge_prob)
                edges.emplace_back(u, v);
    return graph_from_edges(n, edges);
}

inline Graph gen_cycle(int n)
{
    require_input(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(v, v + 1);
    edges.emplace_back(1, n);
    return graph_from_edges(n, edges);
}

inline Graph gen_path(int n)
{
    require_input(n >= 1, "path needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(v, v + 1);
    return graph_from_edges(n, edges);
}

inline Graph gen_complete(int n)
{
    require_input(n >= 0, "negative vertex count");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            edges.emplace_back(u, v);
    return graph_from_edges(n, edges);
}

inline Graph gen_empty(int n)
{
    require_input(n >= 0, "negative vertex count");
    return Graph(n);
}

/// K_{k,k} minus a perfect matching, arriving a1, b1, a2, b2, ... (a_i = 2i-1, b_i = 2i).
/// Two-colorable, yet First-Fit needs k colors in this order.
inline Graph gen_crown(int k)
{
    require_input(k >= 2, "crown needs k >= 2");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (i != j)
                edges.emplace_back(2 * i - 1, 2 * j);
    return graph_from_edges(2 * k, edges);
}

inline bool is_connected(const Graph& g)
{
    if (g.n() <= 1)
        return true;
    std::vector<bool> seen(static_cast<std::size_t>(g.n()) + 1, false);
    std::vector<Vertex> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                ++count;
                stack.push_back(u);
            }
    }
    return count == g.n();
}

/// Every labeled graph on n vertices (2^(n choose 2) of them), in edge-mask order.
inline std::vector<Graph> all_labeled_graphs(int n)
{
    require_limit(static_cast<std::size_t>(n), 7, "all_labeled_graphs");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            pairs.emplace_back(u, v);
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    out.reserve(total);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask & (std::uint64_t{1} << b))
                edges.push_back(pairs[b]);
        out.push_back(graph_from_edges(n, edges));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Adversaries

/// Online adversary: given the algorithm's decisions so far (as canonical color
/// labels, 0 for the first color seen, 1 for the next new one, ...), emits the
/// next vertex. It sees decisions only, never the algorithm's internal state.
template <class Adv>
concept AdaptiveAdversary = requires(Adv a, const Adv& ca, std::span<const std::size_t> decisions) {
    { ca.n() } -> std::convertible_to<int>;
    { a.next_event(decisions) } -> std::same_as<OnlineVertexEvent>;
};

/// Replays a fixed graph in arrival order.
class ReplayAdversary {
public:
    explicit ReplayAdversary(Graph g) : g_(std::move(g)) {}
    [[nodiscard]] int n() const { return g_.n(); }
    OnlineVertexEvent next_event(std::span<const std::size_t> decisions)
    {
        return arrival_event(g_, static_cast<Vertex>(decisions.size()) + 1);
    }

private:
    Graph g_;
};

/// The crown family in paired order.
class CrownAdversary : public ReplayAdversary {
public:
    explicit CrownAdversary(int k) : ReplayAdversary(gen_crown(k)) {}
};

/// Reveals G(n, p) online, drawing each vertex's back-edges at its arrival from its own stream.
class GnpAdversary {
public:
    GnpAdversary(int n, double edge_prob, std::uint64_t seed) : n_(n), p_(edge_prob), rng_(seed)
    {
        require_input(n >= 0, "negative vertex count");
        require_input(edge_prob >= 0.0 && edge_prob <= 1.0, "edge probability outside [0,1]");
    }
    [[nodiscard]] int n() const { return n_; }
    OnlineVertexEvent next_event(std::span<const std::size_t> decisions)
    {
        OnlineVertexEvent e{static_cast<Vertex>(decisions.size()) + 1, {}};
        for (Vertex u = 1; u < e.id; ++u)
            if (rng_.uniform01() < p_)
                e.back_edges.push_back(u);
        return e;
    }

private:
    int n_;
    double p_;
    CounterRng rng_;
};

template <class C>
struct AdversaryRun {
    Graph graph;
    std::vector<C> coloring;
    std::size_t color_count = 0;
};

/// Alternates adversary events and algorithm decisions. Each decision is
/// checked against the revealed back-edges as it is made; the final coloring
/// is validated again against the realized graph.
template <AdaptiveAdversary Adv, OnlineColoringAlgorithm Alg>
auto run_adversary(Adv& adv, Alg& alg)
{
    using C = std::decay_t<decltype(alg.color(std::declval<const OnlineVertexEvent&>()))>;
    const int n = adv.n();
    std::vector<OnlineVertexEvent> events;
    std::vector<C> colors;
    std::vector<std::size_t> labels;
    std::map<C, std::size_t> label_of;
    for (Vertex v = 1; v <= n; ++v) {
        OnlineVertexEvent e = adv.next_event(std::span<const std::size_t>(labels));
        std::sort(e.back_edges.begin(), e.back_edges.end());
        try {
            check_event(e, v);
        } catch (const InputError& err) {
            throw ProtocolError(std::string("adversary emitted invalid event: ") + err.what());
        }
        if (std::adjacent_find(e.back_edges.begin(), e.back_edges.end()) != e.back_edges.end())
            throw ProtocolError("adversary repeated a back-edge at vertex " + std::to_string(v));
        C c = alg.color(e);
        for (Vertex u : e.back_edges)
            if (colors[static_cast<std::size_t>(u - 1)] == c)
                throw ProtocolError("algorithm gave vertex " + std::to_string(v) + " the color of neighbor " +
                                    std::to_string(u));
        auto [it, inserted] = label_of.emplace(c, label_of.size());
        labels.push_back(it->second);
        colors.push_back(c);
        events.push_back(std::move(e));
    }
    AdversaryRun<C> run{graph_from_events(n, events), std::move(colors), label_of.size()};
    if (!validate_coloring<C>(run.graph, std::span<const C>(run.coloring)))
        throw ProtocolError("realized coloring is infeasible");
    return run;
}

} // namespace vbplab
