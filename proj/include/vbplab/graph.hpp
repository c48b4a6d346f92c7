#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vbplab/errors.hpp"

namespace vbplab {

using Vertex = int;            // 1-based; also the arrival position
using ColorId = std::int64_t;  // opaque, non-negative

// Total on 1..n, stored at index v-1.
using Coloring = std::vector<ColorId>;

/// Simple undirected graph whose vertex ids double as the online arrival order.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1)
    {
        require_input(n >= 0, "negative vertex count");
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t m() const { return edges_.size(); }

    // Sorted (u < v), deduplicated.
    [[nodiscard]] const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    // Sorted ascending.
    [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const
    {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    // Neighbors that arrived before v.
    [[nodiscard]] std::vector<Vertex> back_neighbors(Vertex v) const
    {
        const auto& nb = neighbors(v);
        return {nb.begin(), std::lower_bound(nb.begin(), nb.end(), v)};
    }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const
    {
        const auto& nb = neighbors(u);
        check_vertex(v);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    void check_vertex(Vertex v) const
    {
        require_input(v >= 1 && v <= n_, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;

    friend Graph graph_from_edges(int, std::span<const std::pair<Vertex, Vertex>>);
};

inline Graph graph_from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        require_input(u != v, "self-loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    for (auto [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_)
        std::sort(nb.begin(), nb.end());
    return g;
}

inline Graph graph_from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
{
    return graph_from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

inline bool is_independent_set(const Graph& g, std::span<const Vertex> s)
{
    for (Vertex v : s)
        g.check_vertex(v);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] != s[j] && g.adjacent(s[i], s[j]))
                return false;
    return true;
}

inline bool is_independent_set(const Graph& g, std::initializer_list<Vertex> s)
{
    return is_independent_set(g, std::span<const Vertex>(s.begin(), s.size()));
}

/// Feasibility of an arbitrary coloring; the color type only needs equality.
template <std::equality_comparable C>
bool validate_coloring(const Graph& g, std::span<const C> coloring)
{
    require_input(coloring.size() == static_cast<std::size_t>(g.n()),
                  "coloring is partial: " + std::to_string(coloring.size()) + " of " + std::to_string(g.n()) +
                      " vertices assigned");
    for (auto [u, v] : g.edges())
        if (coloring[static_cast<std::size_t>(u - 1)] == coloring[static_cast<std::size_t>(v - 1)])
            return false;
    return true;
}

inline bool validate_coloring(const Graph& g, const Coloring& coloring)
{
    for (ColorId c : coloring)
        require_input(c >= 0, "negative color id");
    return validate_coloring<ColorId>(g, std::span<const ColorId>(coloring));
}

template <class C>
std::size_t count_colors(std::span<const C> coloring)
{
    std::vector<C> c(coloring.begin(), coloring.end());
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

inline std::size_t count_colors(const Coloring& c) { return count_colors<ColorId>(std::span<const ColorId>(c)); }

// Smallest color >= 1 not in `used` (which need not be sorted).
inline ColorId smallest_free_color(std::vector<ColorId> used)
{
    std::sort(used.begin(), used.end());
    ColorId c = 1;
    for (ColorId u : used) {
        if (u == c)
            ++c;
        else if (u > c)
            break;
    }
    return c;
}

/// First-Fit online coloring in arrival order; colors start at 1.
inline Coloring greedy_online_coloring(const Graph& g)
{
    Coloring col(static_cast<std::size_t>(g.n()));
    std::vector<ColorId> used;
    for (Vertex v = 1; v <= g.n(); ++v) {
        used.clear();
        for (Vertex u : g.neighbors(v))
            if (u < v)
                used.push_back(col[static_cast<std::size_t>(u - 1)]);
        col[static_cast<std::size_t>(v - 1)] = smallest_free_color(used);
    }
    return col;
}

// ---------------------------------------------------------------------------
// Online arrival events

/// A vertex arriving online together with its edges to earlier vertices.
struct OnlineVertexEvent {
    Vertex id = 0;
    std::vector<Vertex> back_edges;  // sorted, each in 1..id-1

    friend bool operator==(const OnlineVertexEvent&, const OnlineVertexEvent&) = default;
};

/// Online coloring algorithm: one irrevocable color per arriving vertex.
template <class A>
concept OnlineColoringAlgorithm = requires(A a, const OnlineVertexEvent& e) {
    { a.color(e) } -> std::equality_comparable;
};

/// Online First-Fit coloring, usable against adaptive adversaries.
class GreedyColoring {
public:
    ColorId color(const OnlineVertexEvent& e)
    {
        if (colors_.size() < static_cast<std::size_t>(e.id))
            colors_.resize(static_cast<std::size_t>(e.id), 0);
        std::vector<ColorId> used;
        for (Vertex u : e.back_edges)
            used.push_back(colors_[static_cast<std::size_t>(u - 1)]);
        ColorId c = smallest_free_color(std::move(used));
        colors_[static_cast<std::size_t>(e.id - 1)] = c;
        return c;
    }

private:
    std::vector<ColorId> colors_;
};

/// Opens a brand-new color for every vertex.
class FreshColoring {
public:
    ColorId color(const OnlineVertexEvent&) { return ++last_; }

private:
    ColorId last_ = 0;
};

inline void check_event(const OnlineVertexEvent& e, Vertex expected_id)
{
    require_input(e.id == expected_id,
                  "event for vertex " + std::to_string(e.id) + " arrived, expected " + std::to_string(expected_id));
    for (Vertex u : e.back_edges)
        require_input(u >= 1 && u < e.id, "back-edge " + std::to_string(u) + " of vertex " + std::to_string(e.id) +
                                              " does not point to an earlier vertex");
}

inline OnlineVertexEvent arrival_event(const Graph& g, Vertex v) { return {v, g.back_neighbors(v)}; }

inline std::vector<OnlineVertexEvent> arrival_events(const Graph& g)
{
    std::vector<OnlineVertexEvent> ev;
    ev.reserve(static_cast<std::size_t>(g.n()));
    for (Vertex v = 1; v <= g.n(); ++v)
        ev.push_back(arrival_event(g, v));
    return ev;
}

inline Graph graph_from_events(int n, std::span<const OnlineVertexEvent> events)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex expect = 1;
    for (const auto& e : events) {
        check_event(e, expect++);
        for (Vertex u : e.back_edges)
            edges.emplace_back(u, e.id);
    }
    return graph_from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Text format:
//   # comment
//   g <n> <m>
//   t <copies>        (copies instances only)
//   e <u> <v>         (m lines, 1-based)

struct GraphFile {
    Graph graph;
    int t = 0;  // 0 when the file carries no copies header
};

inline GraphFile read_graph_file(std::istream& in)
{
    std::string line;
    int n = -1;
    std::size_t m = 0;
    int t = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue;
        auto where = " at line " + std::to_string(lineno);
        if (tag == "g") {
            require_input(n < 0, "duplicate graph header" + where);
            require_input(static_cast<bool>(ls >> n >> m) && n >= 0, "bad graph header" + where);
        } else if (tag == "t") {
            require_input(static_cast<bool>(ls >> t) && t >= 1, "bad copies header" + where);
        } else if (tag == "e") {
            require_input(n >= 0, "edge before graph header" + where);
            Vertex u = 0, v = 0;
            require_input(static_cast<bool>(ls >> u >> v), "bad edge line" + where);
            edges.emplace_back(u, v);
        } else {
            throw InputError("unknown line tag '" + tag + "'" + where);
        }
        std::string extra;
        require_input(!(ls >> extra), "trailing tokens" + where);
    }
    require_input(n >= 0, "missing graph header");
    require_input(edges.size() == m, "header announces " + std::to_string(m) + " edges, file has " +
                                         std::to_string(edges.size()));
    return {graph_from_edges(n, edges), t};
}

inline void write_graph_file(std::ostream& out, const Graph& g, int t = 0)
{
    out << "g " << g.n() << ' ' << g.m() << '\n';
    if (t > 0)
        out << "t " << t << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
}

} // namespace vbplab
