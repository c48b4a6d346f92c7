#pragma once

// Test-only brute-force oracles. These deliberately share no search code with
// the library: plain enumeration over colorings, subsets and set partitions.

#include <cstdint>
#include <functional>
#include <vector>

#include "vbplab/graph.hpp"
#include "vbplab/rational.hpp"
#include "vbplab/vbp.hpp"

namespace oracle {

using namespace vbplab;

// Does g admit a proper coloring with colors 0..k-1? Tries all k^n assignments.
inline bool k_colorable_brute(const Graph& g, int k)
{
    const int n = g.n();
    if (n == 0)
        return true;
    if (k == 0)
        return false;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (c[static_cast<std::size_t>(u - 1)] == c[static_cast<std::size_t>(v - 1)]) {
                ok = false;
                break;
            }
        if (ok)
            return true;
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] == k)
            c[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            return false;
    }
}

inline int chromatic_brute(const Graph& g)
{
    int k = 0;
    while (!k_colorable_brute(g, k))
        ++k;
    return k;
}

inline bool subset_fits(const VbpInstance& w, const std::vector<std::size_t>& items)
{
    for (std::size_t j = 0; j < w.d; ++j) {
        Rational s(0);
        for (std::size_t i : items)
            s += w.items[i].coords[j];
        if (s > Rational(1))
            return false;
    }
    return true;
}

// Minimum bins by enumerating every set partition (restricted growth strings).
inline std::size_t opt_brute(const VbpInstance& w)
{
    const std::size_t m = w.items.size();
    if (m == 0)
        return 0;
    std::size_t best = m;
    std::vector<std::size_t> block(m, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (used >= best)
            return;
        if (i == m) {
            std::vector<std::vector<std::size_t>> bins(used);
            for (std::size_t x = 0; x < m; ++x)
                bins[block[x]].push_back(x);
            for (const auto& b : bins)
                if (!subset_fits(w, b))
                    return;
            best = used;
            return;
        }
        for (std::size_t b = 0; b <= used; ++b) {
            block[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return best;
}

// Certificate check for the covering LP optimum: y is a feasible dual
// (sum of y over every independent set, found by subset enumeration, is <= 1)
// and its total equals `value`; weak duality then pins the optimum.
inline bool dual_certifies(const Graph& g, const std::vector<Rational>& y, const Rational& value)
{
    Rational total(0);
    for (const auto& v : y) {
        if (v < Rational(0))
            return false;
        total += v;
    }
    if (total != value)
        return false;
    for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
        std::vector<Vertex> s;
        Rational sum(0);
        for (int v = 0; v < g.n(); ++v)
            if (mask & (1u << v)) {
                s.push_back(v + 1);
                sum += y[static_cast<std::size_t>(v)];
            }
        if (is_independent_set(g, s) && sum > Rational(1))
            return false;
    }
    return true;
}

} // namespace oracle
