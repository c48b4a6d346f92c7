#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "vbplab/copies.hpp"
#include "vbplab/errors.hpp"
#include "vbplab/graph.hpp"
#include "vbplab/rational.hpp"
#include "vbplab/rng.hpp"

namespace vbplab {

/// A color of the simulating algorithm: either one borrowed from A, or the
/// special fallback color "s:i" reserved for a failed step i.
struct PoolColor {
    ColorId id = 0;
    bool special = false;

    friend auto operator<=>(const PoolColor&, const PoolColor&) = default;
    [[nodiscard]] std::string str() const { return special ? "s:" + std::to_string(id) : std::to_string(id); }
};

/// p = min(1, 2 ln(n) / t); n = 1 is defined as p = 1.
inline double sampling_probability(int n, int t)
{
    require_input(n >= 1 && t >= 1, "sampling probability needs n >= 1, t >= 1");
    if (n == 1)
        return 1.0;
    return std::min(1.0, 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(t));
}

struct PoolState {
    std::set<ColorId> colors_used_by_a;  // R^i(A)
    std::set<ColorId> pool;              // R^i(B), a subset of R^i(A)
    std::vector<int> fail_steps;
    std::vector<PoolColor> b_assignment;  // index v-1
    double p = 1.0;
    int t = 1;
    CounterRng rng;
};

/// Admits each new color to the pool with probability p, one draw per color
/// in ascending id order. Colors already used by A are rejected.
inline void sample_pool_in_place(PoolState& state, std::vector<ColorId> new_colors)
{
    std::sort(new_colors.begin(), new_colors.end());
    new_colors.erase(std::unique(new_colors.begin(), new_colors.end()), new_colors.end());
    for (ColorId r : new_colors) {
        require_input(!state.colors_used_by_a.contains(r), "color " + std::to_string(r) + " is not new");
        state.colors_used_by_a.insert(r);
        if (state.rng.uniform01() < state.p)
            state.pool.insert(r);
    }
}

inline PoolState sample_pool(PoolState state, std::vector<ColorId> new_colors)
{
    sample_pool_in_place(state, std::move(new_colors));
    return state;
}

struct StepRecord {
    std::vector<ColorId> copy_colors;  // A's colors for this vertex, copy order
    std::vector<ColorId> new_colors;   // R^i(A) \ R^{i-1}(A), ascending
    std::vector<ColorId> hits;         // P_i, ascending
    bool failed = false;
    PoolColor color;
};

struct SimulationStats {
    std::size_t colors_a = 0;
    std::size_t colors_b = 0;
    std::size_t fails = 0;
    std::size_t pool_size = 0;
    std::vector<bool> pool_hit;  // per step: P_i non-empty
};

/// Online coloring algorithm B built from an online copies-coloring algorithm A.
///
/// Each arriving vertex is handed to A as t copies. Every color A uses for the
/// first time enters B's pool with probability p. The vertex then takes the
/// smallest pooled color among its copies' colors; if none is pooled the step
/// fails and the vertex gets the special color s:i. Since H_B(r) is contained
/// in H_A(r), which is independent, B's coloring is always feasible.
template <OnlineCcpAlgorithm A>
class PoolSamplingColoring {
public:
    PoolSamplingColoring(A alg, int n, int t, std::uint64_t seed)
        : PoolSamplingColoring(std::move(alg), n, t, seed, sampling_probability(n, t))
    {
    }

    PoolSamplingColoring(A alg, int n, int t, std::uint64_t seed, double p)
        : alg_(std::move(alg)), n_(n), a_colors_(static_cast<std::size_t>(n) + 1)
    {
        require_input(n >= 1 && t >= 1, "algorithm B needs n >= 1 and t >= 1");
        require_input(p >= 0.0 && p <= 1.0, "sampling probability outside [0,1]");
        state_.p = p;
        state_.t = t;
        state_.rng = CounterRng(seed);
    }

    PoolColor color(const OnlineVertexEvent& e)
    {
        require_input(e.id <= n_, "more than n = " + std::to_string(n_) + " vertices");
        check_event(e, static_cast<Vertex>(state_.b_assignment.size()) + 1);
        StepRecord rec;
        rec.copy_colors = alg_.color_copies(e);
        check_copies(e, rec.copy_colors);

        std::vector<ColorId> sorted = rec.copy_colors;
        std::sort(sorted.begin(), sorted.end());
        for (ColorId r : sorted)
            if (!state_.colors_used_by_a.contains(r))
                rec.new_colors.push_back(r);
        sample_pool_in_place(state_, rec.new_colors);

        for (ColorId r : sorted)
            if (state_.pool.contains(r))
                rec.hits.push_back(r);
        if (!rec.hits.empty()) {
            rec.color = PoolColor{rec.hits.front(), false};
        } else {
            rec.failed = true;
            rec.color = PoolColor{e.id, true};
            state_.fail_steps.push_back(e.id);
        }
        state_.b_assignment.push_back(rec.color);
        a_colors_[static_cast<std::size_t>(e.id)] = std::move(sorted);
        steps_.push_back(std::move(rec));
        return steps_.back().color;
    }

    [[nodiscard]] const PoolState& state() const { return state_; }
    [[nodiscard]] const std::vector<StepRecord>& steps() const { return steps_; }
    [[nodiscard]] const A& inner() const { return alg_; }

    [[nodiscard]] SimulationStats stats() const
    {
        SimulationStats s;
        s.colors_a = state_.colors_used_by_a.size();
        s.colors_b = count_colors<PoolColor>(std::span<const PoolColor>(state_.b_assignment));
        s.fails = state_.fail_steps.size();
        s.pool_size = state_.pool.size();
        for (const auto& r : steps_)
            s.pool_hit.push_back(!r.hits.empty());
        return s;
    }

private:
    A alg_;
    int n_;
    PoolState state_;
    std::vector<StepRecord> steps_;
    std::vector<std::vector<ColorId>> a_colors_;  // sorted colors of each vertex's copies

    void check_copies(const OnlineVertexEvent& e, const std::vector<ColorId>& c) const
    {
        if (c.size() != static_cast<std::size_t>(state_.t))
            throw ProtocolError("A colored " + std::to_string(c.size()) + " copies of vertex " + std::to_string(e.id) +
                                ", expected " + std::to_string(state_.t));
        std::vector<ColorId> s = c;
        std::sort(s.begin(), s.end());
        if (s.front() < 0)
            throw ProtocolError("A used a negative color id");
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ProtocolError("A reused a color among copies of vertex " + std::to_string(e.id));
        for (Vertex u : e.back_edges) {
            const auto& other = a_colors_[static_cast<std::size_t>(u)];
            std::vector<ColorId> common;
            std::set_intersection(s.begin(), s.end(), other.begin(), other.end(), std::back_inserter(common));
            if (!common.empty())
                throw ProtocolError("A gave adjacent vertices " + std::to_string(u) + " and " + std::to_string(e.id) +
                                    " a common color");
        }
    }
};

struct AlgorithmBRun {
    std::vector<PoolColor> coloring;
    SimulationStats stats;
    PoolState state;
    std::vector<StepRecord> steps;
};

/// Runs B over the arrival order of g with a freshly constructed A.
template <OnlineCcpAlgorithm A>
AlgorithmBRun run_algorithm_b(const Graph& g, A alg, int t, std::uint64_t seed)
{
    PoolSamplingColoring<A> b(std::move(alg), g.n(), t, seed);
    for (Vertex v = 1; v <= g.n(); ++v)
        b.color(arrival_event(g, v));
    return {b.state().b_assignment, b.stats(), b.state(), b.steps()};
}

template <OnlineCcpAlgorithm A>
AlgorithmBRun run_algorithm_b(const Graph& g, A alg, int t, std::uint64_t seed, double p)
{
    PoolSamplingColoring<A> b(std::move(alg), g.n(), t, seed, p);
    for (Vertex v = 1; v <= g.n(); ++v)
        b.color(arrival_event(g, v));
    return {b.state().b_assignment, b.stats(), b.state(), b.steps()};
}

// ---------------------------------------------------------------------------
// Arithmetic bounds

struct FailBoundReport {
    double p = 0;
    double per_step_fail = 0;  // (1 - p)^t
    double union_bound = 0;    // n * (1 - p)^t
    bool bound_holds = false;  // (1 - p)^t <= 1/n^2
};

inline constexpr double kBoundRelTol = 1e-12;

inline FailBoundReport fail_probability_bound(int n, int t)
{
    require_input(n >= 2 && t >= 1, "fail bound needs n >= 2, t >= 1");
    FailBoundReport r;
    r.p = sampling_probability(n, t);
    r.per_step_fail = r.p >= 1.0 ? 0.0 : std::exp(static_cast<double>(t) * std::log1p(-r.p));
    r.union_bound = static_cast<double>(n) * r.per_step_fail;
    const double target = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    r.bound_holds = r.per_step_fail <= target * (1.0 + kBoundRelTol);
    return r;
}

struct ColorBoundReport {
    double proof_bound = 0;       // (alpha*t*chi + q)(2 ln n)/t + 1
    double simplified_bound = 0;  // 2 ln(n) * alpha * chi + 3
    bool holds = false;
};

/// Expected-colors bound for B given an (alpha, q(n))-competitive A. Requires t >= q(n) ln n.
inline ColorBoundReport expected_colors_bound(const Rational& alpha, const Rational& q_n, int n, int t, int chi_g)
{
    require_input(n >= 1 && t >= 1 && chi_g >= 0, "bad arguments to expected_colors_bound");
    const double ln_n = std::log(static_cast<double>(n));
    const double q = q_n.to_double();
    const double a = alpha.to_double();
    require_input(static_cast<double>(t) >= q * ln_n,
                  "hypothesis t >= q(n) ln n violated: t = " + std::to_string(t) + ", q(n) ln n = " +
                      std::to_string(q * ln_n));
    ColorBoundReport r;
    r.proof_bound = (a * t * chi_g + q) * (2.0 * ln_n) / t + 1.0;
    r.simplified_bound = 2.0 * ln_n * a * chi_g + 3.0;
    r.holds = r.proof_bound <= r.simplified_bound * (1.0 + kBoundRelTol);
    return r;
}

/// t = max(1, ceil(q(n) ln n)) for wrapping an (alpha, q(n))-competitive algorithm.
inline int adapter_copies(const Rational& q_n, int n)
{
    double v = q_n.to_double() * std::log(static_cast<double>(n));
    return std::max(1, static_cast<int>(std::ceil(v - 1e-12)));
}

// ---------------------------------------------------------------------------
// Monte-Carlo verification

struct TrialRecord {
    std::uint64_t seed = 0;
    std::size_t colors_a = 0;
    std::size_t colors_b = 0;
    std::size_t fails = 0;
    std::size_t pool_size = 0;
    bool feasible = false;
    bool accounting_ok = false;    // colors_b <= pool + fails
    bool fail_iff_miss_ok = false; // failed step <=> P_i empty
    bool classes_ok = false;       // H_B(r) within H_A(r), special classes singletons
};

struct MonteCarloReport {
    std::size_t trials = 0;
    double p = 0;
    double mean_colors_a = 0;
    double mean_colors_b = 0;
    double mean_pool = 0;
    double mean_fails = 0;
    double sd_colors_b = 0;
    double stderr_colors_b = 0;
    double empirical_fail_rate = 0;  // fraction of trials with at least one fail
    double bound_lhs = 0;            // mean colors_B
    double bound_rhs = 0;            // mean|R(A)| p + n * fail rate + 3 standard errors
    std::size_t infeasible = 0;
    bool accounting_ok = true;
    bool fail_iff_miss_ok = true;
    bool classes_ok = true;
    bool pass = false;
    std::vector<TrialRecord> records;  // trial-index order
};

namespace detail {

inline TrialRecord audit_run(const Graph& g, const AlgorithmBRun& run, std::uint64_t seed)
{
    TrialRecord rec;
    rec.seed = seed;
    rec.colors_a = run.stats.colors_a;
    rec.colors_b = run.stats.colors_b;
    rec.fails = run.stats.fails;
    rec.pool_size = run.stats.pool_size;
    rec.feasible = validate_coloring<PoolColor>(g, std::span<const PoolColor>(run.coloring));
    rec.accounting_ok = rec.colors_b <= rec.pool_size + rec.fails;
    rec.fail_iff_miss_ok = true;
    rec.classes_ok = true;
    for (std::size_t i = 0; i < run.steps.size(); ++i) {
        const auto& s = run.steps[i];
        bool listed = std::binary_search(run.state.fail_steps.begin(), run.state.fail_steps.end(),
                                         static_cast<int>(i + 1));
        if (listed != s.hits.empty() || s.failed != s.hits.empty())
            rec.fail_iff_miss_ok = false;
        const auto& c = run.coloring[i];
        if (c.special) {
            if (c.id != static_cast<ColorId>(i + 1) || !s.failed)
                rec.classes_ok = false;
        } else if (std::find(s.copy_colors.begin(), s.copy_colors.end(), c.id) == s.copy_colors.end() ||
                   !run.state.pool.contains(c.id)) {
            // vertex i+1 in H_B(r) must lie in H_A(r), and r must be pooled
            rec.classes_ok = false;
        }
    }
    return rec;
}

} // namespace detail

/// Repeats B with per-trial seeds derived from master_seed and checks the
/// expected-colors accounting empirically. make_a(n, t) builds a fresh A.
template <class Factory>
MonteCarloReport monte_carlo_verify(const Graph& g, Factory make_a, int t, std::size_t trials,
                                    std::uint64_t master_seed, unsigned jobs = 1)
{
    require_input(trials >= 1, "need at least one trial");
    MonteCarloReport rep;
    rep.trials = trials;
    rep.p = sampling_probability(g.n(), t);
    rep.records.resize(trials);
    for_each_trial(trials, jobs, [&](std::size_t i) {
        std::uint64_t seed = CounterRng::derive_seed(master_seed, i);
        auto run = run_algorithm_b(g, make_a(g.n(), t), t, seed);
        rep.records[i] = detail::audit_run(g, run, seed);
    });

    double sum_a = 0, sum_b = 0, sum_b2 = 0, sum_pool = 0, sum_fails = 0;
    std::size_t failed_trials = 0;
    for (const auto& r : rep.records) {
        sum_a += static_cast<double>(r.colors_a);
        sum_b += static_cast<double>(r.colors_b);
        sum_b2 += static_cast<double>(r.colors_b) * static_cast<double>(r.colors_b);
        sum_pool += static_cast<double>(r.pool_size);
        sum_fails += static_cast<double>(r.fails);
        failed_trials += r.fails > 0 ? 1 : 0;
        rep.infeasible += r.feasible ? 0 : 1;
        rep.accounting_ok = rep.accounting_ok && r.accounting_ok;
        rep.fail_iff_miss_ok = rep.fail_iff_miss_ok && r.fail_iff_miss_ok;
        rep.classes_ok = rep.classes_ok && r.classes_ok;
    }
    const double k = static_cast<double>(trials);
    rep.mean_colors_a = sum_a / k;
    rep.mean_colors_b = sum_b / k;
    rep.mean_pool = sum_pool / k;
    rep.mean_fails = sum_fails / k;
    rep.empirical_fail_rate = static_cast<double>(failed_trials) / k;
    if (trials > 1) {
        double var = (sum_b2 - sum_b * sum_b / k) / (k - 1.0);
        rep.sd_colors_b = std::sqrt(std::max(0.0, var));
    }
    rep.stderr_colors_b = rep.sd_colors_b / std::sqrt(k);
    rep.bound_lhs = rep.mean_colors_b;
    rep.bound_rhs = rep.mean_colors_a * rep.p + static_cast<double>(g.n()) * rep.empirical_fail_rate +
                    3.0 * rep.stderr_colors_b;
    rep.pass = rep.infeasible == 0 && rep.accounting_ok && rep.fail_iff_miss_ok && rep.classes_ok &&
               rep.bound_lhs <= rep.bound_rhs * (1.0 + kBoundRelTol);
    return rep;
}

} // namespace vbplab
