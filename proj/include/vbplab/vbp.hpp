#pragma once

#include <algorithm>
#include <concepts>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vbplab/errors.hpp"
#include "vbplab/rational.hpp"

namespace vbplab {

inline constexpr std::size_t kDefaultItemLimit = 14;

/// A d-dimensional item with exact coordinates in [0, 1].
struct VbpItem {
    std::vector<Rational> coords;

    [[nodiscard]] std::size_t dim() const { return coords.size(); }
    friend bool operator==(const VbpItem&, const VbpItem&) = default;
};

inline void check_item(const VbpItem& item, std::size_t d)
{
    require_input(item.dim() == d, "item dimension " + std::to_string(item.dim()) + " != " + std::to_string(d));
    for (const auto& x : item.coords)
        require_input(x >= Rational(0) && x <= Rational(1), "item coordinate " + x.str() + " outside [0,1]");
}

/// Items in online arrival order.
struct VbpInstance {
    std::size_t d = 0;
    std::vector<VbpItem> items;

    VbpInstance() = default;
    VbpInstance(std::size_t dim, std::vector<VbpItem> its) : d(dim), items(std::move(its))
    {
        for (const auto& it : items)
            check_item(it, d);
    }
};

struct Bin {
    std::vector<std::size_t> items;  // 0-based indices into the instance
    std::vector<Rational> load;
};

struct PackingState {
    std::vector<Bin> bins;
    [[nodiscard]] std::size_t size() const { return bins.size(); }
};

/// load + item <= 1 in every coordinate, compared exactly.
inline bool fits(std::span<const Rational> load, const VbpItem& item)
{
    require_input(load.size() == item.dim() || load.empty(),
                  "dimension mismatch: load " + std::to_string(load.size()) + ", item " + std::to_string(item.dim()));
    if (load.empty())
        return std::all_of(item.coords.begin(), item.coords.end(), [](const Rational& x) { return x <= Rational(1); });
    for (std::size_t j = 0; j < load.size(); ++j)
        if (load[j] + item.coords[j] > Rational(1))
            return false;
    return true;
}

inline void add_to_bin(Bin& bin, std::size_t index, const VbpItem& item)
{
    if (bin.load.empty())
        bin.load.assign(item.dim(), Rational(0));
    for (std::size_t j = 0; j < item.dim(); ++j)
        bin.load[j] += item.coords[j];
    bin.items.push_back(index);
}

/// Online VBP algorithm: returns the 0-based bin for each arriving item; may open bin == current count.
template <class A>
concept OnlineVbpAlgorithm = requires(A a, const VbpItem& item) {
    { a.place(item) } -> std::convertible_to<std::size_t>;
};

/// First-Fit: lowest-indexed bin with room, else a new bin.
class FirstFit {
public:
    std::size_t place(const VbpItem& item)
    {
        for (std::size_t b = 0; b < loads_.size(); ++b)
            if (fits(loads_[b], item)) {
                add(b, item);
                return b;
            }
        loads_.emplace_back(item.dim(), Rational(0));
        add(loads_.size() - 1, item);
        return loads_.size() - 1;
    }

    [[nodiscard]] std::size_t bins() const { return loads_.size(); }

private:
    std::vector<std::vector<Rational>> loads_;

    void add(std::size_t b, const VbpItem& item)
    {
        for (std::size_t j = 0; j < item.dim(); ++j)
            loads_[b][j] += item.coords[j];
    }
};

/// Drives an online algorithm over the instance, rejecting infeasible placements.
template <OnlineVbpAlgorithm A>
PackingState run_online(A& alg, const VbpInstance& inst)
{
    PackingState p;
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
        const auto& item = inst.items[i];
        std::size_t b = alg.place(item);
        if (b > p.bins.size())
            throw ProtocolError("algorithm skipped bin index " + std::to_string(p.bins.size()));
        if (b == p.bins.size())
            p.bins.emplace_back();
        if (!fits(p.bins[b].load, item))
            throw ProtocolError("algorithm overfilled bin " + std::to_string(b) + " with item " + std::to_string(i));
        add_to_bin(p.bins[b], i, item);
    }
    return p;
}

inline PackingState first_fit_online(const VbpInstance& inst)
{
    FirstFit ff;
    return run_online(ff, inst);
}

/// Partition + capacity check. Loads are recomputed from the items, not trusted.
inline bool validate_packing(const VbpInstance& inst, const PackingState& p)
{
    std::vector<int> seen(inst.items.size(), 0);
    for (const auto& bin : p.bins) {
        std::vector<Rational> load(inst.d, Rational(0));
        for (std::size_t i : bin.items) {
            if (i >= inst.items.size() || seen[i]++ > 0)
                return false;
            for (std::size_t j = 0; j < inst.d; ++j)
                load[j] += inst.items[i].coords[j];
        }
        for (const auto& x : load)
            if (x > Rational(1))
                return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

/// Per-coordinate total load over all items.
inline std::vector<Rational> total_load(const VbpInstance& inst)
{
    std::vector<Rational> tot(inst.d, Rational(0));
    for (const auto& it : inst.items)
        for (std::size_t j = 0; j < inst.d; ++j)
            tot[j] += it.coords[j];
    return tot;
}

/// ceil(max coordinate total): a lower bound on Opt (at least 1 for non-empty instances).
inline std::size_t load_lower_bound(const VbpInstance& inst)
{
    if (inst.items.empty())
        return 0;
    auto tot = total_load(inst);
    std::int64_t lb = 1;
    for (const auto& x : tot)
        lb = std::max(lb, x.ceil());
    return static_cast<std::size_t>(lb);
}

struct OptResult {
    std::size_t bins = 0;
    PackingState witness;
};

namespace detail {

class OptSearch {
public:
    OptSearch(const VbpInstance& inst, std::size_t lower, PackingState incumbent)
        : inst_(inst), lower_(lower), best_(std::move(incumbent))
    {
    }

    PackingState run()
    {
        if (best_.size() > lower_)
            branch(0);
        return best_;
    }

private:
    const VbpInstance& inst_;
    std::size_t lower_;
    PackingState best_;
    std::vector<Bin> open_;

    // Items are assigned in arrival order; item i may join any open bin or
    // open exactly one new bin, so bin labels are canonical.
    bool branch(std::size_t i)
    {
        if (open_.size() >= best_.size())
            return false;
        if (i == inst_.items.size()) {
            best_.bins = open_;
            return best_.size() <= lower_;
        }
        const auto& item = inst_.items[i];
        for (std::size_t b = 0; b < open_.size(); ++b) {
            if (!fits(open_[b].load, item))
                continue;
            Bin saved = open_[b];
            add_to_bin(open_[b], i, item);
            if (branch(i + 1))
                return true;
            open_[b] = std::move(saved);
        }
        if (open_.size() + 1 < best_.size()) {
            open_.emplace_back();
            add_to_bin(open_.back(), i, item);
            if (branch(i + 1))
                return true;
            open_.pop_back();
        }
        return false;
    }
};

} // namespace detail

/// Minimum bin count with a witness, by branch-and-bound over set partitions.
inline OptResult opt_exact(const VbpInstance& inst, std::size_t limit = kDefaultItemLimit)
{
    require_limit(inst.items.size(), limit, "opt_exact");
    if (inst.items.empty())
        return {};
    PackingState incumbent = first_fit_online(inst);
    detail::OptSearch search(inst, load_lower_bound(inst), std::move(incumbent));
    PackingState best = search.run();
    return {best.size(), std::move(best)};
}

/// alg / opt as an exact rational.
inline Rational competitive_gap(std::size_t alg_bins, std::size_t opt_bins)
{
    require_input(opt_bins >= 1, "competitive gap needs opt >= 1");
    return Rational(static_cast<Rational::int_type>(alg_bins), static_cast<Rational::int_type>(opt_bins));
}

/// bins <= (d + 0.7) * opt, compared exactly as 10*bins <= (10d + 7) * opt.
inline bool within_first_fit_bound(std::size_t bins, std::size_t opt, std::size_t d)
{
    return 10 * bins <= (10 * d + 7) * opt;
}

// ---------------------------------------------------------------------------
// Text format:
//   vbp <n> <d>
//   n lines of d rationals ("p/q" or integers)

inline VbpInstance read_vbp_file(std::istream& in)
{
    std::string line;
    std::size_t n = 0, d = 0;
    bool header = false;
    std::vector<VbpItem> items;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        auto where = " at line " + std::to_string(lineno);
        if (!header) {
            require_input(tok == "vbp", "expected 'vbp' header" + where);
            long long nn = -1, dd = -1;
            require_input(static_cast<bool>(ls >> nn >> dd) && nn >= 0 && dd >= 0, "bad vbp header" + where);
            n = static_cast<std::size_t>(nn);
            d = static_cast<std::size_t>(dd);
            header = true;
            continue;
        }
        VbpItem item;
        do {
            item.coords.push_back(Rational::parse(tok));
        } while (ls >> tok);
        require_input(item.dim() == d, "item with " + std::to_string(item.dim()) + " coordinates" + where);
        items.push_back(std::move(item));
    }
    require_input(header, "missing vbp header");
    require_input(items.size() == n, "header announces " + std::to_string(n) + " items, file has " +
                                         std::to_string(items.size()));
    return VbpInstance(d, std::move(items));
}

inline void write_vbp_file(std::ostream& out, const VbpInstance& inst)
{
    out << "vbp " << inst.items.size() << ' ' << inst.d << '\n';
    for (const auto& it : inst.items) {
        for (std::size_t j = 0; j < it.dim(); ++j)
            out << (j ? " " : "") << it.coords[j];
        out << '\n';
    }
}

} // namespace vbplab
