#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace vbplab {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += kGoldenGamma;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based generator: draw i of stream `key` is splitmix64(key + i * gamma).
/// Streams split by deriving a new key, so trial k never depends on trial k-1.
class CounterRng {
public:
    using result_type = std::uint64_t;
    static constexpr const char* kName = "splitmix64-counter";
    static constexpr const char* kSplitRule = "key(seed, i) = splitmix64(seed ^ splitmix64(i))";

    explicit CounterRng(std::uint64_t key = 0) : key_(key) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return splitmix64(key_ + counter_++ * kGoldenGamma); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    [[nodiscard]] CounterRng split(std::uint64_t index) const { return CounterRng(derive_seed(key_, index)); }

    static constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
    {
        return splitmix64(seed ^ splitmix64(index));
    }

    [[nodiscard]] std::uint64_t key() const { return key_; }
    [[nodiscard]] std::uint64_t draws() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Results must be
/// written by index; the first exception thrown by any trial is rethrown.
template <class Body>
void for_each_trial(std::size_t count, unsigned jobs, Body&& body)
{
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += jobs) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!error)
                        error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace vbplab
