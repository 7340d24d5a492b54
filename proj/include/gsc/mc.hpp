#pragma once

#include <cstdint>
#include <future>
#include <vector>

#include "gsc/rng.hpp"

namespace gsc {

// Compensated (Kahan) accumulator for order-stable float summation.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// Fixed shard count keeps seed->result mapping independent of hardware.
inline constexpr int kShardCount = 16;

struct ShardPlan {
    int shard = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
};

inline std::vector<ShardPlan> shard_plan(uint64_t trials, uint64_t seed,
                                         int shards = kShardCount) {
    std::vector<ShardPlan> plan(shards);
    uint64_t base = trials / shards, rem = trials % shards;
    for (int s = 0; s < shards; ++s) {
        plan[s].shard = s;
        plan[s].trials = base + (static_cast<uint64_t>(s) < rem ? 1 : 0);
        plan[s].seed = seed;
    }
    return plan;
}

// Runs fn(shard_rng, shard_trials) over every shard concurrently and returns
// the per-shard results in shard order, so any merge is deterministic.
template <typename Fn>
auto parallel_shards(uint64_t trials, uint64_t seed, Fn&& fn, int shards = kShardCount)
    -> std::vector<decltype(fn(std::declval<SplitMix64&>(), uint64_t{}))> {
    using R = decltype(fn(std::declval<SplitMix64&>(), uint64_t{}));
    auto plan = shard_plan(trials, seed, shards);
    std::vector<std::future<R>> futs;
    futs.reserve(plan.size());
    for (const auto& sp : plan)
        futs.push_back(std::async(std::launch::async, [&fn, sp] {
            SplitMix64 rng = shard_stream(sp.seed, sp.shard);
            return fn(rng, sp.trials);
        }));
    std::vector<R> out;
    out.reserve(plan.size());
    for (auto& f : futs) out.push_back(f.get());
    return out;
}

}  // namespace gsc
