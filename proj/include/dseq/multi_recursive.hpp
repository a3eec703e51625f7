#pragma once

// Three-level generator: at every position of the recursive stream the
// second-level residues are combined by integer addition (not XOR) into a
// third-level seed T, which is exponentiated modulo a third prime p3. Each
// position contributes v = period(T^w mod p3) bits, so the emitted length is
// sum(v) while the recursive period L is unchanged.

#include <cstdint>
#include <vector>

#include "dseq/recursive.hpp"

namespace dseq {

struct MultiConfig {
    RecursiveConfig base;
    u64 p3 = 0;
};

struct ThirdLevelPlan {
    PeriodBreakdown breakdown;      // carried through from the base config
    std::vector<u64> third_seeds;   // T_1..T_L, one per recursive position
    std::vector<u64> v;             // v[i] = period of T_i^w mod p3
    u64 total_length = 0;           // sum of v[i]
};

// Compact form of the plan for large L, computed without storing T or v.
struct ThirdLevelSummary {
    u64 period = 0;  // breakdown.period of the base config
    u64 v_min = 0;
    u64 v_max = 0;
    u64 total_length = 0;
};

inline std::vector<std::string> validate(const MultiConfig& config) {
    auto warnings = validate(config.base);
    if (!is_prime(config.p3))
        throw config_error(std::to_string(config.p3) + " is not prime");
    if (config.p3 == 2)
        throw config_error("third-level prime must be odd");
    return warnings;
}

namespace detail {

// Walks the recursive stream in (i, j) order handing each third-level seed to
// the sink. Sink: void(u64 seed_sum).
template <typename Sink>
void for_each_third_seed(const RecursiveConfig& base, const PeriodBreakdown& bd, Sink&& sink) {
    std::vector<u64> residues(base.second_primes.size());
    for (u64 i = 0; i < bd.t; ++i) {
        const u64 seed = bd.seeds[i];
        for (std::size_t u = 0; u < residues.size(); ++u)
            residues[u] = seed % base.second_primes[u];
        for (u64 j = 1; j <= bd.k[i]; ++j) {
            u64 sum = 0;
            for (u64 r : residues) sum += r;
            sink(sum);
            for (std::size_t u = 0; u < residues.size(); ++u)
                residues[u] = residues[u] * (seed % base.second_primes[u]) %
                              base.second_primes[u];
        }
    }
}

}  // namespace detail

inline std::vector<u64> third_level_seeds(const MultiConfig& config) {
    PeriodBreakdown bd = total_period(config.base);
    std::vector<u64> seeds;
    seeds.reserve(bd.period);
    detail::for_each_third_seed(config.base, bd, [&](u64 s) { seeds.push_back(s); });
    return seeds;
}

inline ThirdLevelPlan third_level_plan(const MultiConfig& config) {
    ThirdLevelPlan plan;
    plan.breakdown = total_period(config.base);
    plan.third_seeds.reserve(plan.breakdown.period);
    plan.v.reserve(plan.breakdown.period);
    detail::for_each_third_seed(config.base, plan.breakdown, [&](u64 s) {
        plan.third_seeds.push_back(s);
        u64 vi = sequence_period(s, config.p3);
        plan.v.push_back(vi);
        plan.total_length += vi;
    });
    return plan;
}

inline ThirdLevelSummary third_level_summary(const MultiConfig& config) {
    ThirdLevelSummary summary;
    PeriodBreakdown bd = total_period(config.base);
    summary.period = bd.period;
    bool first = true;
    detail::for_each_third_seed(config.base, bd, [&](u64 s) {
        u64 vi = sequence_period(s, config.p3);
        if (first) {
            summary.v_min = summary.v_max = vi;
            first = false;
        } else {
            summary.v_min = std::min(summary.v_min, vi);
            summary.v_max = std::max(summary.v_max, vi);
        }
        summary.total_length += vi;
    });
    return summary;
}

// Single-consumer stream of the three-level bits: for each recursive position
// with third seed T and block length v, emits (T^w mod p3) mod 2, w = 1..v.
// Wraps past one full pass of the recursive stream.
class MultiStream {
  public:
    explicit MultiStream(MultiConfig config)
        : config_(std::move(config)), breakdown_(total_period(config_.base)) {
        start_block(0);
        start_position();
    }

    const PeriodBreakdown& breakdown() const { return breakdown_; }

    int next() {
        third_residue_ = third_residue_ * (third_seed_ % config_.p3) % config_.p3;
        int bit = static_cast<int>(third_residue_ & 1);
        if (++emitted_ == v_) advance_position();
        return bit;
    }

  private:
    void start_block(u64 block) {
        block_ = block;
        pos_in_block_ = 0;
        const u64 seed = breakdown_.seeds[block_];
        second_residues_.resize(config_.base.second_primes.size());
        for (std::size_t u = 0; u < second_residues_.size(); ++u)
            second_residues_[u] = seed % config_.base.second_primes[u];
    }

    // Loads T, v and the running third-level residue for the current position.
    void start_position() {
        third_seed_ = 0;
        for (u64 r : second_residues_) third_seed_ += r;
        v_ = sequence_period(third_seed_, config_.p3);
        third_residue_ = 1;
        emitted_ = 0;
    }

    void advance_position() {
        const u64 seed = breakdown_.seeds[block_];
        if (++pos_in_block_ == breakdown_.k[block_]) {
            start_block((block_ + 1) % breakdown_.t);
        } else {
            for (std::size_t u = 0; u < second_residues_.size(); ++u)
                second_residues_[u] = second_residues_[u] *
                                      (seed % config_.base.second_primes[u]) %
                                      config_.base.second_primes[u];
        }
        start_position();
    }

    MultiConfig config_;
    PeriodBreakdown breakdown_;
    u64 block_ = 0;
    u64 pos_in_block_ = 0;
    std::vector<u64> second_residues_;
    u64 third_seed_ = 0;
    u64 v_ = 0;
    u64 third_residue_ = 1;
    u64 emitted_ = 0;
};

inline Bits generate_multi(const MultiConfig& config, u64 count) {
    if (count < 1) throw std::domain_error("generate_multi: count must be >= 1");
    MultiStream stream(config);
    Bits bits;
    bits.reserve(count);
    for (u64 i = 0; i < count; ++i)
        bits.push_back(static_cast<std::uint8_t>(stream.next()));
    return bits;
}

// One full pass of sum(v) bits; refuses to materialize more than max_bits.
inline Bits generate_multi_full(const MultiConfig& config, u64 max_bits = kDefaultBitBudget) {
    ThirdLevelSummary summary = third_level_summary(config);
    if (summary.total_length > max_bits)
        throw budget_error("full length " + std::to_string(summary.total_length) +
                           " exceeds bit budget " + std::to_string(max_bits));
    MultiStream stream(config);
    Bits bits;
    bits.reserve(summary.total_length);
    for (u64 i = 0; i < summary.total_length; ++i)
        bits.push_back(static_cast<std::uint8_t>(stream.next()));
    return bits;
}

}  // namespace dseq
