#pragma once

// Two-level recursive d-sequence generator.
//
// A seed S is exponentiated modulo each first-level prime; the residue sums
//   S_i = sum_j (S^i mod p1j),  i = 1..t,  t = LCM of the orders of S,
// become second-level seeds. Seed S_i contributes a block of
//   k[i] = LCM over second-level primes p of the period of S_i^j mod p
// bits, bit (i,j) being the XOR over the second-level primes of the parity of
// S_i^j mod p. The total period is L = sum of the k[i].

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dseq/dsequence.hpp"
#include "dseq/modmath.hpp"

namespace dseq {

struct config_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct budget_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Default cap on materialized full-period generation.
inline constexpr u64 kDefaultBitBudget = 100'000'000;

struct RecursiveConfig {
    u64 seed = 2;
    std::vector<u64> first_primes;
    std::vector<u64> second_primes;
};

struct PeriodBreakdown {
    std::vector<u64> first_orders;  // order of the seed mod each first prime
    u64 t = 0;                      // first-level period = LCM of the orders
    std::vector<u64> seeds;         // S_1..S_t
    std::vector<u64> k;             // per-seed block lengths k[1..t]
    u64 period = 0;                 // L = sum of k[i]
};

namespace detail {

inline void require_odd_primes(const std::vector<u64>& primes, const char* which) {
    if (primes.empty())
        throw config_error(std::string(which) + " prime list is empty");
    for (u64 p : primes) {
        if (!is_prime(p))
            throw config_error(std::to_string(p) + " is not prime");
        if (p == 2)
            throw config_error(std::string(which) + " primes must be odd");
    }
}

}  // namespace detail

// Hard-fails config invariants; non-fatal oddities come back as warnings.
inline std::vector<std::string> validate(const RecursiveConfig& config) {
    if (config.seed < 2)
        throw config_error("seed must be >= 2");
    detail::require_odd_primes(config.first_primes, "first-level");
    detail::require_odd_primes(config.second_primes, "second-level");
    for (u64 p : config.first_primes)
        if (config.seed % p == 0)
            throw config_error("seed " + std::to_string(config.seed) +
                               " divisible by first-level prime " + std::to_string(p));

    std::vector<std::string> warnings;
    for (u64 p : config.first_primes)
        if (!is_primitive_root(config.seed, p))
            warnings.push_back(std::to_string(config.seed) + " not primitive mod " +
                               std::to_string(p));

    // Degenerate but legal: a second-level seed divisible by a second-level
    // prime collapses that component to the all-zero sequence.
    u64 t = lcm_many([&] {
        std::vector<u64> orders;
        for (u64 p : config.first_primes)
            orders.push_back(multiplicative_order(config.seed, p));
        return orders;
    }());
    std::vector<u64> residues(config.first_primes.size(), 1);
    for (u64 i = 1; i <= t; ++i) {
        u64 s = 0;
        for (std::size_t j = 0; j < residues.size(); ++j) {
            residues[j] = residues[j] * (config.seed % config.first_primes[j]) %
                          config.first_primes[j];
            s += residues[j];
        }
        for (u64 p : config.second_primes)
            if (s % p == 0)
                warnings.push_back("second-level seed S_" + std::to_string(i) + "=" +
                                   std::to_string(s) + " divisible by " + std::to_string(p));
    }
    return warnings;
}

struct FirstLevel {
    std::vector<u64> orders;
    u64 t;
};

inline FirstLevel first_level_breakdown(const RecursiveConfig& config) {
    FirstLevel fl;
    for (u64 p : config.first_primes)
        fl.orders.push_back(multiplicative_order(config.seed, p));
    fl.t = lcm_many(fl.orders);
    return fl;
}

// S_i = sum_j (S^i mod p1j) for i = 1..t, via running residues.
inline std::vector<u64> second_level_seeds(const RecursiveConfig& config) {
    const u64 t = first_level_breakdown(config).t;
    std::vector<u64> seeds;
    seeds.reserve(t);
    std::vector<u64> residues(config.first_primes.size(), 1);
    for (u64 i = 1; i <= t; ++i) {
        u64 s = 0;
        for (std::size_t j = 0; j < residues.size(); ++j) {
            residues[j] = residues[j] * (config.seed % config.first_primes[j]) %
                          config.first_primes[j];
            s += residues[j];
        }
        seeds.push_back(s);
    }
    return seeds;
}

inline std::vector<u64> periods_for_seeds(const std::vector<u64>& seeds,
                                          const std::vector<u64>& second_primes) {
    std::vector<u64> k;
    k.reserve(seeds.size());
    std::vector<u64> component(second_primes.size());
    for (u64 s : seeds) {
        for (std::size_t u = 0; u < second_primes.size(); ++u)
            component[u] = sequence_period(s, second_primes[u]);
        k.push_back(lcm_many(component));
    }
    return k;
}

inline std::vector<u64> second_level_periods(const RecursiveConfig& config) {
    return periods_for_seeds(second_level_seeds(config), config.second_primes);
}

inline PeriodBreakdown total_period(const RecursiveConfig& config) {
    PeriodBreakdown bd;
    FirstLevel fl = first_level_breakdown(config);
    bd.first_orders = std::move(fl.orders);
    bd.t = fl.t;
    bd.seeds = second_level_seeds(config);
    bd.k = periods_for_seeds(bd.seeds, config.second_primes);
    bd.period = 0;
    for (u64 ki : bd.k) bd.period += ki;
    return bd;
}

// Single-consumer bit stream over the recursive construction. Wraps past the
// full period, so any count can be drawn. State per second-level prime is one
// running residue; one modular multiplication per prime per bit.
class RecursiveStream {
  public:
    explicit RecursiveStream(RecursiveConfig config)
        : config_(std::move(config)), breakdown_(total_period(config_)) {
        start_block(0);
    }

    RecursiveStream(RecursiveConfig config, PeriodBreakdown precomputed)
        : config_(std::move(config)), breakdown_(std::move(precomputed)) {
        start_block(0);
    }

    const PeriodBreakdown& breakdown() const { return breakdown_; }

    int next() {
        u64 seed = breakdown_.seeds[block_];
        int bit = 0;
        for (std::size_t u = 0; u < residues_.size(); ++u) {
            residues_[u] = residues_[u] * (seed % config_.second_primes[u]) %
                           config_.second_primes[u];
            bit ^= static_cast<int>(residues_[u] & 1);
        }
        if (++emitted_in_block_ == breakdown_.k[block_])
            start_block((block_ + 1) % breakdown_.t);
        return bit;
    }

  private:
    void start_block(u64 block) {
        block_ = block;
        emitted_in_block_ = 0;
        residues_.assign(config_.second_primes.size(), 1);
    }

    RecursiveConfig config_;
    PeriodBreakdown breakdown_;
    u64 block_ = 0;
    u64 emitted_in_block_ = 0;
    std::vector<u64> residues_;
};

inline Bits generate(const RecursiveConfig& config, u64 count) {
    if (count < 1) throw std::domain_error("generate: count must be >= 1");
    RecursiveStream stream(config);
    Bits bits;
    bits.reserve(count);
    for (u64 i = 0; i < count; ++i)
        bits.push_back(static_cast<std::uint8_t>(stream.next()));
    return bits;
}

// One full period of L bits; refuses to materialize more than max_bits.
inline Bits generate_full(const RecursiveConfig& config, u64 max_bits = kDefaultBitBudget) {
    PeriodBreakdown bd = total_period(config);
    if (bd.period > max_bits)
        throw budget_error("full period " + std::to_string(bd.period) +
                           " exceeds bit budget " + std::to_string(max_bits));
    RecursiveStream stream(config, std::move(bd));
    const u64 n = stream.breakdown().period;
    Bits bits;
    bits.reserve(n);
    for (u64 i = 0; i < n; ++i)
        bits.push_back(static_cast<std::uint8_t>(stream.next()));
    return bits;
}

}  // namespace dseq
