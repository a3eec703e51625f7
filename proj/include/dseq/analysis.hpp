#pragma once

// Randomness quantification for binary sequences over one full period.
//
// Bits are mapped to +/-1 (a = 2*bit - 1) and the circular autocorrelation
//   C(k) = (1/n) * sum_{j=0..n-1} a_j * a_{(j+k) mod n},   k = 1..n,
// feeds the scalar measure R = 1 - (sum_k |C(k)|) / n. C(n) = 1 always and
// contributes 1/n to the mean. Each inner sum is an exact integer; the exact
// rational mode keeps the whole computation in integers.

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace dseq {

enum class Accumulation { Plain, Compensated };

struct AutocorrelationReport {
    std::size_t n = 0;
    std::vector<double> c;  // C(1)..C(n)
    double r = 0.0;
};

// R as the exact rational 1 - numerator/(n*n).
struct ExactRandomness {
    std::uint64_t numerator = 0;  // sum over k of |sum_j a_j a_{j+k}|
    std::uint64_t n = 0;

    double value() const {
        return 1.0 - static_cast<double>(numerator) / (static_cast<double>(n) * static_cast<double>(n));
    }
};

namespace detail {

inline void check_bits(std::span<const std::uint8_t> bits) {
    if (bits.empty())
        throw std::domain_error("analysis: empty bit sequence");
    for (std::uint8_t b : bits)
        if (b > 1)
            throw std::domain_error("analysis: sequence elements must be 0 or 1");
}

inline std::vector<std::int8_t> to_signed(std::span<const std::uint8_t> bits) {
    std::vector<std::int8_t> a(bits.size());
    for (std::size_t j = 0; j < bits.size(); ++j)
        a[j] = static_cast<std::int8_t>(2 * bits[j] - 1);
    return a;
}

// sum_j a_j * a_{(j+k) mod n}, exact. Split at the wrap point to avoid a
// modulo in the inner loop.
inline std::int64_t correlation_sum(const std::vector<std::int8_t>& a, std::size_t k) {
    const std::size_t n = a.size();
    std::int64_t sum = 0;
    for (std::size_t j = 0; j + k < n; ++j)
        sum += static_cast<std::int64_t>(a[j]) * a[j + k];
    for (std::size_t j = n - k; j < n; ++j)
        sum += static_cast<std::int64_t>(a[j]) * a[j + k - n];
    return sum;
}

class KahanSum {
  public:
    void add(double x) {
        double y = x - compensation_;
        double t = total_ + y;
        compensation_ = (t - total_) - y;
        total_ = t;
    }
    double total() const { return total_; }

  private:
    double total_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace detail

inline double autocorrelation(std::span<const std::uint8_t> bits, std::size_t k) {
    detail::check_bits(bits);
    const std::size_t n = bits.size();
    if (k < 1 || k > n)
        throw std::domain_error("autocorrelation: shift must be in 1..n");
    auto a = detail::to_signed(bits);
    return static_cast<double>(detail::correlation_sum(a, k)) / static_cast<double>(n);
}

inline double randomness_measure(std::span<const std::uint8_t> bits,
                                 Accumulation acc = Accumulation::Plain) {
    detail::check_bits(bits);
    const std::size_t n = bits.size();
    auto a = detail::to_signed(bits);
    const double dn = static_cast<double>(n);
    if (acc == Accumulation::Compensated) {
        detail::KahanSum sum;
        for (std::size_t k = 1; k <= n; ++k)
            sum.add(std::abs(static_cast<double>(detail::correlation_sum(a, k)) / dn));
        return 1.0 - sum.total() / dn;
    }
    double sum = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
        sum += std::abs(static_cast<double>(detail::correlation_sum(a, k)) / dn);
    return 1.0 - sum / dn;
}

// Integer-only path; exact for any n with n^2 below 2^63.
inline ExactRandomness randomness_measure_exact(std::span<const std::uint8_t> bits) {
    detail::check_bits(bits);
    const std::size_t n = bits.size();
    auto a = detail::to_signed(bits);
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::int64_t s = detail::correlation_sum(a, k);
        total += static_cast<std::uint64_t>(s < 0 ? -s : s);
    }
    return ExactRandomness{total, n};
}

inline AutocorrelationReport autocorr_profile(std::span<const std::uint8_t> bits,
                                              Accumulation acc = Accumulation::Plain) {
    detail::check_bits(bits);
    AutocorrelationReport report;
    report.n = bits.size();
    report.c.reserve(report.n);
    auto a = detail::to_signed(bits);
    const double dn = static_cast<double>(report.n);
    detail::KahanSum compensated;
    double plain = 0.0;
    for (std::size_t k = 1; k <= report.n; ++k) {
        double ck = static_cast<double>(detail::correlation_sum(a, k)) / dn;
        report.c.push_back(ck);
        if (acc == Accumulation::Compensated)
            compensated.add(std::abs(ck));
        else
            plain += std::abs(ck);
    }
    double sum = acc == Accumulation::Compensated ? compensated.total() : plain;
    report.r = 1.0 - sum / dn;
    return report;
}

}  // namespace dseq
