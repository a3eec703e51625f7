#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dseq/analysis.hpp"
#include "dseq/recursive.hpp"

using namespace dseq;

namespace {

Bits random_bits(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    Bits bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
    return bits;
}

// Independent O(n^2) double-loop oracle, modulo indexing and all.
double brute_force_r(const Bits& bits) {
    const std::size_t n = bits.size();
    std::vector<double> a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = 2.0 * bits[j] - 1.0;
    double total = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double ck = 0.0;
        for (std::size_t j = 0; j < n; ++j) ck += a[j] * a[(j + k) % n];
        total += std::abs(ck / static_cast<double>(n));
    }
    return 1.0 - total / static_cast<double>(n);
}

}  // namespace

TEST_CASE("degenerate sequences") {
    Bits ones(5, 1);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(autocorrelation(ones, k) == 1.0);
    CHECK(randomness_measure(ones) == 0.0);

    Bits alternating{0, 1, 0, 1};
    CHECK(autocorrelation(alternating, 1) == -1.0);
    CHECK(autocorrelation(alternating, 2) == 1.0);
    auto profile = autocorr_profile(alternating);
    CHECK(profile.c == std::vector<double>{-1.0, 1.0, -1.0, 1.0});
    CHECK(profile.r == 0.0);

    Bits ones3(3, 1);
    auto p3 = autocorr_profile(ones3);
    CHECK(p3.c == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(p3.r == 0.0);
}

TEST_CASE("domain errors") {
    Bits bits{0, 1, 1};
    CHECK_THROWS_AS(autocorrelation(bits, 0), std::domain_error);
    CHECK_THROWS_AS(autocorrelation(bits, 4), std::domain_error);
    CHECK_THROWS_AS(randomness_measure(Bits{}), std::domain_error);
    CHECK_THROWS_AS(randomness_measure(Bits{0, 2, 1}), std::domain_error);
    CHECK_THROWS_AS(autocorr_profile(Bits{}), std::domain_error);
}

TEST_CASE("full-shift correlation is exactly one") {
    for (unsigned seed : {1u, 2u, 3u}) {
        Bits bits = random_bits(101 + seed, seed);
        CHECK(autocorrelation(bits, bits.size()) == 1.0);
        auto profile = autocorr_profile(bits);
        CHECK(profile.c.back() == 1.0);
    }
}

TEST_CASE("symmetry C(k) == C(n-k) and |C(k)| <= 1") {
    Bits streams[] = {random_bits(256, 9), random_bits(999, 10),
                      generate_full(RecursiveConfig{2, {3, 5}, {7, 11}})};
    for (const Bits& bits : streams) {
        auto profile = autocorr_profile(bits);
        const std::size_t n = profile.n;
        for (std::size_t k = 1; k < n; ++k) {
            CHECK(profile.c[k - 1] == profile.c[n - k - 1]);
            CHECK(std::abs(profile.c[k - 1]) <= 1.0);
        }
    }
}

TEST_CASE("worked example randomness") {
    Bits bits = generate_full(RecursiveConfig{2, {3, 5}, {7, 11}});
    REQUIRE(bits.size() == 105);
    double r = randomness_measure(bits);
    CHECK(r == doctest::Approx(0.872200).epsilon(1e-6));
    auto exact = randomness_measure_exact(bits);
    CHECK(exact.numerator == 1409);  // sum over k of |sum_j a_j a_{j+k}|
    CHECK(exact.n == 105);
    // mean |C(k)| is 1 - R
    auto profile = autocorr_profile(bits);
    double mean_abs = 0.0;
    for (double c : profile.c) mean_abs += std::abs(c);
    mean_abs /= 105.0;
    CHECK(mean_abs == doctest::Approx(1.0 - 0.872200).epsilon(1e-4));
}

TEST_CASE("exact rational and floating paths agree to 1e-12") {
    for (unsigned seed : {11u, 12u, 13u}) {
        Bits bits = random_bits(500 + 37 * seed, seed);
        double exact = randomness_measure_exact(bits).value();
        CHECK(std::abs(randomness_measure(bits) - exact) <= 1e-12);
        CHECK(std::abs(randomness_measure(bits, Accumulation::Compensated) - exact) <= 1e-12);
        CHECK(std::abs(autocorr_profile(bits).r - exact) <= 1e-12);
        CHECK(std::abs(autocorr_profile(bits, Accumulation::Compensated).r - exact) <= 1e-12);
    }
}

TEST_CASE("module agrees with the independent brute-force double loop") {
    Bits streams[] = {random_bits(313, 21), generate_full(RecursiveConfig{2, {3, 5}, {7, 11}})};
    for (const Bits& bits : streams)
        CHECK(std::abs(randomness_measure(bits) - brute_force_r(bits)) <= 1e-12);
}

TEST_CASE("randomness measure is rotation invariant") {
    Bits bits = random_bits(300, 31);
    auto base = randomness_measure_exact(bits);
    std::mt19937 rng(32);
    for (int trial = 0; trial < 8; ++trial) {
        std::size_t shift = rng() % bits.size();
        Bits rotated(bits.begin() + static_cast<long>(shift), bits.end());
        rotated.insert(rotated.end(), bits.begin(), bits.begin() + static_cast<long>(shift));
        auto rot = randomness_measure_exact(rotated);
        CHECK(rot.numerator == base.numerator);
        CHECK(rot.n == base.n);
    }
}
