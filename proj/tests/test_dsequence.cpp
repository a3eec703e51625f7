#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dseq/dsequence.hpp"

using namespace dseq;

TEST_CASE("DSequenceSpec validation") {
    CHECK_NOTHROW(DSequenceSpec(5));
    CHECK_NOTHROW(DSequenceSpec(7, 3));
    CHECK_THROWS_AS(DSequenceSpec(9), std::domain_error);
    CHECK_THROWS_AS(DSequenceSpec(2), std::domain_error);
    CHECK_THROWS_AS(DSequenceSpec(5, 1), std::domain_error);
    CHECK_THROWS_AS(DSequenceSpec(5, 10), std::domain_error);
}

TEST_CASE("d_bit") {
    CHECK(d_bit(DSequenceSpec(5), 1) == 0);
    CHECK(d_bit(DSequenceSpec(5), 3) == 1);
    CHECK(d_bit(DSequenceSpec(3), 2) == 1);
    CHECK_THROWS_AS(d_bit(DSequenceSpec(5), 0), std::domain_error);
}

TEST_CASE("d_period") {
    CHECK(d_period(DSequenceSpec(5)) == 4);
    CHECK(d_period(DSequenceSpec(7)) == 3);
    CHECK(d_period(DSequenceSpec(23)) == 11);
}

TEST_CASE("d_sequence") {
    CHECK(d_sequence(DSequenceSpec(5), 4) == Bits{0, 0, 1, 1});
    CHECK(d_sequence(DSequenceSpec(7), 6) == Bits{0, 0, 1, 0, 0, 1});
    CHECK(d_sequence(DSequenceSpec(3), 2) == Bits{0, 1});
    CHECK_THROWS_AS(d_sequence(DSequenceSpec(5), 0), std::domain_error);
}

TEST_CASE("stream is periodic with the residue period") {
    for (u64 p : {5, 7, 11, 13, 23, 101}) {
        DSequenceSpec spec(p);
        u64 period = d_period(spec);
        Bits bits = d_sequence(spec, 2 * period);
        for (u64 i = 0; i < period; ++i) CHECK(bits[i] == bits[i + period]);
    }
}

TEST_CASE("complement-half property for primitive base 2, p < 100") {
    for (u64 p = 3; p < 100; p += 2) {
        if (!is_prime(p) || !is_primitive_root(2, p)) continue;
        DSequenceSpec spec(p);
        u64 period = p - 1;
        Bits bits = d_sequence(spec, period);
        for (u64 i = 0; i < period / 2; ++i)
            CHECK(bits[i + period / 2] == 1 - bits[i]);
    }
}

TEST_CASE("incremental stream agrees with direct exponentiation") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<u64> idx(1, 10000);
    for (u64 p : {5, 23, 499}) {
        DSequenceSpec spec(p);
        for (int trial = 0; trial < 5; ++trial) {
            u64 i = idx(rng);
            Bits bits = d_sequence(spec, i);
            CHECK(bits.back() == d_bit(spec, i));
        }
    }
}
