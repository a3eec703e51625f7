#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "dseq/bit_io.hpp"

using namespace dseq;

TEST_CASE("ascii encoding") {
    CHECK(to_ascii(Bits{0, 1, 0, 1}) == "0101\n");
    CHECK(to_ascii(Bits{}) == "");

    Bits b64(64, 1);
    CHECK(to_ascii(b64) == std::string(64, '1') + "\n");

    Bits b65(65, 0);
    CHECK(to_ascii(b65) == std::string(64, '0') + "\n0\n");
}

TEST_CASE("packed encoding") {
    CHECK(to_packed(Bits{0, 1, 0, 1}) == std::vector<std::uint8_t>{0x50});
    CHECK(to_packed(Bits(8, 1)) == std::vector<std::uint8_t>{0xFF});
    CHECK(to_packed(Bits(9, 1)) == std::vector<std::uint8_t>{0xFF, 0x80});
    CHECK(to_packed(Bits{}).empty());
}

TEST_CASE("from_ascii parses and validates") {
    CHECK(from_ascii(std::string("01\n10 1")) == Bits{0, 1, 1, 0, 1});
    CHECK_THROWS_AS(from_ascii(std::string("01x")), std::domain_error);
    std::istringstream in("0101\n");
    CHECK(from_ascii(in) == Bits{0, 1, 0, 1});
}

TEST_CASE("round trips") {
    std::mt19937 rng(99);
    for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(63), std::size_t(64),
                          std::size_t(65), std::size_t(1000)}) {
        Bits bits(n);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
        CHECK(from_ascii(to_ascii(bits)) == bits);
        CHECK(from_packed(to_packed(bits), n) == bits);
    }
    CHECK_THROWS_AS(from_packed(std::vector<std::uint8_t>{0xFF}, 9), std::domain_error);
}
