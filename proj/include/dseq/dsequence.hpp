#pragma once

// Plain binary d-sequence: a(i) = base^i mod p mod 2. The bit period equals
// the multiplicative order of the base mod p.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dseq/modmath.hpp"

namespace dseq {

using Bits = std::vector<std::uint8_t>;

struct DSequenceSpec {
    u64 p;
    u64 base;

    explicit DSequenceSpec(u64 prime, u64 b = 2) : p(prime), base(b) {
        if (p <= 2 || !is_prime(p))
            throw std::domain_error("DSequenceSpec: p must be an odd prime");
        if (base < 2)
            throw std::domain_error("DSequenceSpec: base must be >= 2");
        if (base % p == 0)
            throw std::domain_error("DSequenceSpec: base divisible by p");
    }
};

inline int d_bit(const DSequenceSpec& spec, u64 i) {
    if (i < 1) throw std::domain_error("d_bit: index starts at 1");
    return static_cast<int>(mod_pow(spec.base, i, spec.p) & 1);
}

inline u64 d_period(const DSequenceSpec& spec) {
    return multiplicative_order(spec.base, spec.p);
}

// Single-consumer incremental stream; state is one residue.
class DSequenceStream {
  public:
    explicit DSequenceStream(DSequenceSpec spec)
        : spec_(spec), cur_(spec.base % spec.p) {}

    // Bit a(i) for the next i, starting at i = 1.
    int next() {
        int bit = static_cast<int>(cur_ & 1);
        cur_ = cur_ * (spec_.base % spec_.p) % spec_.p;
        return bit;
    }

  private:
    DSequenceSpec spec_;
    u64 cur_;
};

inline Bits d_sequence(const DSequenceSpec& spec, u64 count) {
    if (count < 1) throw std::domain_error("d_sequence: count must be >= 1");
    Bits bits;
    bits.reserve(count);
    DSequenceStream stream(spec);
    for (u64 i = 0; i < count; ++i)
        bits.push_back(static_cast<std::uint8_t>(stream.next()));
    return bits;
}

}  // namespace dseq
