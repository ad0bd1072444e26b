#pragma once

#include <cstdint>

#include "pqvrf/bytes.hpp"

namespace pqvrf {

/// Keccak-256 with the original Keccak padding (0x01), i.e. the variant used
/// by Ethereum's keccak256, not FIPS-202 SHA3-256.
Hash32 keccak256(std::span<const uint8_t> input);
Hash32 keccak256(std::initializer_list<std::span<const uint8_t>> parts);

/// Infinite output stream squeezed from the Keccak sponge (rate 1088).
/// Absorbs the seed once; squeeze() yields a deterministic byte stream.
class KeccakXof {
  public:
    explicit KeccakXof(std::span<const uint8_t> seed);
    void squeeze(uint8_t* out, size_t len);

  private:
    void refill();
    uint64_t state_[25];
    uint8_t block_[136];
    size_t pos_;
};

}  // namespace pqvrf
