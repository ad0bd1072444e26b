#pragma once

#include <memory>
#include <string_view>

#include "pqvrf/bytes.hpp"
#include "pqvrf/keccak.hpp"

namespace pqvrf {

/// Deterministic random stream. Every randomized operation in the library
/// draws from one of these, so a full protocol run replays from a 32-byte
/// seed. Independent substreams are derived by label.
class RandomStream {
  public:
    explicit RandomStream(const Hash32& seed);
    explicit RandomStream(uint64_t seed);  // convenience: seed = keccak256(le64)

    const Hash32& seed() const { return seed_; }

    void fill(uint8_t* out, size_t len);
    Bytes bytes(size_t len);
    uint8_t next_byte();
    uint64_t next_u64();

    /// Uniform in [0, bound) by rejection; bound > 0.
    uint64_t uniform_below(uint64_t bound);

    /// Uniform in [0, 1) with 53 bits of precision.
    double next_double();

    /// Independent child stream; derivation depends only on this stream's
    /// seed and the label, not on how much has been drawn so far.
    RandomStream derive(std::string_view label) const;
    RandomStream derive(std::string_view label, uint64_t index) const;

  private:
    Hash32 seed_;
    KeccakXof xof_;
};

}  // namespace pqvrf
