#include "pqvrf/rng.hpp"

#include <cmath>

namespace pqvrf {

namespace {
Hash32 seed_from_u64(uint64_t v) {
    Bytes b;
    append_u64le(b, v);
    return keccak256(b);
}
}  // namespace

RandomStream::RandomStream(const Hash32& seed) : seed_(seed), xof_(seed) {}

RandomStream::RandomStream(uint64_t seed) : RandomStream(seed_from_u64(seed)) {}

void RandomStream::fill(uint8_t* out, size_t len) {
    xof_.squeeze(out, len);
}

Bytes RandomStream::bytes(size_t len) {
    Bytes out(len);
    xof_.squeeze(out.data(), len);
    return out;
}

uint8_t RandomStream::next_byte() {
    uint8_t b;
    xof_.squeeze(&b, 1);
    return b;
}

uint64_t RandomStream::next_u64() {
    uint8_t b[8];
    xof_.squeeze(b, 8);
    return read_u64le(b);
}

uint64_t RandomStream::uniform_below(uint64_t bound) {
    // rejection from the top multiple of bound
    uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
        uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

double RandomStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RandomStream RandomStream::derive(std::string_view label) const {
    Bytes input(seed_.begin(), seed_.end());
    input.insert(input.end(), label.begin(), label.end());
    return RandomStream(keccak256(input));
}

RandomStream RandomStream::derive(std::string_view label, uint64_t index) const {
    Bytes input(seed_.begin(), seed_.end());
    input.insert(input.end(), label.begin(), label.end());
    append_u64le(input, index);
    return RandomStream(keccak256(input));
}

}  // namespace pqvrf
