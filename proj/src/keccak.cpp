#include "pqvrf/keccak.hpp"

#include <cstring>

namespace pqvrf {

namespace {

constexpr int kRate = 136;  // 1088-bit rate for capacity 512

constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

constexpr int kRotations[24] = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};

constexpr int kPiLanes[24] = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                              15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

inline uint64_t rotl(uint64_t x, int s) {
    return (x << s) | (x >> (64 - s));
}

void keccak_f1600(uint64_t st[25]) {
    for (int round = 0; round < 24; ++round) {
        // theta
        uint64_t bc[5];
        for (int i = 0; i < 5; ++i)
            bc[i] = st[i] ^ st[i + 5] ^ st[i + 10] ^ st[i + 15] ^ st[i + 20];
        for (int i = 0; i < 5; ++i) {
            uint64_t t = bc[(i + 4) % 5] ^ rotl(bc[(i + 1) % 5], 1);
            for (int j = 0; j < 25; j += 5) st[j + i] ^= t;
        }
        // rho + pi
        uint64_t t = st[1];
        for (int i = 0; i < 24; ++i) {
            int j = kPiLanes[i];
            uint64_t tmp = st[j];
            st[j] = rotl(t, kRotations[i]);
            t = tmp;
        }
        // chi
        for (int j = 0; j < 25; j += 5) {
            for (int i = 0; i < 5; ++i) bc[i] = st[j + i];
            for (int i = 0; i < 5; ++i) st[j + i] = bc[i] ^ (~bc[(i + 1) % 5] & bc[(i + 2) % 5]);
        }
        // iota
        st[0] ^= kRoundConstants[round];
    }
}

void absorb_all(uint64_t st[25], std::span<const uint8_t> input) {
    uint8_t block[kRate];
    size_t off = 0;
    while (input.size() - off >= kRate) {
        for (int i = 0; i < kRate / 8; ++i)
            st[i] ^= read_u64le(input.data() + off + 8 * static_cast<size_t>(i));
        keccak_f1600(st);
        off += kRate;
    }
    std::memset(block, 0, sizeof(block));
    std::memcpy(block, input.data() + off, input.size() - off);
    block[input.size() - off] = 0x01;  // original Keccak domain padding
    block[kRate - 1] |= 0x80;
    for (int i = 0; i < kRate / 8; ++i) st[i] ^= read_u64le(block + 8 * i);
    keccak_f1600(st);
}

}  // namespace

Hash32 keccak256(std::span<const uint8_t> input) {
    uint64_t st[25] = {};
    absorb_all(st, input);
    Hash32 out;
    for (int i = 0; i < 4; ++i)
        for (int b = 0; b < 8; ++b)
            out[8 * static_cast<size_t>(i) + static_cast<size_t>(b)] =
                static_cast<uint8_t>(st[i] >> (8 * b));
    return out;
}

Hash32 keccak256(std::initializer_list<std::span<const uint8_t>> parts) {
    Bytes joined;
    size_t total = 0;
    for (auto& p : parts) total += p.size();
    joined.reserve(total);
    for (auto& p : parts) joined.insert(joined.end(), p.begin(), p.end());
    return keccak256(joined);
}

KeccakXof::KeccakXof(std::span<const uint8_t> seed) : pos_(kRate) {
    std::memset(state_, 0, sizeof(state_));
    absorb_all(state_, seed);
    // state is now ready to squeeze; first block comes from the current state
    pos_ = kRate;
}

void KeccakXof::refill() {
    for (int i = 0; i < kRate / 8; ++i)
        for (int b = 0; b < 8; ++b)
            block_[8 * static_cast<size_t>(i) + static_cast<size_t>(b)] =
                static_cast<uint8_t>(state_[i] >> (8 * b));
    keccak_f1600(state_);
    pos_ = 0;
}

void KeccakXof::squeeze(uint8_t* out, size_t len) {
    while (len > 0) {
        if (pos_ == kRate) refill();
        size_t take = std::min(len, static_cast<size_t>(kRate) - pos_);
        std::memcpy(out, block_ + pos_, take);
        pos_ += take;
        out += take;
        len -= take;
    }
}

}  // namespace pqvrf
