#pragma once

#include <cstdint>
#include <vector>

#include "pqvrf/bytes.hpp"
#include "pqvrf/errors.hpp"

namespace pqvrf::ring {

/// Parameters of the quotient ring Z_q[x]/(x^n + 1).
///
/// n must be a power of two and q a prime with q = 1 (mod 2n) so the
/// negacyclic NTT exists. sigma is the Gaussian width used for signing,
/// s the trapdoor quality parameter (also the width used to sample the
/// short trapdoor polynomials).
struct RingParams {
    uint32_t n = 0;
    uint64_t q = 0;
    double sigma = 0.0;
    double s = 0.0;

    void validate() const;  // throws InvalidInputError on violation
    bool operator==(const RingParams&) const = default;
};

/// Preset registry. Ids are stable and appear in serialized headers and on
/// the wire.
///   1: Ring-LWE encryption ring, n=256, q=7681
///   2: NTRU signature ring,   n=512, q=12289
///   3: toy ring n=8,  q=17   (tests)
///   4: toy ring n=16, q=97   (tests)
const RingParams& params_preset(uint32_t id);
uint32_t preset_id(const RingParams& p);  // 0 when not a preset

/// Element of Z_q[x]/(x^n + 1); coefficients canonical in [0, q).
struct RingPoly {
    std::vector<uint32_t> c;

    size_t size() const { return c.size(); }
    bool operator==(const RingPoly&) const = default;
};

RingPoly zero_poly(const RingParams& p);
RingPoly one_poly(const RingParams& p);
void check_conforms(const RingPoly& a, const RingParams& p);

/// Forward negacyclic NTT. Pointwise products in the image correspond to
/// multiplication in Z_q[x]/(x^n + 1).
RingPoly ntt_forward(const RingPoly& a, const RingParams& p);
RingPoly ntt_inverse(const RingPoly& a, const RingParams& p);

RingPoly ring_add(const RingPoly& a, const RingPoly& b, const RingParams& p);
RingPoly ring_sub(const RingPoly& a, const RingPoly& b, const RingParams& p);
RingPoly ring_neg(const RingPoly& a, const RingParams& p);
RingPoly ring_scalar_mul(const RingPoly& a, uint64_t k, const RingParams& p);

/// Product in Z_q[x]/(x^n + 1) via the NTT.
RingPoly ring_mul(const RingPoly& a, const RingPoly& b, const RingParams& p);

/// O(n^2) negacyclic convolution. Serial reference implementation, kept as
/// the independent oracle for the NTT path.
RingPoly ring_mul_schoolbook(const RingPoly& a, const RingPoly& b, const RingParams& p);

/// Pointwise product of two NTT-domain polynomials.
RingPoly ntt_pointwise_mul(const RingPoly& a, const RingPoly& b, const RingParams& p);

/// Multiplicative inverse in R_q. Throws UnsolvableError when the element is
/// not invertible (some NTT coefficient is zero).
RingPoly ring_inverse(const RingPoly& a, const RingParams& p);

/// Lift a canonical coefficient to the centered representative in (-q/2, q/2].
int64_t center_lift(uint64_t c, uint64_t q);
uint32_t from_centered(int64_t v, uint64_t q);

std::vector<int64_t> centered_coeffs(const RingPoly& a, const RingParams& p);
RingPoly poly_from_centered(const std::vector<int64_t>& v, const RingParams& p);

/// Euclidean norm of the centered representative.
double euclidean_norm_centered(const RingPoly& a, const RingParams& p);
double sq_norm_centered(const RingPoly& a, const RingParams& p);

/// H_1: arbitrary bytes -> Z_q^n. keccak256 in counter mode; each 16-bit
/// little-endian chunk is rejection-sampled into [0, q).
RingPoly hash_to_ring(std::span<const uint8_t> input, const RingParams& p);

/// H_2: arbitrary bytes -> {0,1}^n embedded as a 0/1-coefficient polynomial.
RingPoly hash_to_bits(std::span<const uint8_t> input, uint32_t n);

/// Canonical byte serialization: coefficients as 2-byte little-endian values.
/// Requires q < 2^16.
Bytes poly_to_bytes(const RingPoly& a, const RingParams& p);
RingPoly poly_from_bytes(std::span<const uint8_t> data, const RingParams& p);

}  // namespace pqvrf::ring
