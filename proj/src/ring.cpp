#include "pqvrf/ring.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "pqvrf/keccak.hpp"

namespace pqvrf::ring {

namespace {

using u128 = unsigned __int128;

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t q) {
    return static_cast<uint64_t>((u128)a * b % q);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t q) {
    uint64_t s = a + b;
    return s >= q ? s - q : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t q) {
    return a >= b ? a - b : a + q - b;
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t q) {
    uint64_t r = 1 % q;
    base %= q;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, q);
        base = mulmod(base, base, q);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // deterministic Miller-Rabin bases for 64-bit integers
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint32_t bit_reverse(uint32_t x, int bits) {
    uint32_t r = 0;
    for (int i = 0; i < bits; ++i) {
        r = (r << 1) | (x & 1);
        x >>= 1;
    }
    return r;
}

/// Precomputed twiddle tables for one (n, q).
struct NttPlan {
    uint32_t n;
    uint64_t q;
    uint64_t n_inv;
    std::vector<uint64_t> psi_br;      // psi^brv(i), forward butterflies
    std::vector<uint64_t> psi_inv_br;  // psi^-brv(i), inverse butterflies
};

NttPlan build_plan(uint32_t n, uint64_t q) {
    // find psi of order exactly 2n: c = x^((q-1)/2n) with c^n = -1
    uint64_t psi = 0;
    for (uint64_t x = 2; x < q; ++x) {
        uint64_t c = powmod(x, (q - 1) / (2 * static_cast<uint64_t>(n)), q);
        if (powmod(c, n, q) == q - 1) {
            psi = c;
            break;
        }
    }
    if (psi == 0) throw InvalidInputError("no primitive 2n-th root of unity");

    int logn = 0;
    while ((1u << logn) < n) ++logn;

    NttPlan plan;
    plan.n = n;
    plan.q = q;
    plan.n_inv = powmod(n, q - 2, q);
    plan.psi_br.resize(n);
    plan.psi_inv_br.resize(n);
    uint64_t psi_inv = powmod(psi, q - 2, q);
    uint64_t fwd = 1, inv = 1;
    std::vector<uint64_t> pw(n), pwinv(n);
    for (uint32_t i = 0; i < n; ++i) {
        pw[i] = fwd;
        pwinv[i] = inv;
        fwd = mulmod(fwd, psi, q);
        inv = mulmod(inv, psi_inv, q);
    }
    for (uint32_t i = 0; i < n; ++i) {
        plan.psi_br[i] = pw[bit_reverse(i, logn)];
        plan.psi_inv_br[i] = pwinv[bit_reverse(i, logn)];
    }
    return plan;
}

const NttPlan& plan_for(const RingParams& p) {
    static std::map<std::pair<uint32_t, uint64_t>, NttPlan> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p.n, p.q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_plan(p.n, p.q)).first;
    return it->second;
}

}  // namespace

void RingParams::validate() const {
    if (n < 2 || (n & (n - 1)) != 0) throw InvalidInputError("ring degree n must be a power of two > 1");
    if (!is_prime_u64(q)) throw InvalidInputError("ring modulus q must be prime");
    if (q % (2 * static_cast<uint64_t>(n)) != 1) throw InvalidInputError("q must satisfy q = 1 (mod 2n)");
    if (!(sigma > 0.0)) throw InvalidInputError("sigma must be positive");
    if (!(s > 0.0)) throw InvalidInputError("s must be positive");
}

const RingParams& params_preset(uint32_t id) {
    // signature ring sigma: set to q so that response vectors reduced mod q
    // are statistically uniform; see ringsig.hpp notes.
    // trapdoor width s = 1.17 * sqrt(q / (2n)).
    static const RingParams rlwe256{256, 7681, 3.2, 1.0};
    static const RingParams sig512{512, 12289, 12289.0, 4.0538};
    static const RingParams toy8{8, 17, 2.0, 1.2};
    static const RingParams toy16{16, 97, 4.0, 2.0};
    switch (id) {
        case 1: return rlwe256;
        case 2: return sig512;
        case 3: return toy8;
        case 4: return toy16;
        default: throw InvalidInputError("unknown params preset id");
    }
}

uint32_t preset_id(const RingParams& p) {
    for (uint32_t id = 1; id <= 4; ++id) {
        if (params_preset(id) == p) return id;
    }
    return 0;
}

RingPoly zero_poly(const RingParams& p) {
    RingPoly r;
    r.c.assign(p.n, 0);
    return r;
}

RingPoly one_poly(const RingParams& p) {
    RingPoly r = zero_poly(p);
    r.c[0] = 1;
    return r;
}

void check_conforms(const RingPoly& a, const RingParams& p) {
    if (a.c.size() != p.n) throw InvalidInputError("polynomial length does not match ring degree");
    for (uint32_t v : a.c) {
        if (v >= p.q) throw InvalidInputError("coefficient out of canonical range [0, q)");
    }
}

RingPoly ntt_forward(const RingPoly& a, const RingParams& p) {
    check_conforms(a, p);
    const NttPlan& plan = plan_for(p);
    const uint64_t q = p.q;
    RingPoly out = a;
    uint32_t t = p.n;
    for (uint32_t m = 1; m < p.n; m <<= 1) {
        t >>= 1;
        for (uint32_t i = 0; i < m; ++i) {
            uint64_t w = plan.psi_br[m + i];
            uint32_t j1 = 2 * i * t;
            for (uint32_t j = j1; j < j1 + t; ++j) {
                uint64_t u = out.c[j];
                uint64_t v = mulmod(out.c[j + t], w, q);
                out.c[j] = static_cast<uint32_t>(addmod(u, v, q));
                out.c[j + t] = static_cast<uint32_t>(submod(u, v, q));
            }
        }
    }
    return out;
}

RingPoly ntt_inverse(const RingPoly& a, const RingParams& p) {
    check_conforms(a, p);
    const NttPlan& plan = plan_for(p);
    const uint64_t q = p.q;
    RingPoly out = a;
    uint32_t t = 1;
    for (uint32_t m = p.n; m > 1; m >>= 1) {
        uint32_t j1 = 0;
        uint32_t h = m >> 1;
        for (uint32_t i = 0; i < h; ++i) {
            uint64_t w = plan.psi_inv_br[h + i];
            for (uint32_t j = j1; j < j1 + t; ++j) {
                uint64_t u = out.c[j];
                uint64_t v = out.c[j + t];
                out.c[j] = static_cast<uint32_t>(addmod(u, v, q));
                out.c[j + t] = static_cast<uint32_t>(mulmod(submod(u, v, q), w, q));
            }
            j1 += 2 * t;
        }
        t <<= 1;
    }
    for (uint32_t j = 0; j < p.n; ++j)
        out.c[j] = static_cast<uint32_t>(mulmod(out.c[j], plan.n_inv, q));
    return out;
}

RingPoly ring_add(const RingPoly& a, const RingPoly& b, const RingParams& p) {
    check_conforms(a, p);
    check_conforms(b, p);
    RingPoly r = a;
    for (uint32_t i = 0; i < p.n; ++i) r.c[i] = static_cast<uint32_t>(addmod(r.c[i], b.c[i], p.q));
    return r;
}

RingPoly ring_sub(const RingPoly& a, const RingPoly& b, const RingParams& p) {
    check_conforms(a, p);
    check_conforms(b, p);
    RingPoly r = a;
    for (uint32_t i = 0; i < p.n; ++i) r.c[i] = static_cast<uint32_t>(submod(r.c[i], b.c[i], p.q));
    return r;
}

RingPoly ring_neg(const RingPoly& a, const RingParams& p) {
    check_conforms(a, p);
    RingPoly r = a;
    for (uint32_t i = 0; i < p.n; ++i) r.c[i] = static_cast<uint32_t>(submod(0, r.c[i], p.q));
    return r;
}

RingPoly ring_scalar_mul(const RingPoly& a, uint64_t k, const RingParams& p) {
    check_conforms(a, p);
    RingPoly r = a;
    k %= p.q;
    for (uint32_t i = 0; i < p.n; ++i) r.c[i] = static_cast<uint32_t>(mulmod(r.c[i], k, p.q));
    return r;
}

RingPoly ring_mul(const RingPoly& a, const RingPoly& b, const RingParams& p) {
    RingPoly fa = ntt_forward(a, p);
    RingPoly fb = ntt_forward(b, p);
    for (uint32_t i = 0; i < p.n; ++i)
        fa.c[i] = static_cast<uint32_t>(mulmod(fa.c[i], fb.c[i], p.q));
    return ntt_inverse(fa, p);
}

RingPoly ring_mul_schoolbook(const RingPoly& a, const RingPoly& b, const RingParams& p) {
    check_conforms(a, p);
    check_conforms(b, p);
    const uint64_t q = p.q;
    RingPoly r = zero_poly(p);
    for (uint32_t i = 0; i < p.n; ++i) {
        if (a.c[i] == 0) continue;
        for (uint32_t j = 0; j < p.n; ++j) {
            uint64_t prod = mulmod(a.c[i], b.c[j], q);
            uint32_t k = i + j;
            if (k < p.n) {
                r.c[k] = static_cast<uint32_t>(addmod(r.c[k], prod, q));
            } else {
                // x^n = -1 wraparound
                r.c[k - p.n] = static_cast<uint32_t>(submod(r.c[k - p.n], prod, q));
            }
        }
    }
    return r;
}

RingPoly ntt_pointwise_mul(const RingPoly& a, const RingPoly& b, const RingParams& p) {
    check_conforms(a, p);
    check_conforms(b, p);
    RingPoly r = a;
    for (uint32_t i = 0; i < p.n; ++i)
        r.c[i] = static_cast<uint32_t>(mulmod(r.c[i], b.c[i], p.q));
    return r;
}

RingPoly ring_inverse(const RingPoly& a, const RingParams& p) {
    RingPoly fa = ntt_forward(a, p);
    for (uint32_t i = 0; i < p.n; ++i) {
        if (fa.c[i] == 0) throw UnsolvableError("element not invertible in R_q");
        fa.c[i] = static_cast<uint32_t>(powmod(fa.c[i], p.q - 2, p.q));
    }
    return ntt_inverse(fa, p);
}

int64_t center_lift(uint64_t c, uint64_t q) {
    return c * 2 > q ? static_cast<int64_t>(c) - static_cast<int64_t>(q) : static_cast<int64_t>(c);
}

uint32_t from_centered(int64_t v, uint64_t q) {
    int64_t m = v % static_cast<int64_t>(q);
    if (m < 0) m += static_cast<int64_t>(q);
    return static_cast<uint32_t>(m);
}

std::vector<int64_t> centered_coeffs(const RingPoly& a, const RingParams& p) {
    check_conforms(a, p);
    std::vector<int64_t> out(p.n);
    for (uint32_t i = 0; i < p.n; ++i) out[i] = center_lift(a.c[i], p.q);
    return out;
}

RingPoly poly_from_centered(const std::vector<int64_t>& v, const RingParams& p) {
    if (v.size() != p.n) throw InvalidInputError("length mismatch");
    RingPoly r;
    r.c.resize(p.n);
    for (uint32_t i = 0; i < p.n; ++i) r.c[i] = from_centered(v[i], p.q);
    return r;
}

double sq_norm_centered(const RingPoly& a, const RingParams& p) {
    check_conforms(a, p);
    double s = 0.0;
    for (uint32_t i = 0; i < p.n; ++i) {
        double v = static_cast<double>(center_lift(a.c[i], p.q));
        s += v * v;
    }
    return s;
}

double euclidean_norm_centered(const RingPoly& a, const RingParams& p) {
    return std::sqrt(sq_norm_centered(a, p));
}

RingPoly hash_to_ring(std::span<const uint8_t> input, const RingParams& p) {
    if (p.q >= (1ull << 16)) throw InvalidInputError("hash_to_ring requires q < 2^16");
    const uint64_t limit = (65536 / p.q) * p.q;  // rejection bound, unbiased mod q
    RingPoly r;
    r.c.reserve(p.n);
    Bytes msg(input.begin(), input.end());
    size_t ctr_off = msg.size();
    msg.resize(msg.size() + 4);
    for (uint32_t ctr = 0; r.c.size() < p.n; ++ctr) {
        msg[ctr_off] = static_cast<uint8_t>(ctr >> 24);
        msg[ctr_off + 1] = static_cast<uint8_t>(ctr >> 16);
        msg[ctr_off + 2] = static_cast<uint8_t>(ctr >> 8);
        msg[ctr_off + 3] = static_cast<uint8_t>(ctr);
        Hash32 h = keccak256(msg);
        for (size_t i = 0; i + 2 <= h.size() && r.c.size() < p.n; i += 2) {
            uint64_t chunk = static_cast<uint64_t>(h[i]) | (static_cast<uint64_t>(h[i + 1]) << 8);
            if (chunk < limit) r.c.push_back(static_cast<uint32_t>(chunk % p.q));
        }
    }
    return r;
}

RingPoly hash_to_bits(std::span<const uint8_t> input, uint32_t n) {
    RingPoly r;
    r.c.reserve(n);
    Bytes msg(input.begin(), input.end());
    size_t ctr_off = msg.size();
    msg.resize(msg.size() + 4);
    for (uint32_t ctr = 0; r.c.size() < n; ++ctr) {
        msg[ctr_off] = static_cast<uint8_t>(ctr >> 24);
        msg[ctr_off + 1] = static_cast<uint8_t>(ctr >> 16);
        msg[ctr_off + 2] = static_cast<uint8_t>(ctr >> 8);
        msg[ctr_off + 3] = static_cast<uint8_t>(ctr);
        Hash32 h = keccak256(msg);
        for (size_t i = 0; i < 256 && r.c.size() < n; ++i) {
            r.c.push_back((h[i / 8] >> (i % 8)) & 1);
        }
    }
    return r;
}

Bytes poly_to_bytes(const RingPoly& a, const RingParams& p) {
    check_conforms(a, p);
    if (p.q >= (1ull << 16)) throw InvalidInputError("2-byte serialization requires q < 2^16");
    Bytes out;
    out.reserve(2 * p.n);
    for (uint32_t v : a.c) {
        out.push_back(static_cast<uint8_t>(v & 0xff));
        out.push_back(static_cast<uint8_t>(v >> 8));
    }
    return out;
}

RingPoly poly_from_bytes(std::span<const uint8_t> data, const RingParams& p) {
    if (data.size() != 2 * static_cast<size_t>(p.n)) throw FormatError("serialized polynomial has wrong size");
    RingPoly r;
    r.c.resize(p.n);
    for (uint32_t i = 0; i < p.n; ++i) {
        uint32_t v = static_cast<uint32_t>(data[2 * i]) | (static_cast<uint32_t>(data[2 * i + 1]) << 8);
        if (v >= p.q) throw FormatError("serialized coefficient out of range");
        r.c[i] = v;
    }
    return r;
}

}  // namespace pqvrf::ring
