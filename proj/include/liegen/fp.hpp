#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liegen::ff {

/// Arithmetic context for the prime field F_p, 2 <= p < 2^31.
/// Elements are canonical residues stored as uint32_t in [0, p).
class PrimeField {
public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (!is_prime_u32(p))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
    }

    uint32_t p() const { return p_; }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t base = a % p_, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(acc);
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime_u32(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    uint32_t p_;
};

/// SplitMix64: tiny deterministic PRNG, used for all randomized searches so
/// that every reported witness is replayable from its seed.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::domain_error("SplitMix64::below(0)");
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    uint32_t field_element(const PrimeField& f) { return static_cast<uint32_t>(below(f.p())); }

    /// Derives the per-worker stream for a user seed.
    static uint64_t derive(uint64_t user_seed, uint64_t worker_index) {
        SplitMix64 g(user_seed ^ (0xA5A5A5A5DEADBEEFULL + worker_index * 0x9E3779B97F4A7C15ULL));
        return g.next();
    }

private:
    uint64_t state_;
};

} // namespace liegen::ff
