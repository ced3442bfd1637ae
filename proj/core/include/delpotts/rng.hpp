#ifndef DELPOTTS_RNG_HPP
#define DELPOTTS_RNG_HPP

#include <cstdint>
#include <cmath>

namespace delpotts {

// SplitMix64 finalizer. Full-avalanche mix of a 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// Key derivation for substreams: hash-combine a key with a salt.
// Substreams for (seed, k, l, ...) are built by chaining derive_key.
constexpr std::uint64_t derive_key(std::uint64_t key, std::uint64_t salt) {
    return mix64(key ^ (0x9E3779B97F4A7C15ULL + salt + (key << 6) + (key >> 2)));
}

constexpr std::uint64_t signed_salt(std::int64_t s) {
    return static_cast<std::uint64_t>(s);
}

// Counter-based stream: output i of stream k is mix64(k + (i+1)*golden).
// Streams with distinct keys are independent for Monte Carlo purposes, and
// a stream is reproducible from (key, counter) alone.
class RngStream {
public:
    RngStream() : key_(0), ctr_(0) {}
    explicit RngStream(std::uint64_t key) : key_(key), ctr_(0) {}

    static RngStream from(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        std::uint64_t k = mix64(seed + 0x632BE59BD9B4E019ULL);
        for (std::uint64_t p : path) k = derive_key(k, p);
        return RngStream(k);
    }

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return ctr_; }
    void set_counter(std::uint64_t c) { ctr_ = c; }

    std::uint64_t next_u64() {
        ++ctr_;
        return mix64(key_ + 0x9E3779B97F4A7C15ULL * ctr_);
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform double in (0, 1]; safe as a log() argument.
    double next_double_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Uniform integer in [0, n), unbiased (rejection).
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t v;
        do { v = next_u64(); } while (v >= limit);
        return v % n;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Poisson draw; product method, run in log space so large means work.
    int poisson(double mean) {
        if (mean <= 0.0) return 0;
        double s = 0.0;
        int k = -1;
        do {
            s += -std::log(next_double_pos());
            ++k;
        } while (s < mean);
        return k;
    }

private:
    std::uint64_t key_;
    std::uint64_t ctr_;
};

} // namespace delpotts

#endif
