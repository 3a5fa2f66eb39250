#ifndef SDPLAB_RNG_HPP
#define SDPLAB_RNG_HPP

#include <cstdint>

namespace sdplab {

inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// xoshiro256**; state is seeded via splitmix64 so any 64-bit key works.
struct Xoshiro256ss {
    std::uint64_t s[4];

    explicit Xoshiro256ss(std::uint64_t key = 0) {
        std::uint64_t sm = key;
        for (auto& w : s) w = splitmix64(sm);
    }
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    std::uint64_t next() {
        std::uint64_t r = rotl(s[1] * 5, 7) * 9;
        std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return r;
    }
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }
};

// Bernoulli(p) as a 64-bit threshold compare.  p <= 0 never fires, p >= 1 always.
inline std::uint64_t bernoulli_threshold(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return ~0ull;
    long double t = (long double)p * 18446744073709551616.0L;
    if (t >= 18446744073709551615.0L) return ~0ull;
    return (std::uint64_t)t;
}

// Deterministic substream family: (seed, stream_id) keys a generator, and
// substream(i) rekeys independently of call order or thread placement, so a
// sample's randomness depends only on its index.  2^64 substreams.
struct RandomSource {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    RandomSource() = default;
    RandomSource(std::uint64_t seed_, std::uint64_t stream_) : seed(seed_), stream_id(stream_) {}

    std::uint64_t key() const {
        std::uint64_t a = seed;
        std::uint64_t k = splitmix64(a);
        a = k ^ (stream_id * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull);
        return splitmix64(a);
    }
    Xoshiro256ss engine() const { return Xoshiro256ss(key()); }
    RandomSource substream(std::uint64_t i) const {
        std::uint64_t a = key() + i;
        return RandomSource(splitmix64(a), i);
    }
};

}  // namespace sdplab

#endif
