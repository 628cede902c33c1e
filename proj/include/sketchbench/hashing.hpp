#pragma once
// Seeded 64-bit hashing and seed-derivation utilities shared by all
// estimators. Every piece of randomness in the library bottoms out in an
// explicit 64-bit seed so runs are reproducible bit for bit.

#include <cstdint>
#include <cstring>
#include <cstddef>

namespace sketchbench {

using Seed = std::uint64_t;

// MurmurHash64A (Austin Appleby, public domain). Seeded, good avalanche,
// cheap on the short textual keys traces are made of.
inline std::uint64_t hash_bytes(const void* data, std::size_t len, Seed seed) {
    const std::uint64_t m = 0xc6a4a7935bd1e995ULL;
    const int r = 47;
    std::uint64_t h = seed ^ (len * m);

    const unsigned char* p = static_cast<const unsigned char*>(data);
    const unsigned char* end = p + (len & ~std::size_t{7});
    while (p != end) {
        std::uint64_t k;
        std::memcpy(&k, p, 8);
        p += 8;
        k *= m;
        k ^= k >> r;
        k *= m;
        h ^= k;
        h *= m;
    }

    switch (len & 7) {
        case 7: h ^= std::uint64_t(p[6]) << 48; [[fallthrough]];
        case 6: h ^= std::uint64_t(p[5]) << 40; [[fallthrough]];
        case 5: h ^= std::uint64_t(p[4]) << 32; [[fallthrough]];
        case 4: h ^= std::uint64_t(p[3]) << 24; [[fallthrough]];
        case 3: h ^= std::uint64_t(p[2]) << 16; [[fallthrough]];
        case 2: h ^= std::uint64_t(p[1]) << 8;  [[fallthrough]];
        case 1: h ^= std::uint64_t(p[0]);
                h *= m;
    }

    h ^= h >> r;
    h *= m;
    h ^= h >> r;
    return h;
}

inline std::uint64_t hash_u64(std::uint64_t value, Seed seed) {
    return hash_bytes(&value, sizeof(value), seed);
}

// splitmix64 step; used to derive independent sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Seed derive_seed(Seed master, std::uint64_t stream_id) {
    return splitmix64(master ^ splitmix64(stream_id));
}

}  // namespace sketchbench
