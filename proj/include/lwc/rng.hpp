#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lwc {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// independent stream for task `index` of a run seeded with `seed`
inline Rng substream(std::uint64_t seed, std::uint64_t index) { return Rng(derive_seed(seed, index)); }

// uniform on {0, ..., n-1}; Lemire's multiply-and-reject
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
        std::uint64_t threshold = (0 - n) % n;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(rng()) * n;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

// uniform on [0, 1) with 53 random bits
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(rng, i)]);
}

// draw an index from nonnegative weights given as a cumulative table
inline std::size_t draw_cumulative(const std::vector<double>& cumulative, Rng& rng) {
    double u = uniform01(rng) * cumulative.back();
    std::size_t lo = 0, hi = cumulative.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (cumulative[mid] > u) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

}  // namespace lwc
