#pragma once

#include <cstdint>

namespace zolab {

// Stateless counter-based randomness. Every draw is a pure function of its
// key, so parallel trials reproduce bit-identically regardless of schedule.
namespace rng {

constexpr std::uint64_t splitmix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t hash(std::uint64_t a, std::uint64_t b) noexcept {
    return splitmix(splitmix(a) ^ (b + 0x632be59bd9b4e019ULL + (a << 6) + (a >> 2)));
}

constexpr std::uint64_t hash(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    return hash(hash(a, b), c);
}

// Top 53 bits as a double in [0, 1).
constexpr double to_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace rng

// (master_seed, stream_id) fully determines the stream.
struct RngStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;

    // Uniform draw attached to the unordered vertex pair {v, w}, v < w.
    double pair_uniform(std::uint64_t v, std::uint64_t w) const noexcept {
        std::uint64_t key = rng::hash(master_seed, stream_id);
        return rng::to_unit(rng::hash(key, v, w));
    }

    // Uniform draw attached to an arbitrary counter.
    double uniform(std::uint64_t counter) const noexcept {
        return rng::to_unit(rng::hash(rng::hash(master_seed, stream_id), counter, 0x5bd1e995ULL));
    }

    RngStream substream(std::uint64_t id) const noexcept {
        return RngStream{master_seed, rng::hash(stream_id, id)};
    }
};

// Stream id for trial `trial` at universe size `n`; shared by every Monte
// Carlo routine so scans and single estimates draw identical samples.
constexpr std::uint64_t trial_stream(std::uint64_t n, std::uint64_t trial) noexcept {
    return rng::hash(n, trial, 0x7472696fULL);
}

}  // namespace zolab
