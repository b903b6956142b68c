#pragma once

#include <cstdint>

namespace urnlab {

// Counter-based uniform stream.
//
// A stream is a 64-bit key plus a draw counter; the n-th output is
// mix64(key + n * GOLDEN) where mix64 is the splitmix64 finalizer. Streams
// are stateless functions of (master_seed, replica_index, counter), so
// replicas can run in any order, on any thread, and reproduce bit-exactly.
// Test vectors live in the README and in tests/test_rng.cpp.

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// Per-replica key: hash of (master_seed, replica_index).
inline std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t replica_index) {
    return mix64(mix64(master_seed) + kGolden * replica_index);
}

class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t replica_index)
        : master_seed_(master_seed),
          replica_index_(replica_index),
          key_(stream_key(master_seed, replica_index)) {}

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t replica_index() const { return replica_index_; }
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next_u64() {
        ++counter_;
        return mix64(key_ + kGolden * counter_);
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t master_seed_;
    std::uint64_t replica_index_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace urnlab
