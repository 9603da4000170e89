#pragma once

#include <cstdint>
#include <utility>

namespace sandwich {

namespace detail {

// splitmix64 finalizer: a bijective avalanche mix on 64 bits.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline int popcount64(std::uint64_t x) {
    int c = 0;
    while (x) {
        x &= x - 1;
        ++c;
    }
    return c;
}

}  // namespace detail

/// Deterministic splittable random stream.
///
/// Each (master_seed, stream_id) pair expands to an independent 128-bit key
/// via splitmix-style key derivation; the key seeds a splitmix generator with
/// a per-stream odd increment. Distinct stream ids under one master seed get
/// distinct keys by construction, so replicate k of a simulation can always
/// use stream_id = k regardless of scheduling and reproduce bit-identically.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : master_seed_(master_seed), stream_id_(stream_id) {
        const std::uint64_t base = detail::mix64(master_seed ^ 0x6a09e667f3bcc908ULL);
        key_hi_ = detail::mix64(base + detail::kGolden * (2 * stream_id));
        key_lo_ = detail::mix64(base + detail::kGolden * (2 * stream_id + 1));
        state_ = key_hi_;
        gamma_ = key_lo_ | 1ULL;
        // Reject weak increments with too few bit transitions (SplittableRandom's guard).
        if (detail::popcount64(gamma_ ^ (gamma_ >> 1)) < 24) {
            gamma_ ^= 0xaaaaaaaaaaaaaaaaULL;
        }
    }

    std::uint64_t next_u64() {
        state_ += gamma_;
        return detail::mix64(state_);
    }

    /// Uniform draw strictly inside (0, 1): 53-bit mantissa, half-ulp offset.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Child stream derivation for nested replication (e.g. bootstrap draws
    /// inside a Monte Carlo replicate). Depends only on this stream's
    /// identity, never on how much of it has been consumed.
    RngStream substream(std::uint64_t child_id) const {
        const std::uint64_t child_seed =
            detail::mix64(master_seed_ + detail::kGolden * stream_id_ + 0x3c6ef372fe94f82aULL);
        return RngStream(child_seed, child_id);
    }

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// 128-bit stream key, exposed so collision scans can assert distinctness.
    std::pair<std::uint64_t, std::uint64_t> key() const { return {key_hi_, key_lo_}; }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::uint64_t key_hi_;
    std::uint64_t key_lo_;
    std::uint64_t state_;
    std::uint64_t gamma_;
};

inline RngStream derive_stream(std::uint64_t master_seed, std::uint64_t stream_id) {
    return RngStream(master_seed, stream_id);
}

}  // namespace sandwich
