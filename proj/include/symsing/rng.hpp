#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace symsing {

/// Reproducible 64-bit random stream addressed by (seed, stream id).
///
/// Backed by std::mt19937_64 seeded through std::seed_seq over the four 32-bit
/// halves of seed and stream id. Both algorithms are fully specified by the
/// C++ standard, so draws are bit-identical across platforms. Only raw engine
/// output is consumed (no std:: distributions, whose algorithms are
/// implementation-defined).
class RngStream {
public:
    static constexpr std::string_view kAlgorithm = "mt19937_64/seed_seq(seed,stream)";

    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Substream derived deterministically from this stream's key.
    RngStream split(std::uint64_t child) const;

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

}  // namespace symsing
