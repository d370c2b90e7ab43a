#include "symsing/rng.hpp"

#include <array>
#include <stdexcept>

namespace symsing {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream)
{
    std::array<std::uint32_t, 4> key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                     static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::seed_seq seq(key.begin(), key.end());
    return std::mt19937_64(seq);
}

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_(stream_id), engine_(make_engine(seed, stream_id))
{
}

std::uint64_t RngStream::below(std::uint64_t bound)
{
    if (bound == 0) throw std::invalid_argument("RngStream::below requires bound > 0");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

RngStream RngStream::split(std::uint64_t child) const
{
    return RngStream(mix(seed_ ^ mix(stream_)), child);
}

}  // namespace symsing
