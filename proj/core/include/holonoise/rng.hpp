#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace holonoise {

/// Identifier recorded in run manifests. Streams are mt19937_64 engines
/// seeded with splitmix64(seed ^ splitmix64(stream_id)); normals come from
/// the Box-Muller transform on 53-bit uniforms. Everything here is fully
/// specified by the C++ standard plus this file, so output does not depend
/// on the standard library vendor.
inline constexpr std::string_view kPrngName =
    "mt19937_64[splitmix64(seed^splitmix64(stream))]+box-muller";

std::uint64_t splitmix64(std::uint64_t x);

/// Independent standard-normal stream for a (seed, stream_id) pair.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream_id);

    double operator()();

private:
    double uniform_open(); // (0, 1]

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Reserved stream ids for the simulated experiment.
namespace streams {
inline constexpr std::uint64_t kCommon = 0;
inline constexpr std::uint64_t kShot1 = 1;
inline constexpr std::uint64_t kShot2 = 2;
} // namespace streams

} // namespace holonoise
