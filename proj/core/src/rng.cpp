#include "holonoise/rng.hpp"

#include <cmath>
#include <numbers>

namespace holonoise {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t stream_id)
    : engine_(splitmix64(seed ^ splitmix64(stream_id))) {}

double GaussianStream::uniform_open() {
    // top 53 bits -> [0, 1) then shift to (0, 1]
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double GaussianStream::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

} // namespace holonoise
