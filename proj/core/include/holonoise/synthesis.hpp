#pragma once

#include "holonoise/holo_model.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace holonoise {

/// Everything needed to reproduce one simulated twin-interferometer run.
struct ExperimentConfig {
    double arm_length = 40.0;          ///< m
    double shot_asd = 2e-18;           ///< flat shot-noise ASD, m/sqrt(Hz)
    double sample_rate = 5e7;          ///< Hz
    std::size_t n_samples = 1u << 22;  ///< power of two, >= 2^10
    std::uint64_t seed = 1;
    double holo_scale = 1.0;           ///< multiplier on sigma2; 0 disables the signal
    std::size_t segment_length = 4096; ///< Welch segment, power of two
    double overlap = 0.5;              ///< Welch overlap fraction in [0, 0.75]

    /// Throws DomainError on any violated invariant.
    void validate() const;
};

/// Two synchronized displacement channels plus the injected common component.
struct TimeSeriesPair {
    double sample_rate = 0.0;
    std::vector<double> ch1;
    std::vector<double> ch2;
    std::vector<double> common;
};

/// Stationary Gaussian sequence with autocovariance model.autocorrelation(k / fs),
/// generated by circulant embedding. Throws DomainError when fs * tau_c < 4 or
/// n < 2 ceil(fs tau_c), SynthesisError if an embedding eigenvalue is below
/// -1e-9 sigma2.
std::vector<double> synthesize_common(const HolographicModel& model, double sample_rate,
                                      std::size_t n, std::uint64_t seed);

/// Circulant eigenvalues for the sampled triangular autocovariance embedded in
/// a circle of length m. Exposed for tests.
std::vector<double> circulant_eigenvalues(const HolographicModel& model, double sample_rate,
                                          std::size_t m);

/// i.i.d. N(0, asd^2 fs / 2) samples: a flat one-sided PSD of asd^2.
std::vector<double> white_noise(double asd, double sample_rate, std::size_t n, std::uint64_t seed,
                                std::uint64_t stream_id);

/// ch_i = sqrt(holo_scale) common + shot_i. The three components are generated
/// concurrently on independent streams; the result does not depend on
/// scheduling.
TimeSeriesPair synthesize_pair(const ExperimentConfig& config);

} // namespace holonoise
