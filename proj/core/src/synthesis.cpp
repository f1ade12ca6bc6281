#include "holonoise/synthesis.hpp"

#include "holonoise/errors.hpp"
#include "holonoise/fft.hpp"
#include "holonoise/rng.hpp"

#include <cmath>
#include <future>
#include <string>

namespace holonoise {

namespace {

constexpr double kEigenTolerance = 1e-9;

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw DomainError(message);
    }
}

} // namespace

void ExperimentConfig::validate() const {
    require(std::isfinite(arm_length) && arm_length > 0.0, "arm_length must be positive");
    require(std::isfinite(sample_rate) && sample_rate > 0.0, "sample_rate must be positive");
    require(std::isfinite(shot_asd) && shot_asd >= 0.0, "shot_asd must be >= 0");
    require(std::isfinite(holo_scale) && holo_scale >= 0.0, "holo_scale must be >= 0");
    require(is_power_of_two(n_samples) && n_samples >= (1u << 10),
            "n_samples must be a power of two >= 1024");
    const HolographicModel model(arm_length);
    require(sample_rate * model.tau_c() > 4.0,
            "sample_rate must exceed 4 / tau_c to resolve the correlation time");
    require(static_cast<double>(n_samples) >= 2.0 * std::ceil(sample_rate * model.tau_c()),
            "n_samples must cover at least two correlation times");
    require(is_power_of_two(segment_length) && segment_length <= n_samples && segment_length >= 8,
            "segment_length must be a power of two in [8, n_samples]");
    require(std::isfinite(overlap) && overlap >= 0.0 && overlap <= 0.75,
            "overlap must lie in [0, 0.75]");
}

std::vector<double> circulant_eigenvalues(const HolographicModel& model, double sample_rate,
                                          std::size_t m) {
    RealFft fft(m);
    auto row = fft.input();
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t wrapped = j <= m / 2 ? j : m - j;
        row[j] = model.autocorrelation(static_cast<double>(wrapped) / sample_rate);
    }
    fft.execute();
    const auto spectrum = fft.output();
    std::vector<double> eig(m);
    for (std::size_t k = 0; k <= m / 2; ++k) {
        eig[k] = spectrum[k].real();
    }
    for (std::size_t k = m / 2 + 1; k < m; ++k) {
        eig[k] = eig[m - k];
    }
    return eig;
}

std::vector<double> synthesize_common(const HolographicModel& model, double sample_rate,
                                      std::size_t n, std::uint64_t seed) {
    require(std::isfinite(sample_rate) && sample_rate * model.tau_c() >= 4.0,
            "undersampled: sample_rate * tau_c must be >= 4");
    require(static_cast<double>(n) >= 2.0 * std::ceil(sample_rate * model.tau_c()),
            "series shorter than two correlation times");

    // The covariance vanishes beyond tau_c, so a circle of length >= n + support
    // reproduces every in-window lag exactly.
    const std::size_t m = next_power_of_two(2 * n);
    std::vector<double> eig = circulant_eigenvalues(model, sample_rate, m);

    const double floor = -kEigenTolerance * model.sigma2();
    for (std::size_t k = 0; k < m; ++k) {
        if (eig[k] < floor) {
            throw SynthesisError("circulant embedding not non-negative definite: eigenvalue " +
                                 std::to_string(k) + " = " + std::to_string(eig[k]));
        }
        if (eig[k] < 0.0) {
            eig[k] = 0.0;
        }
    }

    ComplexFft fft(m, FftDirection::Forward);
    auto buf = fft.data();
    GaussianStream gauss(seed, streams::kCommon);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double re = gauss();
        const double im = gauss();
        buf[k] = std::sqrt(eig[k] * inv_m) * std::complex<double>(re, im);
    }
    fft.execute();

    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = buf[j].real();
    }
    return out;
}

std::vector<double> white_noise(double asd, double sample_rate, std::size_t n, std::uint64_t seed,
                                std::uint64_t stream_id) {
    require(std::isfinite(asd) && asd >= 0.0, "asd must be >= 0");
    require(std::isfinite(sample_rate) && sample_rate > 0.0, "sample_rate must be positive");
    std::vector<double> out(n, 0.0);
    if (asd == 0.0) {
        return out;
    }
    const double sigma = asd * std::sqrt(0.5 * sample_rate);
    GaussianStream gauss(seed, stream_id);
    for (double& x : out) {
        x = sigma * gauss();
    }
    return out;
}

TimeSeriesPair synthesize_pair(const ExperimentConfig& config) {
    config.validate();
    const HolographicModel model(config.arm_length);
    const std::size_t n = config.n_samples;

    auto common_task = std::async(std::launch::async, [&] {
        if (config.holo_scale == 0.0) {
            return std::vector<double>(n, 0.0);
        }
        auto c = synthesize_common(model, config.sample_rate, n, config.seed);
        const double amp = std::sqrt(config.holo_scale);
        for (double& x : c) {
            x *= amp;
        }
        return c;
    });
    auto shot1_task = std::async(std::launch::async, [&] {
        return white_noise(config.shot_asd, config.sample_rate, n, config.seed, streams::kShot1);
    });
    auto shot2 = white_noise(config.shot_asd, config.sample_rate, n, config.seed, streams::kShot2);
    auto shot1 = shot1_task.get();

    TimeSeriesPair pair;
    pair.sample_rate = config.sample_rate;
    pair.common = common_task.get();
    pair.ch1 = std::move(shot1);
    pair.ch2 = std::move(shot2);
    for (std::size_t i = 0; i < n; ++i) {
        pair.ch1[i] += pair.common[i];
        pair.ch2[i] += pair.common[i];
    }
    return pair;
}

} // namespace holonoise
