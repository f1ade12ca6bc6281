#pragma once

#include "holonoise/holo_model.hpp"
#include "holonoise/spectral.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace holonoise {

struct Band {
    double lo_hz = 0.0;
    double hi_hz = 0.0;
};

/// Detector-side quantities shared by the SNR forecasts.
struct DetectorSetup {
    double shot_asd = 2e-18; ///< m/sqrt(Hz), per channel
    double sample_rate = 5e7;
    std::size_t segment_length = 4096;
    double overlap = 0.5;
    double holo_scale = 1.0;
};

struct DetectionReport {
    Band band;
    double snr = 0.0;             ///< max(sigma_level, 0)
    std::size_t n_avg = 0;
    std::size_t n_bins = 0;
    double integration_time = 0.0; ///< s of data spanned by the averaged segments
    double sigma_level = 0.0;      ///< z-score of the band-averaged Re CSD under the null
    double null_pvalue = 1.0;      ///< one-sided, P(Z >= sigma_level)
    double mean_re_csd = 0.0;      ///< m^2/Hz
    double null_sigma = 0.0;       ///< standard deviation of mean_re_csd under the null
};

/// Bins k with f_k in [lo, hi], excluding DC, the first bin and Nyquist:
/// per-segment mean removal leaks into bins 0 and 1 for both supported windows.
std::vector<std::size_t> band_bins(double sample_rate, std::size_t segment_length, Band band);

/// Main-lobe band [2 fs / N, 1 / (2 tau_c)] used when none is given.
Band default_band(const HolographicModel& model, double sample_rate, std::size_t segment_length);

/// sqrt(sum_k n_avg S_h^2 / (P1 P2)) over band bins, P_i = shot_asd^2 + S_h.
double predicted_snr(const HolographicModel& model, const DetectorSetup& setup, std::size_t n_avg,
                     Band band);

/// Segments needed for predicted_snr >= target_sigma.
std::size_t required_averages(const HolographicModel& model, const DetectorSetup& setup, Band band,
                              double target_sigma);

/// Data duration for required_averages, s.
double integration_time_for(const HolographicModel& model, const DetectorSetup& setup, Band band,
                            double target_sigma);

/// Span in seconds of n_avg overlapped segments.
double averaged_duration(std::size_t n_avg, std::size_t segment_length, double overlap,
                         double sample_rate);

/// Variance of the uniformly weighted band average of Re CSD for independent
/// channels whose spectra are locally flat at the estimated psd1, psd2. Accounts
/// for the window's bin-to-bin correlation and for segment overlap.
double band_average_null_variance(const SpectralEstimate& estimate,
                                  std::span<const std::size_t> bins);

/// z-score of the band-averaged real CSD. Requires n_avg >= 30.
DetectionReport null_significance(const SpectralEstimate& estimate, Band band);

} // namespace holonoise
