#pragma once

#include "holonoise/synthesis.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holonoise {

enum class Window { Hann, Rectangular };

std::string_view window_name(Window w);
/// Throws FormatError for unknown names.
Window parse_window(std::string_view name);

/// Periodic (DFT-even) window coefficients of length n.
std::vector<double> window_coefficients(Window w, std::size_t n);

struct WelchParams {
    std::size_t segment_length = 4096;
    double overlap = 0.5;
    Window window = Window::Hann;
};

/// Segment hop in samples for a given segment length and overlap.
std::size_t welch_hop(std::size_t segment_length, double overlap);
/// Number of full segments that fit in n samples.
std::size_t welch_segment_count(std::size_t n, std::size_t segment_length, double overlap);

/// Averaged one-sided spectra of a channel pair. PSDs are normalized so that
/// a white input with one-sided level S returns S; DC and Nyquist bins are
/// not doubled. csd[k] = <conj(X1) X2>.
struct SpectralEstimate {
    double sample_rate = 0.0;
    std::vector<double> freqs;
    std::vector<double> psd1;
    std::vector<double> psd2;
    std::vector<std::complex<double>> csd;
    std::vector<double> coherence;
    std::size_t n_avg = 0;
    std::size_t segment_length = 0;
    Window window = Window::Hann;
    double overlap = 0.0;

    double bin_width() const { return sample_rate / static_cast<double>(segment_length); }
};

/// Welch PSD of one series; only freqs and psd1 are populated.
SpectralEstimate welch_psd(std::span<const double> series, double sample_rate,
                           const WelchParams& params = {});

/// Welch auto- and cross-spectra of two equally long series.
SpectralEstimate welch_csd(std::span<const double> x, std::span<const double> y,
                           double sample_rate, const WelchParams& params = {});

SpectralEstimate welch_csd(const TimeSeriesPair& pair, const WelchParams& params = {});

struct XcorrEstimate {
    std::vector<double> lags; ///< s, symmetric about 0
    std::vector<double> xcov; ///< m^2
    std::size_t n = 0;        ///< samples used
};

/// Unbiased sample cross-covariance (1/(n-|k|)) sum (x_i - xbar)(y_{i+k} - ybar)
/// for every sample lag |k| / fs <= max_lag. Throws DomainError when max_lag
/// exceeds a quarter of the series duration.
XcorrEstimate xcorr(std::span<const double> x, std::span<const double> y, double sample_rate,
                    double max_lag);

XcorrEstimate xcorr(const TimeSeriesPair& pair, double max_lag);

} // namespace holonoise
