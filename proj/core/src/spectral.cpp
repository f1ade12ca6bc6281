#include "holonoise/spectral.hpp"

#include "holonoise/errors.hpp"
#include "holonoise/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace holonoise {

std::string_view window_name(Window w) {
    switch (w) {
    case Window::Hann:
        return "hann";
    case Window::Rectangular:
        return "rectangular";
    }
    return "unknown";
}

Window parse_window(std::string_view name) {
    if (name == "hann") {
        return Window::Hann;
    }
    if (name == "rectangular") {
        return Window::Rectangular;
    }
    throw FormatError("unknown window '" + std::string(name) + "'");
}

std::vector<double> window_coefficients(Window w, std::size_t n) {
    std::vector<double> c(n, 1.0);
    if (w == Window::Hann) {
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                        static_cast<double>(n));
        }
    }
    return c;
}

std::size_t welch_hop(std::size_t segment_length, double overlap) {
    const auto hop = static_cast<std::size_t>(
        std::llround(static_cast<double>(segment_length) * (1.0 - overlap)));
    return std::max<std::size_t>(hop, 1);
}

std::size_t welch_segment_count(std::size_t n, std::size_t segment_length, double overlap) {
    if (n < segment_length) {
        return 0;
    }
    return (n - segment_length) / welch_hop(segment_length, overlap) + 1;
}

namespace {

void check_params(std::size_t n, const WelchParams& p) {
    if (!is_power_of_two(p.segment_length) || p.segment_length < 2) {
        throw DomainError("segment_length must be a power of two >= 2");
    }
    if (!(p.overlap >= 0.0 && p.overlap <= 0.75)) {
        throw DomainError("overlap must lie in [0, 0.75]");
    }
    if (n < p.segment_length) {
        throw DomainError("series shorter than one segment");
    }
}

// Copies one segment, removes its mean and applies the window.
void load_segment(std::span<const double> src, std::span<const double> win, std::span<double> dst) {
    double mean = 0.0;
    for (double v : src) {
        mean += v;
    }
    mean /= static_cast<double>(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] = (src[i] - mean) * win[i];
    }
}

SpectralEstimate make_estimate(double sample_rate, std::size_t n, const WelchParams& p) {
    SpectralEstimate est;
    est.sample_rate = sample_rate;
    est.segment_length = p.segment_length;
    est.window = p.window;
    est.overlap = p.overlap;
    est.n_avg = welch_segment_count(n, p.segment_length, p.overlap);
    const std::size_t bins = p.segment_length / 2 + 1;
    est.freqs.resize(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        est.freqs[k] = static_cast<double>(k) * sample_rate / static_cast<double>(p.segment_length);
    }
    return est;
}

// Per-bin factor turning |X|^2 into a one-sided density.
std::vector<double> density_scale(double sample_rate, std::span<const double> win) {
    double s2 = 0.0;
    for (double w : win) {
        s2 += w * w;
    }
    const std::size_t nseg = win.size();
    std::vector<double> scale(nseg / 2 + 1, 2.0 / (sample_rate * s2));
    scale.front() = 1.0 / (sample_rate * s2);
    scale.back() = 1.0 / (sample_rate * s2);
    return scale;
}

} // namespace

SpectralEstimate welch_psd(std::span<const double> series, double sample_rate,
                           const WelchParams& params) {
    check_params(series.size(), params);
    if (!(sample_rate > 0.0)) {
        throw DomainError("sample_rate must be positive");
    }
    SpectralEstimate est = make_estimate(sample_rate, series.size(), params);
    const std::size_t nseg = params.segment_length;
    const std::size_t hop = welch_hop(nseg, params.overlap);
    const auto win = window_coefficients(params.window, nseg);
    const auto scale = density_scale(sample_rate, win);

    RealFft fft(nseg);
    std::vector<double> acc(nseg / 2 + 1, 0.0);
    for (std::size_t s = 0; s < est.n_avg; ++s) {
        load_segment(series.subspan(s * hop, nseg), win, fft.input());
        fft.execute();
        const auto out = fft.output();
        for (std::size_t k = 0; k < acc.size(); ++k) {
            acc[k] += std::norm(out[k]);
        }
    }
    const double inv_avg = 1.0 / static_cast<double>(est.n_avg);
    est.psd1.resize(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        est.psd1[k] = acc[k] * scale[k] * inv_avg;
    }
    return est;
}

SpectralEstimate welch_csd(std::span<const double> x, std::span<const double> y,
                           double sample_rate, const WelchParams& params) {
    if (x.size() != y.size()) {
        throw DomainError("channels have different lengths");
    }
    check_params(x.size(), params);
    if (!(sample_rate > 0.0)) {
        throw DomainError("sample_rate must be positive");
    }
    SpectralEstimate est = make_estimate(sample_rate, x.size(), params);
    const std::size_t nseg = params.segment_length;
    const std::size_t bins = nseg / 2 + 1;
    const std::size_t hop = welch_hop(nseg, params.overlap);
    const auto win = window_coefficients(params.window, nseg);
    const auto scale = density_scale(sample_rate, win);

    RealFft fx(nseg);
    RealFft fy(nseg);
    std::vector<double> a1(bins, 0.0);
    std::vector<double> a2(bins, 0.0);
    std::vector<std::complex<double>> a12(bins);
    for (std::size_t s = 0; s < est.n_avg; ++s) {
        load_segment(x.subspan(s * hop, nseg), win, fx.input());
        load_segment(y.subspan(s * hop, nseg), win, fy.input());
        fx.execute();
        fy.execute();
        const auto ox = fx.output();
        const auto oy = fy.output();
        for (std::size_t k = 0; k < bins; ++k) {
            a1[k] += std::norm(ox[k]);
            a2[k] += std::norm(oy[k]);
            a12[k] += std::conj(ox[k]) * oy[k];
        }
    }

    const double inv_avg = 1.0 / static_cast<double>(est.n_avg);
    est.psd1.resize(bins);
    est.psd2.resize(bins);
    est.csd.resize(bins);
    est.coherence.resize(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        const double f = scale[k] * inv_avg;
        est.psd1[k] = a1[k] * f;
        est.psd2[k] = a2[k] * f;
        est.csd[k] = a12[k] * f;
        const double denom = est.psd1[k] * est.psd2[k];
        est.coherence[k] = denom > 0.0 ? std::clamp(std::norm(est.csd[k]) / denom, 0.0, 1.0) : 0.0;
    }
    return est;
}

SpectralEstimate welch_csd(const TimeSeriesPair& pair, const WelchParams& params) {
    return welch_csd(pair.ch1, pair.ch2, pair.sample_rate, params);
}

XcorrEstimate xcorr(std::span<const double> x, std::span<const double> y, double sample_rate,
                    double max_lag) {
    if (x.size() != y.size() || x.empty()) {
        throw DomainError("channels must be non-empty and equally long");
    }
    if (!(sample_rate > 0.0) || !(max_lag >= 0.0)) {
        throw DomainError("sample_rate must be positive and max_lag non-negative");
    }
    const std::size_t n = x.size();
    const double duration = static_cast<double>(n) / sample_rate;
    if (max_lag > duration / 4.0) {
        throw DomainError("max_lag exceeds a quarter of the series duration");
    }
    const auto kmax = static_cast<std::size_t>(std::floor(max_lag * sample_rate + 1e-9));

    double xbar = 0.0;
    double ybar = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xbar += x[i];
        ybar += y[i];
    }
    xbar /= static_cast<double>(n);
    ybar /= static_cast<double>(n);

    // Linear (not circular) correlation through a zero-padded transform.
    const std::size_t m = next_power_of_two(n + kmax + 1);
    ComplexFft fwd(m, FftDirection::Forward);
    auto buf = fwd.data();
    for (std::size_t i = 0; i < m; ++i) {
        buf[i] = i < n ? std::complex<double>(x[i] - xbar, y[i] - ybar) : 0.0;
    }
    fwd.execute();

    // Unpack X and Y from the packed transform, form conj(X) Y.
    ComplexFft inv(m, FftDirection::Backward);
    auto prod = inv.data();
    for (std::size_t k = 0; k < m; ++k) {
        const std::complex<double> z = buf[k];
        const std::complex<double> zc = std::conj(buf[(m - k) % m]);
        const std::complex<double> xk = 0.5 * (z + zc);
        const std::complex<double> yk = std::complex<double>(0.0, -0.5) * (z - zc);
        prod[k] = std::conj(xk) * yk;
    }
    inv.execute();

    XcorrEstimate out;
    out.n = n;
    const std::size_t count = 2 * kmax + 1;
    out.lags.resize(count);
    out.xcov.resize(count);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < count; ++j) {
        const auto k = static_cast<long long>(j) - static_cast<long long>(kmax);
        // r[k] = sum_i x_i y_{i+k}; negative k wrap to the top of the buffer.
        const std::size_t idx = k >= 0 ? static_cast<std::size_t>(k) : m - static_cast<std::size_t>(-k);
        const double raw = prod[idx].real() * inv_m;
        out.lags[j] = static_cast<double>(k) / sample_rate;
        out.xcov[j] = raw / static_cast<double>(n - static_cast<std::size_t>(std::llabs(k)));
    }
    return out;
}

XcorrEstimate xcorr(const TimeSeriesPair& pair, double max_lag) {
    return xcorr(pair.ch1, pair.ch2, pair.sample_rate, max_lag);
}

} // namespace holonoise
