#include "holonoise/detection.hpp"

#include "holonoise/errors.hpp"
#include "holonoise/fft.hpp"

#include <cmath>
#include <limits>

namespace holonoise {

namespace {

constexpr std::size_t kMinAveragesForGaussianNull = 30;

// |DFT(w_n w_{n+qH})|^2 / (sum w^2)^2 for every segment offset q that overlaps.
std::vector<std::vector<double>> overlap_kernels(Window window, std::size_t n, std::size_t hop) {
    const auto w = window_coefficients(window, n);
    double s2 = 0.0;
    for (double v : w) {
        s2 += v * v;
    }
    std::vector<std::vector<double>> kernels;
    RealFft fft(n);
    for (std::size_t shift = 0; shift < n; shift += hop) {
        auto in = fft.input();
        for (std::size_t i = 0; i < n; ++i) {
            in[i] = i + shift < n ? w[i] * w[i + shift] : 0.0;
        }
        fft.execute();
        const auto out = fft.output();
        std::vector<double> k(n);
        for (std::size_t m = 0; m <= n / 2; ++m) {
            k[m] = std::norm(out[m]) / (s2 * s2);
        }
        for (std::size_t m = n / 2 + 1; m < n; ++m) {
            k[m] = k[n - m];
        }
        kernels.push_back(std::move(k));
    }
    return kernels;
}

} // namespace

std::vector<std::size_t> band_bins(double sample_rate, std::size_t segment_length, Band band) {
    if (!(band.hi_hz >= band.lo_hz)) {
        throw DomainError("band upper edge below lower edge");
    }
    std::vector<std::size_t> bins;
    const double df = sample_rate / static_cast<double>(segment_length);
    for (std::size_t k = 2; k < segment_length / 2; ++k) {
        const double f = static_cast<double>(k) * df;
        if (f >= band.lo_hz && f <= band.hi_hz) {
            bins.push_back(k);
        }
    }
    return bins;
}

Band default_band(const HolographicModel& model, double sample_rate, std::size_t segment_length) {
    return {2.0 * sample_rate / static_cast<double>(segment_length), 0.5 / model.tau_c()};
}

double predicted_snr(const HolographicModel& model, const DetectorSetup& setup, std::size_t n_avg,
                     Band band) {
    const auto bins = band_bins(setup.sample_rate, setup.segment_length, band);
    if (bins.empty()) {
        throw DomainError("band contains no usable frequency bins");
    }
    const double shot = setup.shot_asd * setup.shot_asd;
    const double df = setup.sample_rate / static_cast<double>(setup.segment_length);
    double sum = 0.0;
    for (std::size_t k : bins) {
        const double sh = setup.holo_scale * model.psd(static_cast<double>(k) * df);
        if (sh == 0.0) {
            continue;
        }
        const double p = shot + sh;
        sum += sh * sh / (p * p);
    }
    return std::sqrt(static_cast<double>(n_avg) * sum);
}

std::size_t required_averages(const HolographicModel& model, const DetectorSetup& setup, Band band,
                              double target_sigma) {
    if (!(target_sigma > 0.0) || !std::isfinite(target_sigma)) {
        throw DomainError("target significance must be positive");
    }
    const double per_avg = predicted_snr(model, setup, 1, band);
    if (!(per_avg > 0.0)) {
        throw UnreachableTargetError("no signal power in band; target significance unreachable");
    }
    const double ratio = target_sigma / per_avg;
    const double estimate = std::ceil(ratio * ratio);
    if (estimate > static_cast<double>(std::numeric_limits<std::size_t>::max() / 2)) {
        throw UnreachableTargetError("required number of averages overflows");
    }
    auto n = std::max<std::size_t>(1, static_cast<std::size_t>(estimate));
    // Rounding guard around the closed-form inverse.
    while (predicted_snr(model, setup, n, band) < target_sigma) {
        ++n;
    }
    while (n > 1 && predicted_snr(model, setup, n - 1, band) >= target_sigma) {
        --n;
    }
    return n;
}

double averaged_duration(std::size_t n_avg, std::size_t segment_length, double overlap,
                         double sample_rate) {
    if (n_avg == 0) {
        return 0.0;
    }
    const std::size_t hop = welch_hop(segment_length, overlap);
    return (static_cast<double>(segment_length) + static_cast<double>(n_avg - 1) * static_cast<double>(hop)) /
           sample_rate;
}

double integration_time_for(const HolographicModel& model, const DetectorSetup& setup, Band band,
                            double target_sigma) {
    const std::size_t n = required_averages(model, setup, band, target_sigma);
    return averaged_duration(n, setup.segment_length, setup.overlap, setup.sample_rate);
}

double band_average_null_variance(const SpectralEstimate& estimate,
                                  std::span<const std::size_t> bins) {
    if (bins.empty()) {
        throw DomainError("band contains no usable frequency bins");
    }
    const std::size_t n = estimate.segment_length;
    const std::size_t hop = welch_hop(n, estimate.overlap);
    const auto kernels = overlap_kernels(estimate.window, n, hop);
    const auto n_avg = static_cast<double>(estimate.n_avg);

    // Cov(Re C_sk, Re C_s'l) = (a_k a_l / 2) (|G_q(k-l)|^2 + |G_q(k+l)|^2), q = s' - s,
    // with a_k = sqrt(P1 P2) at bin k. Summing over segment pairs weights
    // offset q by (n_avg - |q|); the -q term mirrors k - l.
    std::vector<double> amp(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) {
        amp[i] = std::sqrt(estimate.psd1[bins[i]] * estimate.psd2[bins[i]]);
    }
    double total = 0.0;
    for (std::size_t q = 0; q < kernels.size(); ++q) {
        const double pairs = n_avg - static_cast<double>(q);
        if (pairs <= 0.0) {
            break;
        }
        const auto& g = kernels[q];
        double sum_q = 0.0;
        for (std::size_t i = 0; i < bins.size(); ++i) {
            const std::size_t k = bins[i];
            double row = 0.0;
            for (std::size_t j = 0; j < bins.size(); ++j) {
                const std::size_t l = bins[j];
                const std::size_t diff = (k + n - l) % n;
                const std::size_t sum = (k + l) % n;
                // k-l and l-k share |G| because the kernel magnitude is even.
                const double c = q == 0 ? g[diff] + g[sum] : 2.0 * (g[diff] + g[sum]);
                row += amp[j] * c;
            }
            sum_q += amp[i] * row;
        }
        total += pairs * sum_q;
    }
    const double b = static_cast<double>(bins.size());
    return 0.5 * total / (n_avg * n_avg * b * b);
}

DetectionReport null_significance(const SpectralEstimate& estimate, Band band) {
    if (estimate.n_avg < kMinAveragesForGaussianNull) {
        throw DomainError("null significance needs at least 30 averaged segments");
    }
    if (estimate.csd.empty() || estimate.psd2.empty()) {
        throw DomainError("estimate carries no cross-spectrum");
    }
    const auto bins = band_bins(estimate.sample_rate, estimate.segment_length, band);
    if (bins.empty()) {
        throw DomainError("band contains no usable frequency bins");
    }
    double mean = 0.0;
    for (std::size_t k : bins) {
        mean += estimate.csd[k].real();
    }
    mean /= static_cast<double>(bins.size());

    DetectionReport r;
    r.band = band;
    r.n_avg = estimate.n_avg;
    r.n_bins = bins.size();
    r.integration_time = averaged_duration(estimate.n_avg, estimate.segment_length,
                                           estimate.overlap, estimate.sample_rate);
    r.mean_re_csd = mean;
    r.null_sigma = std::sqrt(band_average_null_variance(estimate, bins));
    if (r.null_sigma > 0.0) {
        r.sigma_level = mean / r.null_sigma;
    } else {
        r.sigma_level = mean > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    r.snr = std::max(r.sigma_level, 0.0);
    r.null_pvalue = 0.5 * std::erfc(r.sigma_level / std::sqrt(2.0));
    return r;
}

} // namespace holonoise
