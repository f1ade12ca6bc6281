#include "holonoise/slit_demo.hpp"

#include "holonoise/constants.hpp"
#include "holonoise/errors.hpp"
#include "holonoise/holo_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace holonoise {

namespace {

constexpr std::size_t kMinAngles = 64;

double sinc(double x) {
    if (x == 0.0) {
        return 1.0;
    }
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

void normalize(std::vector<double>& v) {
    double total = 0.0;
    for (double x : v) {
        total += x;
    }
    if (!(total > 0.0)) {
        throw DomainError("pattern has no power on the angle grid");
    }
    for (double& x : v) {
        x /= total;
    }
}

} // namespace

SlitSetup SlitSetup::planck(double screen_distance_m, double separation_m) {
    SlitSetup s;
    s.screen_distance = screen_distance_m;
    s.separation = separation_m;
    s.wavelength = codata_constants().l_P;
    s.slit_width = s.wavelength;
    return s;
}

void SlitSetup::validate() const {
    if (!(separation >= 0.0) || !std::isfinite(separation)) {
        throw DomainError("slit separation must be >= 0");
    }
    if (!(slit_width > 0.0) || !(screen_distance > 0.0) || !(wavelength > 0.0) ||
        !std::isfinite(slit_width) || !std::isfinite(screen_distance) ||
        !std::isfinite(wavelength)) {
        throw DomainError("slit width, screen distance and wavelength must be positive");
    }
    if (n_angles < kMinAngles) {
        throw DomainError("angle grid needs at least 64 points");
    }
    if (angle_span && !(*angle_span > 0.0 && *angle_span <= std::numbers::pi)) {
        throw DomainError("angle span must lie in (0, pi]");
    }
}

std::vector<double> angle_grid(const SlitSetup& setup) {
    setup.validate();
    double span = 0.0;
    if (setup.angle_span) {
        span = *setup.angle_span;
    } else {
        const double s = std::min(1.0, setup.wavelength / transverse_uncertainty(setup.screen_distance));
        span = 2.0 * std::asin(s);
    }
    std::vector<double> theta(setup.n_angles);
    const double step = span / static_cast<double>(setup.n_angles - 1);
    for (std::size_t j = 0; j < setup.n_angles; ++j) {
        theta[j] = -0.5 * span + step * static_cast<double>(j);
    }
    return theta;
}

Pattern blurred_pattern(const SlitSetup& setup, double blur_sigma) {
    if (!(blur_sigma >= 0.0) || !std::isfinite(blur_sigma)) {
        throw DomainError("blur scale must be >= 0");
    }
    Pattern p;
    p.angles = angle_grid(setup);
    p.intensity.resize(p.angles.size());
    const double pi = std::numbers::pi;
    const double g = 2.0 * pi * pi * blur_sigma * blur_sigma;
    for (std::size_t j = 0; j < p.angles.size(); ++j) {
        const double u = std::sin(p.angles[j]) / setup.wavelength;
        // Convolving the aperture with a Gaussian multiplies its transform by
        // exp(-2 pi^2 sigma^2 u^2).
        const double amp = sinc(setup.slit_width * u) * std::cos(pi * setup.separation * u) *
                           std::exp(-g * u * u);
        p.intensity[j] = amp * amp;
    }
    normalize(p.intensity);
    return p;
}

Pattern fraunhofer_pattern(const SlitSetup& setup) { return blurred_pattern(setup, 0.0); }

Pattern information_blurred_pattern(const SlitSetup& setup) {
    setup.validate();
    return blurred_pattern(setup, transverse_uncertainty(setup.screen_distance));
}

double pattern_distance(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size()) {
        throw DomainError("patterns have different grid sizes");
    }
    double diff = 0.0;
    double np = 0.0;
    double nq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        diff += d * d;
        np += p[i] * p[i];
        nq += q[i] * q[i];
    }
    if (np + nq == 0.0) {
        return 0.0;
    }
    return std::clamp(std::sqrt(diff / (np + nq)), 0.0, 1.0);
}

PatternComparison distinguishability(const SlitSetup& setup) {
    setup.validate();
    SlitSetup merged = setup;
    merged.separation = 0.0;
    const Pattern two = information_blurred_pattern(setup);
    const Pattern one = information_blurred_pattern(merged);
    return {pattern_distance(two.intensity, one.intensity), setup.separation,
            transverse_uncertainty(setup.screen_distance)};
}

std::vector<PatternComparison> separation_sweep(const SlitSetup& base, double lo, double hi,
                                                std::size_t n_points) {
    if (!(lo > 0.0) || !(hi > lo) || n_points < 2) {
        throw DomainError("sweep needs 0 < lo < hi and at least two points");
    }
    base.validate();
    SlitSetup merged = base;
    merged.separation = 0.0;
    const Pattern reference = information_blurred_pattern(merged);
    const double bound = transverse_uncertainty(base.screen_distance);

    std::vector<PatternComparison> out;
    out.reserve(n_points);
    const double step = std::log(hi / lo) / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        SlitSetup s = base;
        s.separation = lo * std::exp(step * static_cast<double>(i));
        const Pattern p = information_blurred_pattern(s);
        out.push_back({pattern_distance(p.intensity, reference.intensity), s.separation, bound});
    }
    return out;
}

std::optional<double> threshold_crossing(const std::vector<PatternComparison>& sweep,
                                         double threshold) {
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        const auto& a = sweep[i - 1];
        const auto& b = sweep[i];
        if (a.distance_metric < threshold && b.distance_metric >= threshold) {
            const double t = (threshold - a.distance_metric) / (b.distance_metric - a.distance_metric);
            return std::exp(std::log(a.separation) + t * (std::log(b.separation) - std::log(a.separation)));
        }
    }
    if (!sweep.empty() && sweep.front().distance_metric >= threshold) {
        return sweep.front().separation;
    }
    return std::nullopt;
}

} // namespace holonoise
