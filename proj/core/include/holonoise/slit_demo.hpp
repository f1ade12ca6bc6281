#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace holonoise {

/// Far-field two-slit configuration.
struct SlitSetup {
    double separation = 0.0;      ///< center-to-center, m
    double slit_width = 0.0;      ///< m
    double screen_distance = 1.0; ///< L, m
    double wavelength = 0.0;      ///< m
    std::size_t n_angles = 4096;
    /// Full angular span of the grid (rad, centered on 0). When unset the span
    /// covers |sin(theta)| <= wavelength / transverse_uncertainty(L), i.e. the
    /// angular range where the blurred pattern carries any power.
    std::optional<double> angle_span;

    /// Planck-frequency radiation (wavelength c t_P) through slits one
    /// wavelength wide.
    static SlitSetup planck(double screen_distance_m, double separation_m);

    void validate() const;
};

struct Pattern {
    std::vector<double> angles;    ///< rad
    std::vector<double> intensity; ///< unit sum
};

/// Angle grid the patterns are evaluated on.
std::vector<double> angle_grid(const SlitSetup& setup);

/// Unit-normalized Fraunhofer intensity sinc^2(a u) cos^2(pi d u), u = sin(theta)/lambda.
Pattern fraunhofer_pattern(const SlitSetup& setup);

/// Pattern of the aperture convolved with a Gaussian of standard deviation
/// blur_sigma (m) along the transverse axis.
Pattern blurred_pattern(const SlitSetup& setup, double blur_sigma);

/// blurred_pattern at the transverse resolution sqrt(L c t_P).
Pattern information_blurred_pattern(const SlitSetup& setup);

struct PatternComparison {
    double distance_metric; ///< in [0, 1]
    double separation;      ///< m
    double bound;           ///< transverse_uncertainty(L), m
};

/// ||p - q||_2 / sqrt(||p||^2 + ||q||^2); in [0, 1] for non-negative inputs.
double pattern_distance(const std::vector<double>& p, const std::vector<double>& q);

/// Distance between the information-blurred two-slit pattern and the same
/// setup with the slits merged (separation 0).
PatternComparison distinguishability(const SlitSetup& setup);

/// Distinguishability on a log-spaced separation grid [lo, hi].
std::vector<PatternComparison> separation_sweep(const SlitSetup& base, double lo, double hi,
                                                std::size_t n_points);

/// Threshold for calling two patterns distinguishable.
inline constexpr double kDistinguishableThreshold = 0.1;

/// Separation at which the sweep first reaches `threshold`, interpolated
/// linearly in log(separation). Empty if the sweep never crosses.
std::optional<double> threshold_crossing(const std::vector<PatternComparison>& sweep,
                                         double threshold = kDistinguishableThreshold);

} // namespace holonoise
