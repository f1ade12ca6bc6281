#include "holonoise/errors.hpp"
#include "holonoise/holo_model.hpp"
#include "holonoise/slit_demo.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

namespace holonoise {
namespace {

SlitSetup optical(double separation, double width, double span, std::size_t n) {
    SlitSetup s;
    s.wavelength = 1.0;
    s.slit_width = width;
    s.separation = separation;
    s.screen_distance = 1.0;
    s.n_angles = n;
    s.angle_span = span;
    return s;
}

TEST(Fraunhofer, SingleSlitIsSymmetric) {
    const Pattern p = fraunhofer_pattern(optical(0.0, 1.0, 1.5, 1001));
    for (std::size_t i = 0; i < p.intensity.size(); ++i) {
        EXPECT_NEAR(p.intensity[i], p.intensity[p.intensity.size() - 1 - i], 1e-15);
    }
    // separation 0 leaves only the envelope sinc^2(a sin(theta) / lambda)
    const double centre = p.intensity[500];
    const double u = std::sin(p.angles[600]);
    const double env = std::sin(M_PI * u) / (M_PI * u);
    EXPECT_NEAR(p.intensity[600] / centre, env * env, 1e-12);
}

TEST(Fraunhofer, FirstFringeMinimum) {
    // d sin(theta) = lambda / 2 with d = 3 lambda
    const Pattern p = fraunhofer_pattern(optical(3.0, 1.0, 0.8, 8001));
    const std::size_t mid = p.angles.size() / 2;
    std::size_t imin = mid + 1;
    while (imin + 1 < p.intensity.size() && p.intensity[imin + 1] < p.intensity[imin]) {
        ++imin;
    }
    const double step = p.angles[1] - p.angles[0];
    EXPECT_NEAR(std::sin(p.angles[imin]), 1.0 / 6.0, step);
}

TEST(Fraunhofer, UnitSumAndNonNegative) {
    for (double d : {0.0, 0.5, 3.0, 20.0}) {
        const Pattern p = fraunhofer_pattern(optical(d, 0.7, 2.0, 512));
        EXPECT_NEAR(std::accumulate(p.intensity.begin(), p.intensity.end(), 0.0), 1.0, 1e-12);
        for (double v : p.intensity) {
            EXPECT_GE(v, 0.0);
        }
    }
}

TEST(Fraunhofer, DegenerateGrid) {
    EXPECT_THROW(fraunhofer_pattern(optical(1.0, 1.0, 1.0, 10)), DomainError);
    EXPECT_THROW(fraunhofer_pattern(optical(1.0, 1.0, 0.0, 128)), DomainError);
    EXPECT_THROW(fraunhofer_pattern(optical(1.0, 1.0, 4.0, 128)), DomainError);
    EXPECT_THROW(fraunhofer_pattern(optical(-1.0, 1.0, 1.0, 128)), DomainError);
    EXPECT_THROW(fraunhofer_pattern(optical(1.0, 0.0, 1.0, 128)), DomainError);
}

TEST(BlurredPattern, VanishingBlurRecoversFraunhofer) {
    const SlitSetup s = optical(3.0, 1.0, 0.8, 2048);
    const Pattern sharp = fraunhofer_pattern(s);
    const Pattern blurred = blurred_pattern(s, 1e-6);
    for (std::size_t i = 0; i < sharp.intensity.size(); ++i) {
        if (sharp.intensity[i] > 1e-12) {
            EXPECT_NEAR(blurred.intensity[i] / sharp.intensity[i], 1.0, 1e-6);
        }
    }
}

TEST(InformationBlur, SmallSeparationIsSingleSlit) {
    const double L = 1.0;
    const double bound = transverse_uncertainty(L);
    const auto cmp = distinguishability(SlitSetup::planck(L, bound / 100.0));
    EXPECT_LT(cmp.distance_metric, 0.01);
    EXPECT_DOUBLE_EQ(cmp.bound, bound);
}

TEST(InformationBlur, LargeSeparationKeepsFringes) {
    const double L = 1.0;
    const auto cmp = distinguishability(SlitSetup::planck(L, 100.0 * transverse_uncertainty(L)));
    // Unresolved fringes: p = 2 q cos^2 so ||p - q||^2 / (||p||^2 + ||q||^2) -> (1/2) / (5/2).
    EXPECT_NEAR(cmp.distance_metric, 1.0 / std::sqrt(5.0), 2e-3);
}

TEST(InformationBlur, ZeroSeparationIsIdentical) {
    EXPECT_EQ(distinguishability(SlitSetup::planck(40.0, 0.0)).distance_metric, 0.0);
}

TEST(PatternDistance, Bounds) {
    const std::vector<double> a{1.0, 0.0, 0.0};
    const std::vector<double> b{0.0, 0.5, 0.5};
    EXPECT_DOUBLE_EQ(pattern_distance(a, a), 0.0);
    EXPECT_DOUBLE_EQ(pattern_distance(a, b), 1.0);
    EXPECT_THROW(pattern_distance(a, {1.0}), DomainError);
}

TEST(Sweep, MonotoneAndCrossesNearBound) {
    const double L = 1.0;
    const double bound = transverse_uncertainty(L);
    const auto sweep = separation_sweep(SlitSetup::planck(L, 0.0), bound / 30.0, bound * 30.0, 61);
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        EXPECT_GE(sweep[i].distance_metric, sweep[i - 1].distance_metric - 1e-9);
    }
    const auto cross = threshold_crossing(sweep);
    ASSERT_TRUE(cross.has_value());
    EXPECT_GT(*cross, bound / 3.0);
    EXPECT_LT(*cross, bound * 3.0);
}

TEST(Sweep, CrossingScalesAsSqrtL) {
    auto crossing = [](double L) {
        const double b = transverse_uncertainty(L);
        return *threshold_crossing(separation_sweep(SlitSetup::planck(L, 0.0), b / 30.0, b * 30.0, 81));
    };
    const double c1 = crossing(1.0);
    EXPECT_NEAR(crossing(2.0) / c1, std::sqrt(2.0), 0.05 * std::sqrt(2.0));
    EXPECT_NEAR(crossing(10.0) / c1, std::sqrt(10.0), 0.2 * std::sqrt(10.0));
}

TEST(Sweep, RejectsBadRange) {
    const SlitSetup s = SlitSetup::planck(1.0, 0.0);
    EXPECT_THROW(separation_sweep(s, 0.0, 1.0, 10), DomainError);
    EXPECT_THROW(separation_sweep(s, 2.0, 1.0, 10), DomainError);
    EXPECT_THROW(separation_sweep(s, 1.0, 2.0, 1), DomainError);
}

} // namespace
} // namespace holonoise
