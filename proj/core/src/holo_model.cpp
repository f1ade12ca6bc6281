#include "holonoise/holo_model.hpp"

#include "holonoise/constants.hpp"
#include "holonoise/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace holonoise {

namespace {

void require_positive(double value, const char* what) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw DomainError(std::string(what) + " must be positive and finite, got " +
                          std::to_string(value));
    }
}

double sinc(double x) {
    if (x == 0.0) {
        return 1.0;
    }
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

// sqrt(4 pi)
const double kSqrt4Pi = std::sqrt(4.0 * std::numbers::pi);

} // namespace

double transverse_uncertainty(double length_m) {
    require_positive(length_m, "length");
    return std::sqrt(length_m * codata_constants().l_P);
}

double angular_uncertainty(double length_m) {
    require_positive(length_m, "length");
    return std::sqrt(codata_constants().l_P / length_m);
}

double exact_rms(double length_m) {
    require_positive(length_m, "length");
    return std::sqrt(length_m * codata_constants().l_P / kSqrt4Pi);
}

double angular_variance(double duration_s) {
    require_positive(duration_s, "duration");
    return codata_constants().t_P / duration_s;
}

double radial_resolution() { return codata_constants().l_P; }

HolographicModel::HolographicModel(double arm_length_m) : arm_length_(arm_length_m) {
    require_positive(arm_length_m, "arm length");
    const auto& k = codata_constants();
    sigma2_ = arm_length_m * k.l_P / kSqrt4Pi;
    tau_c_ = 2.0 * arm_length_m / k.c;
}

double HolographicModel::autocorrelation(double lag_s) const {
    const double a = std::abs(lag_s);
    if (!(a < tau_c_)) {
        return 0.0;
    }
    return sigma2_ * (1.0 - a / tau_c_);
}

double HolographicModel::psd(double freq_hz) const {
    if (!(freq_hz >= 0.0) || !std::isfinite(freq_hz)) {
        throw DomainError("frequency must be non-negative and finite");
    }
    const double s = sinc(freq_hz * tau_c_);
    return 2.0 * sigma2_ * tau_c_ * s * s;
}

double HolographicModel::drift_speed() const { return std::sqrt(sigma2_) / tau_c_; }

InfoBudget info_budget(double length_m) {
    require_positive(length_m, "length");
    const double l_p = codata_constants().l_P;
    if (length_m < l_p) {
        throw DomainError("region smaller than the Planck length");
    }
    const double n = length_m / l_p;
    InfoBudget b{};
    b.length = length_m;
    b.pixel_size = std::sqrt(2.0 * std::numbers::pi * length_m * l_p);
    b.refresh = 2.0 * length_m / codata_constants().c;
    b.dof_radial = n;
    b.dof_angular = n;
    b.total_info = n * n;
    b.field_theory_info = n * n * n;
    b.ratio = n;
    return b;
}

} // namespace holonoise
