#pragma once

namespace holonoise {

/// Transverse resolution sqrt(L c t_P) at separation L (m).
double transverse_uncertainty(double length_m);

/// Angular resolution sqrt(c t_P / L), i.e. transverse_uncertainty(L) / L.
double angular_uncertainty(double length_m);

/// RMS transverse displacement sqrt(L c t_P / sqrt(4 pi)).
double exact_rms(double length_m);

/// Mean square angular variation t_P / tau over an averaging duration tau.
double angular_variance(double duration_s);

/// Longitudinal (radial) precision: one Planck length.
double radial_resolution();

/// Size of the observable universe used for the pixel-size check, m.
inline constexpr double kHubbleRadius = 1.3e26;

/// Quantum-geometry noise model for a single baseline.
///
/// The common transverse displacement is a stationary zero-mean process with
/// variance sigma2 and a triangular autocorrelation that vanishes at the
/// light round-trip time tau_c = 2L/c. Its one-sided spectrum is the exact
/// transform of the triangle, 2 sigma2 tau_c sinc^2(f tau_c).
class HolographicModel {
public:
    explicit HolographicModel(double arm_length_m);

    double arm_length() const { return arm_length_; }
    /// Total transverse position variance, m^2.
    double sigma2() const { return sigma2_; }
    /// Correlation time 2L/c, s.
    double tau_c() const { return tau_c_; }

    /// sigma2 (1 - |lag|/tau_c) inside the support, zero outside.
    double autocorrelation(double lag_s) const;

    /// One-sided PSD in m^2/Hz. Throws DomainError for f < 0.
    double psd(double freq_hz) const;

    /// RMS displacement divided by the correlation time, m/s.
    double drift_speed() const;

private:
    double arm_length_;
    double sigma2_;
    double tau_c_;
};

/// Information accounting for a region of size L.
struct InfoBudget {
    double length;            ///< m
    double pixel_size;        ///< sqrt(2 pi L c t_P), m
    double refresh;           ///< 2L/c, s
    double dof_radial;        ///< L / (c t_P)
    double dof_angular;       ///< L / (c t_P)
    double total_info;        ///< (L / c t_P)^2
    double field_theory_info; ///< (L / c t_P)^3
    double ratio;             ///< field_theory_info / total_info
};

/// Throws DomainError for L below one Planck length.
InfoBudget info_budget(double length_m);

} // namespace holonoise
