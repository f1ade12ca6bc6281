#pragma once

namespace holonoise {

/// Fundamental constants (SI) and the Planck units derived from them.
///
/// Field names follow the usual symbols so that the JSON emitted by the
/// `constants` subcommand reads naturally.
struct PhysicalConstants {
    double c;       ///< speed of light, m/s
    double hbar;    ///< reduced Planck constant, J s
    double G;       ///< Newton constant, m^3 / (kg s^2)
    double t_P;     ///< Planck time sqrt(hbar G / c^5), s
    double l_P;     ///< Planck length c t_P, m
    double omega_P; ///< Planck frequency 1 / t_P, Hz (ordinary frequency)
    double m_P;     ///< Planck mass sqrt(hbar c / G), kg
};

/// Derives the Planck units from c, hbar and G.
PhysicalConstants derive_planck_units(double c, double hbar, double G);

/// c exact (SI 2019), hbar and G at CODATA-2018 recommended values.
const PhysicalConstants& codata_constants();

/// Seconds in a Julian year, used when quoting speeds per year.
inline constexpr double kSecondsPerYear = 3.15576e7;

} // namespace holonoise
