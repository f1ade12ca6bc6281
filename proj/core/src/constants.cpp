#include "holonoise/constants.hpp"

#include <cmath>

namespace holonoise {

namespace {
constexpr double kSpeedOfLight = 299792458.0;      // exact
constexpr double kReducedPlanck = 1.054571817e-34; // CODATA 2018
constexpr double kNewtonG = 6.67430e-11;           // CODATA 2018
} // namespace

PhysicalConstants derive_planck_units(double c, double hbar, double G) {
    PhysicalConstants k{};
    k.c = c;
    k.hbar = hbar;
    k.G = G;
    k.t_P = std::sqrt(hbar * G / std::pow(c, 5));
    k.l_P = c * k.t_P;
    k.omega_P = 1.0 / k.t_P;
    k.m_P = std::sqrt(hbar * c / G);
    return k;
}

const PhysicalConstants& codata_constants() {
    static const PhysicalConstants constants =
        derive_planck_units(kSpeedOfLight, kReducedPlanck, kNewtonG);
    return constants;
}

} // namespace holonoise
