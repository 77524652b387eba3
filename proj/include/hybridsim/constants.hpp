#pragma once

// SI physical constants (CODATA 2018) and 87Rb atomic data shared by all
// modules.  Internal computation is SI throughout; angular frequencies are
// rad/s, module boundaries report ordinary Hz (omega / 2pi).

#include <cmath>
#include <numbers>

namespace hybridsim::phys {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * pi;

struct PhysicalConstants {
    double h = 6.62607015e-34;          // Planck constant [J s]
    double hbar = 6.62607015e-34 / two_pi;
    double k_B = 1.380649e-23;          // Boltzmann [J/K]
    double mu_B = 9.2740100783e-24;     // Bohr magneton [J/T]
    double mu_0 = 4.0e-7 * pi;          // vacuum permeability [T m/A]
    double g_grav = 9.80665;            // standard gravity [m/s^2]
    double c_light = 2.99792458e8;      // [m/s]
    double eps_0 = 8.8541878128e-12;    // [F/m]
};

inline constexpr PhysicalConstants si{};

// 87Rb 5^2 S_1/2 ground-state data.
struct AtomSpecies {
    double mass = 1.44316060e-25;               // [kg]
    double nuclear_spin = 1.5;                  // I
    double hyperfine_splitting = 6.834682610904290e9;  // [Hz]
    double g_J = 2.00233113;
    double g_I = -0.0009951414;                 // mu = -g_I mu_B m_I convention folded into sign
    double g_S = 2.00231930436256;

    // Lande g_F including the nuclear correction; F in {1,2}.
    double g_F(int F) const {
        const double I = nuclear_spin, J = 0.5;
        const double FF = F * (F + 1.0), JJ = J * (J + 1.0), II = I * (I + 1.0);
        return g_J * (FF + JJ - II) / (2.0 * FF) + g_I * (FF - JJ + II) / (2.0 * FF);
    }
};

inline constexpr AtomSpecies rb87{};

inline double freq_to_energy(double f_hz) { return si.h * f_hz; }
inline double energy_to_freq(double e_joule) { return e_joule / si.h; }

inline double hz_to_angular(double f_hz) { return two_pi * f_hz; }
inline double angular_to_hz(double w_rad_s) { return w_rad_s / two_pi; }

}  // namespace hybridsim::phys
