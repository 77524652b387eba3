#pragma once

// 87Rb ground-state hyperfine/Zeeman structure via the Breit-Rabi closed
// form (J = 1/2, I = 3/2), transition frequencies, and field-for-resonance
// solving.  Energies are referenced to the zero-field manifold centroid.

#include <stdexcept>
#include <string>

#include "hybridsim/constants.hpp"

namespace hybridsim::zeeman {

struct HyperfineState {
    int F = 2;
    int m_F = 0;

    HyperfineState() = default;
    HyperfineState(int F_, int m_) : F(F_), m_F(m_) {
        if (F != 1 && F != 2) throw std::invalid_argument("HyperfineState: F must be 1 or 2");
        if (m_F < -F || m_F > F) throw std::invalid_argument("HyperfineState: |m_F| <= F required");
    }
    bool operator==(const HyperfineState&) const = default;
};

// Protocol aliases from the trapped-ion style gate construction.
inline const HyperfineState state_aux{2, 2};   // |aux>
inline const HyperfineState state_up{2, 1};    // |up arrow>
inline const HyperfineState state_down{1, -1}; // |down arrow>

inline std::string label(const HyperfineState& s) {
    if (s == state_aux) return "aux";
    if (s == state_up) return "up";
    if (s == state_down) return "down";
    return "F" + std::to_string(s.F) + "m" + std::to_string(s.m_F);
}

// Breit-Rabi energy [J] at field magnitude B [T], centroid-referenced.
// Stretched states |2,+-2> use the exact linear branch.
double breit_rabi_energy(const HyperfineState& s, double B_tesla,
                         const phys::AtomSpecies& atom = phys::rb87);

// |E(s1) - E(s2)| / h in ordinary Hz.
double transition_frequency(const HyperfineState& s1, const HyperfineState& s2,
                            double B_tesla, const phys::AtomSpecies& atom = phys::rb87);

// Bracketed root find for the field giving the target transition frequency.
// The transition must be monotone in B on the bracket.
double field_for_resonance(const HyperfineState& s1, const HyperfineState& s2,
                           double target_hz, double B_lo, double B_hi,
                           const phys::AtomSpecies& atom = phys::rb87);

}  // namespace hybridsim::zeeman
