#include "hybridsim/zeeman.hpp"

#include <cmath>

namespace hybridsim::zeeman {

double breit_rabi_energy(const HyperfineState& s, double B, const phys::AtomSpecies& atom) {
    if (B < 0.0) throw std::domain_error("breit_rabi_energy: B must be >= 0");
    const double dE = phys::si.h * atom.hyperfine_splitting;
    const double mu_B = phys::si.mu_B;
    const double x = (atom.g_J - atom.g_I) * mu_B * B / dE;
    const double m = s.m_F;

    if (s.F == 2 && std::abs(s.m_F) == 2) {
        // exact linear branch: sqrt(1 +- 2x + x^2) = |1 +- x|
        const double sgn = (s.m_F > 0) ? 1.0 : -1.0;
        return -dE / 8.0 + atom.g_I * mu_B * m * B + 0.5 * dE * (1.0 + sgn * x);
    }
    const double branch = (s.F == 2) ? 1.0 : -1.0;
    return -dE / 8.0 + atom.g_I * mu_B * m * B +
           branch * 0.5 * dE * std::sqrt(1.0 + m * x + x * x);
}

double transition_frequency(const HyperfineState& s1, const HyperfineState& s2,
                            double B, const phys::AtomSpecies& atom) {
    if (s1 == s2) throw std::invalid_argument("transition_frequency: states must differ");
    return std::abs(breit_rabi_energy(s1, B, atom) - breit_rabi_energy(s2, B, atom)) / phys::si.h;
}

double field_for_resonance(const HyperfineState& s1, const HyperfineState& s2,
                           double target_hz, double B_lo, double B_hi,
                           const phys::AtomSpecies& atom) {
    if (B_lo > B_hi) std::swap(B_lo, B_hi);
    auto f = [&](double B) { return transition_frequency(s1, s2, B, atom) - target_hz; };
    double flo = f(B_lo), fhi = f(B_hi);
    if (flo == 0.0) return B_lo;
    if (fhi == 0.0) return B_hi;
    if (flo * fhi > 0.0)
        throw std::domain_error("field_for_resonance: target not bracketed on [B_lo, B_hi]");
    // bisection to machine precision in B; transition is smooth and monotone on the bracket
    for (int it = 0; it < 200; ++it) {
        const double Bm = 0.5 * (B_lo + B_hi);
        const double fm = f(Bm);
        if (std::abs(fm) < 1.0e-3 && (B_hi - B_lo) < 1.0e-15 * (1.0 + Bm)) return Bm;
        if ((fm < 0.0) == (flo < 0.0)) {
            B_lo = Bm;
            flo = fm;
        } else {
            B_hi = Bm;
        }
        if (B_hi - B_lo < 1.0e-18 + 1.0e-16 * Bm) return 0.5 * (B_lo + B_hi);
    }
    return 0.5 * (B_lo + B_hi);
}

}  // namespace hybridsim::zeeman
