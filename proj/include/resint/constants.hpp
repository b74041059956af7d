// constants.hpp — physical constants in the eV / Angstrom / Kelvin unit system
#pragma once

namespace resint {

// Energies in eV, lengths in Angstrom, temperatures in K, alpha in A^3.
// With these choices alpha*T is dimensionless and Matsubara summands are
// pure numbers; interaction energies come out directly in eV.
struct PhysicalConstants {
    double hbar_c = 1973.269804;        // eV*A
    double k_boltzmann = 8.617333262e-5; // eV/K
    double hbar_ev_s = 6.582119569e-16;  // eV*s (for rates in 1/s)
    double bohr_radius = 0.529177;       // A
};

inline constexpr PhysicalConstants kConstants{};

} // namespace resint
