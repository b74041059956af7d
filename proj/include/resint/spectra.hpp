// spectra.hpp — frequency-dependent material response: Matsubara grids,
// dielectric functions on the imaginary axis, atomic polarizability models
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "resint/constants.hpp"

namespace resint::spectra {

// Ladder of imaginary (Matsubara) frequencies xi_n = 2*pi*k_B*T*n in eV.
// The n = 0 term of any thermal sum carries half weight.
struct MatsubaraGrid {
    double temperature_k = 0.0;
    std::vector<double> frequencies_ev; // xi_0 = 0, xi_n strictly increasing
    int max_index = 0;

    double spacing_ev() const { return frequencies_ev.size() > 1 ? frequencies_ev[1] : 0.0; }
};

MatsubaraGrid build_matsubara_grid(double temperature_k, int max_index,
                                   const PhysicalConstants& pc = kConstants);

inline double matsubara_spacing(double temperature_k, const PhysicalConstants& pc = kConstants) {
    return 6.283185307179586476925286766559 * pc.k_boltzmann * temperature_k;
}

// Sum of Lorentzian oscillators on the imaginary axis:
//   eps(i xi) = eps_inf + sum_i S_i / (1 + (xi/omega_i)^2)
// Real, >= eps_inf, monotonically decreasing in xi.
struct OscillatorDielectric {
    struct Term {
        double strength;  // dimensionless
        double center_ev; // > 0
    };
    std::vector<Term> terms;
    double epsilon_infinity = 1.0;
};

double oscillator_epsilon(const OscillatorDielectric& model, double xi_ev);

// Tabulated loss spectrum eps''(omega) on a strictly increasing omega grid.
struct TabulatedLossSpectrum {
    std::vector<std::pair<double, double>> samples; // (omega_eV, eps_imag)
    std::string metadata;
};

// Parse the two-column `omega_eV  eps_imag` text format ('#' comments allowed).
TabulatedLossSpectrum read_loss_spectrum(std::istream& in, const std::string& origin = "");
TabulatedLossSpectrum read_loss_spectrum_file(const std::string& path);

// eps(i xi) = 1 + (2/pi) Int_0^inf  omega*eps''(omega) / (omega^2 + xi^2) d omega,
// trapezoid on the tabulated grid, integrand zero outside the tabulated range.
double kramers_kronig_epsilon(const TabulatedLossSpectrum& spectrum, double xi_ev);

// Single-oscillator atomic polarizability.
//   alpha(i xi)  = alpha(0) / (1 + (xi/omega_j)^2)
//   alpha(omega) = alpha(0) / (1 - (omega/omega_j)^2)   (undamped)
struct PolarizabilityModel {
    double alpha_static_a3;    // alpha(0), A^3
    double omega_resonance_ev; // omega_j, eV

    // p^2 = alpha(0) * omega_j / 2 in eV*A^3 (hbar == 1 in energy units)
    double transition_dipole_squared() const { return 0.5 * alpha_static_a3 * omega_resonance_ev; }
};

double polarizability_imag(const PolarizabilityModel& model, double xi_ev);
double polarizability_real(const PolarizabilityModel& model, double omega_ev);

// Dielectric response provider: vacuum, analytic oscillator model, or
// KK-transformed tabulated loss spectrum, all evaluated at imaginary frequency.
class DielectricResponse {
  public:
    static DielectricResponse vacuum();
    static DielectricResponse oscillators(OscillatorDielectric model);
    static DielectricResponse tabulated(TabulatedLossSpectrum spectrum);

    double epsilon_imag(double xi_ev) const;
    bool is_vacuum() const { return std::holds_alternative<Vacuum>(model_); }
    std::string describe() const;

  private:
    struct Vacuum {};
    std::variant<Vacuum, OscillatorDielectric, TabulatedLossSpectrum> model_;
};

} // namespace resint::spectra
