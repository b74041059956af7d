// greens.hpp — dipole-dipole susceptibility tensor: retarded free-space forms
// on the imaginary and real frequency axes plus the planar-surface image correction
#pragma once

#include <array>

#include "resint/constants.hpp"
#include "resint/spectra.hpp"

namespace resint::greens {

// Two atoms in the xz-plane above a dielectric half-space filling z < 0.
struct GeometryConfig {
    double z_a; // height of atom a, A (> 0)
    double z_b; // height of atom b, A (> 0)
    double x;   // lateral offset, A (>= 0)

    std::array<double, 3> direct_displacement() const { return {x, 0.0, z_b - z_a}; }
    // displacement from the image of atom a (at -z_a) to atom b
    std::array<double, 3> image_displacement() const { return {x, 0.0, z_a + z_b}; }
    double direct_distance() const;
    double image_distance() const;
    void validate() const; // throws std::domain_error
};

// The five tensor elements that survive for sources in the xz-plane, in A^-3.
// Sign convention: coupling enters energies as U = p_i T_ij p_j, so the
// nonretarded longitudinal element along the joining axis is -2/rho^3.
struct TensorComponents {
    double t_xx = 0.0;
    double t_yy = 0.0;
    double t_zz = 0.0;
    double t_xz = 0.0;
    double t_zx = 0.0;

    TensorComponents& operator+=(const TensorComponents& o);
};

TensorComponents operator+(TensorComponents a, const TensorComponents& b);

// Free-space retarded tensor at imaginary frequency.  With rho = |d|,
// n = d/rho and u = xi*rho/(hbar c):
//   T0_ij = e^{-u}/rho^3 * [ (delta_ij - 3 n_i n_j)(1+u) + (delta_ij - n_i n_j) u^2 ]
TensorComponents free_tensor_imag(const std::array<double, 3>& displacement_a, double xi_ev,
                                  const PhysicalConstants& pc = kConstants);

// Real part of the retarded tensor at real frequency, v = omega*rho/(hbar c):
//   Re T_ij = [ (delta_ij - 3 n_i n_j)(cos v + v sin v)
//               - (delta_ij - n_i n_j) v^2 cos v ] / rho^3
TensorComponents free_tensor_real(const std::array<double, 3>& displacement_a, double omega_ev,
                                  const PhysicalConstants& pc = kConstants);

// Static-screened reflection coefficient r = (eps - 1)/(eps + 1).
double surface_reflection(double epsilon);

// Retarded-image surface correction: T_surf = r(i xi) * diag(-1,-1,+1) * T0(R | i xi)
// with R the image displacement (in-plane image components reversed, normal
// component preserved).
TensorComponents image_tensor_imag(const GeometryConfig& geometry, double epsilon_at_xi,
                                   double xi_ev, const PhysicalConstants& pc = kConstants);

// Direct free-space tensor plus the image correction.
TensorComponents total_tensor_imag(const GeometryConfig& geometry,
                                   const spectra::DielectricResponse& dielectric, double xi_ev,
                                   const PhysicalConstants& pc = kConstants);

} // namespace resint::greens
