#include "resint/greens.hpp"

#include <cmath>
#include <stdexcept>

namespace resint::greens {

namespace {

double norm3(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

} // namespace

double GeometryConfig::direct_distance() const { return norm3(direct_displacement()); }
double GeometryConfig::image_distance() const { return norm3(image_displacement()); }

void GeometryConfig::validate() const {
    if (!(z_a > 0.0) || !(z_b > 0.0))
        throw std::domain_error("GeometryConfig: atom heights must be positive");
    if (x < 0.0)
        throw std::domain_error("GeometryConfig: lateral offset must be >= 0");
    if (!(direct_distance() > 0.0))
        throw std::domain_error("GeometryConfig: atoms coincide (zero separation)");
}

TensorComponents& TensorComponents::operator+=(const TensorComponents& o) {
    t_xx += o.t_xx;
    t_yy += o.t_yy;
    t_zz += o.t_zz;
    t_xz += o.t_xz;
    t_zx += o.t_zx;
    return *this;
}

TensorComponents operator+(TensorComponents a, const TensorComponents& b) { return a += b; }

TensorComponents free_tensor_imag(const std::array<double, 3>& d, double xi_ev,
                                  const PhysicalConstants& pc) {
    const double rho = norm3(d);
    if (!(rho > 0.0))
        throw std::domain_error("free_tensor_imag: zero displacement");
    if (xi_ev < 0.0)
        throw std::domain_error("free_tensor_imag: xi must be >= 0");

    const double nx = d[0] / rho, ny = d[1] / rho, nz = d[2] / rho;
    const double u = xi_ev * rho / pc.hbar_c;
    const double pref = std::exp(-u) / (rho * rho * rho);
    const double a = (1.0 + u) * pref;  // (delta - 3 n n) weight
    const double b = u * u * pref;      // (delta - n n) weight

    TensorComponents t;
    t.t_xx = (1.0 - 3.0 * nx * nx) * a + (1.0 - nx * nx) * b;
    t.t_yy = (1.0 - 3.0 * ny * ny) * a + (1.0 - ny * ny) * b;
    t.t_zz = (1.0 - 3.0 * nz * nz) * a + (1.0 - nz * nz) * b;
    t.t_xz = -nx * nz * (3.0 * a + b);
    t.t_zx = t.t_xz;
    return t;
}

TensorComponents free_tensor_real(const std::array<double, 3>& d, double omega_ev,
                                  const PhysicalConstants& pc) {
    const double rho = norm3(d);
    if (!(rho > 0.0))
        throw std::domain_error("free_tensor_real: zero displacement");
    if (omega_ev < 0.0)
        throw std::domain_error("free_tensor_real: omega must be >= 0");

    const double nx = d[0] / rho, ny = d[1] / rho, nz = d[2] / rho;
    const double v = omega_ev * rho / pc.hbar_c;
    const double inv_rho3 = 1.0 / (rho * rho * rho);
    const double a = (std::cos(v) + v * std::sin(v)) * inv_rho3;
    const double b = -v * v * std::cos(v) * inv_rho3;

    TensorComponents t;
    t.t_xx = (1.0 - 3.0 * nx * nx) * a + (1.0 - nx * nx) * b;
    t.t_yy = (1.0 - 3.0 * ny * ny) * a + (1.0 - ny * ny) * b;
    t.t_zz = (1.0 - 3.0 * nz * nz) * a + (1.0 - nz * nz) * b;
    t.t_xz = -nx * nz * (3.0 * a + b);
    t.t_zx = t.t_xz;
    return t;
}

double surface_reflection(double epsilon) { return (epsilon - 1.0) / (epsilon + 1.0); }

TensorComponents image_tensor_imag(const GeometryConfig& geometry, double epsilon_at_xi,
                                   double xi_ev, const PhysicalConstants& pc) {
    geometry.validate();
    if (epsilon_at_xi < 1.0)
        throw std::domain_error("image_tensor_imag: epsilon must be >= 1");

    const double r = surface_reflection(epsilon_at_xi);
    const TensorComponents t0 = free_tensor_imag(geometry.image_displacement(), xi_ev, pc);

    // Left-multiply by r*diag(-1,-1,+1): rows x,y flipped, row z preserved.
    TensorComponents t;
    t.t_xx = -r * t0.t_xx;
    t.t_yy = -r * t0.t_yy;
    t.t_zz = r * t0.t_zz;
    t.t_xz = -r * t0.t_xz;
    t.t_zx = r * t0.t_zx;
    return t;
}

TensorComponents total_tensor_imag(const GeometryConfig& geometry,
                                   const spectra::DielectricResponse& dielectric, double xi_ev,
                                   const PhysicalConstants& pc) {
    geometry.validate();
    TensorComponents total = free_tensor_imag(geometry.direct_displacement(), xi_ev, pc);
    if (!dielectric.is_vacuum())
        total += image_tensor_imag(geometry, dielectric.epsilon_imag(xi_ev), xi_ev, pc);
    return total;
}

} // namespace resint::greens
