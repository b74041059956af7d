#include "resint/spectra.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace resint::spectra {

MatsubaraGrid build_matsubara_grid(double temperature_k, int max_index,
                                   const PhysicalConstants& pc) {
    if (!(temperature_k > 0.0))
        throw std::domain_error("build_matsubara_grid: temperature must be positive");
    if (max_index < 1)
        throw std::domain_error("build_matsubara_grid: max_index must be >= 1");

    MatsubaraGrid grid;
    grid.temperature_k = temperature_k;
    grid.max_index = max_index;
    const double spacing = matsubara_spacing(temperature_k, pc);
    grid.frequencies_ev.resize(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n)
        grid.frequencies_ev[static_cast<std::size_t>(n)] = spacing * n;
    return grid;
}

double oscillator_epsilon(const OscillatorDielectric& model, double xi_ev) {
    if (xi_ev < 0.0)
        throw std::domain_error("oscillator_epsilon: xi must be >= 0");
    double eps = model.epsilon_infinity;
    for (const auto& term : model.terms) {
        const double ratio = xi_ev / term.center_ev;
        eps += term.strength / (1.0 + ratio * ratio);
    }
    return eps;
}

TabulatedLossSpectrum read_loss_spectrum(std::istream& in, const std::string& origin) {
    TabulatedLossSpectrum spectrum;
    spectrum.metadata = origin;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        double omega, loss;
        if (!(fields >> omega)) continue; // blank or comment-only line
        if (!(fields >> loss))
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": expected two columns `omega_eV eps_imag`");
        if (!(omega > 0.0))
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": omega must be > 0");
        if (loss < 0.0)
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": eps_imag must be >= 0");
        if (!spectrum.samples.empty() && omega <= spectrum.samples.back().first)
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": omega values must be strictly increasing");
        spectrum.samples.emplace_back(omega, loss);
    }
    return spectrum;
}

TabulatedLossSpectrum read_loss_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open loss spectrum file: " + path);
    return read_loss_spectrum(in, path);
}

double kramers_kronig_epsilon(const TabulatedLossSpectrum& spectrum, double xi_ev) {
    if (spectrum.samples.empty())
        throw std::domain_error("kramers_kronig_epsilon: empty spectrum");
    if (xi_ev < 0.0)
        throw std::domain_error("kramers_kronig_epsilon: xi must be >= 0");

    // Trapezoid over the tabulated grid only; no extrapolated tail.
    const double xi2 = xi_ev * xi_ev;
    auto integrand = [xi2](const std::pair<double, double>& s) {
        return s.first * s.second / (s.first * s.first + xi2);
    };
    double integral = 0.0;
    for (std::size_t i = 1; i < spectrum.samples.size(); ++i) {
        const double h = spectrum.samples[i].first - spectrum.samples[i - 1].first;
        integral += 0.5 * h * (integrand(spectrum.samples[i - 1]) + integrand(spectrum.samples[i]));
    }
    return 1.0 + (2.0 / std::numbers::pi) * integral;
}

double polarizability_imag(const PolarizabilityModel& model, double xi_ev) {
    if (xi_ev < 0.0)
        throw std::domain_error("polarizability_imag: xi must be >= 0");
    const double ratio = xi_ev / model.omega_resonance_ev;
    return model.alpha_static_a3 / (1.0 + ratio * ratio);
}

double polarizability_real(const PolarizabilityModel& model, double omega_ev) {
    if (omega_ev < 0.0)
        throw std::domain_error("polarizability_real: omega must be >= 0");
    if (omega_ev == model.omega_resonance_ev)
        throw std::domain_error("polarizability_real: pole at omega = omega_resonance");
    const double ratio = omega_ev / model.omega_resonance_ev;
    return model.alpha_static_a3 / (1.0 - ratio * ratio);
}

DielectricResponse DielectricResponse::vacuum() {
    DielectricResponse r;
    r.model_ = Vacuum{};
    return r;
}

DielectricResponse DielectricResponse::oscillators(OscillatorDielectric model) {
    DielectricResponse r;
    r.model_ = std::move(model);
    return r;
}

DielectricResponse DielectricResponse::tabulated(TabulatedLossSpectrum spectrum) {
    DielectricResponse r;
    r.model_ = std::move(spectrum);
    return r;
}

double DielectricResponse::epsilon_imag(double xi_ev) const {
    if (std::holds_alternative<Vacuum>(model_)) return 1.0;
    if (const auto* osc = std::get_if<OscillatorDielectric>(&model_))
        return oscillator_epsilon(*osc, xi_ev);
    return kramers_kronig_epsilon(std::get<TabulatedLossSpectrum>(model_), xi_ev);
}

std::string DielectricResponse::describe() const {
    if (std::holds_alternative<Vacuum>(model_)) return "vacuum";
    if (const auto* osc = std::get_if<OscillatorDielectric>(&model_)) {
        std::ostringstream out;
        out << "oscillators(eps_inf=" << osc->epsilon_infinity;
        for (const auto& t : osc->terms) out << ", " << t.strength << "@" << t.center_ev << "eV";
        out << ")";
        return out.str();
    }
    const auto& tab = std::get<TabulatedLossSpectrum>(model_);
    std::ostringstream out;
    out << "tabulated(" << tab.samples.size() << " samples";
    if (!tab.metadata.empty()) out << ", " << tab.metadata;
    out << ")";
    return out.str();
}

} // namespace resint::spectra
