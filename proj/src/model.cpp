#include "ccsg/model.hpp"

#include <cmath>
#include <stdexcept>

namespace ccsg {

using cplx = std::complex<double>;

void DriveParams::validate() const {
    if (!(ramp_end > ramp_start)) throw std::invalid_argument("DriveParams: ramp_end must exceed ramp_start");
    if (!(g_final_sq_over_gc_sq > 0.0)) throw std::invalid_argument("DriveParams: g_final^2/gc^2 must be > 0");
    if (omega_z0 < 0.0) throw std::invalid_argument("DriveParams: omega_z0 must be >= 0");
}

double ramp_fraction(double t, const DriveParams& drive) {
    if (drive.quench) return t >= 0.0 ? 1.0 : 0.0;
    if (t <= drive.ramp_start) return 0.0;
    if (t >= drive.ramp_end) return 1.0;
    const double u = (t - drive.ramp_start) / (drive.ramp_end - drive.ramp_start);
    return u * u * (3.0 - 2.0 * u);
}

ScheduleValues schedule_values(double t, const DriveParams& drive, double g_c) {
    if (!(g_c > 0.0)) throw std::invalid_argument("schedule_values: g_c must be > 0");
    const double f = ramp_fraction(t, drive);
    return {g_c * std::sqrt(drive.g_final_sq_over_gc_sq * f), drive.omega_z0 * (1.0 - f)};
}

double threshold_crossing_time(const DriveParams& drive) {
    const double target = 1.0 / drive.g_final_sq_over_gc_sq;
    if (drive.quench || target >= 1.0) return drive.quench ? 0.0 : drive.ramp_end;
    double lo = drive.ramp_start, hi = drive.ramp_end;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ramp_fraction(mid, drive) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::pair<cplx, cplx> alpha_coefficients(double omega_z, double delta_c, double kappa) {
    if (delta_c == 0.0) throw std::invalid_argument("alpha_coefficients: delta_c must be nonzero");
    const cplx a = delta_c / cplx(-delta_c + omega_z, -kappa);
    const cplx b = delta_c / cplx(-delta_c - omega_z, -kappa);
    return {a + b, a - b};
}

ModelCoefficients model_coefficients(double g, double omega_z, double delta_c, double kappa) {
    auto [ap, am] = alpha_coefficients(omega_z, delta_c, kappa);
    return {ap, am, g, delta_c, kappa, omega_z};
}

double critical_coupling(double lambda_max, double omega_z, double delta_c, double kappa, int M) {
    if (!(lambda_max > 0.0)) throw std::invalid_argument("critical_coupling: lambda_max must be > 0");
    if (!(omega_z > 0.0)) throw std::invalid_argument("critical_coupling: omega_z must be > 0");
    return std::sqrt(omega_z * (delta_c * delta_c + kappa * kappa) /
                     (lambda_max * std::abs(delta_c) * static_cast<double>(M)));
}

std::vector<double> stability_eigenvalues(double g, const CouplingMatrix& J, double omega_z,
                                          double delta_c, double kappa, int M) {
    if (!(omega_z > 0.0)) throw std::invalid_argument("stability_eigenvalues: omega_z must be > 0");
    const int n = J.n();
    std::vector<double> out;
    out.reserve(2 * n);
    const double c = static_cast<double>(M) * g * g * std::abs(delta_c) /
                     (omega_z * (delta_c * delta_c + kappa * kappa));
    for (int k = 0; k < n; ++k) out.push_back(1.0 - c * J.eigenvalues(k));
    for (int k = 0; k < n; ++k) out.push_back(1.0);
    return out;
}

RateEstimates rate_estimates(double g, const CouplingMatrix& J, double delta_c, double kappa,
                             double omega_z, double g_c, double beta) {
    RateEstimates r{0.0, 0.0};
    if (g == 0.0) return r;
    const double sum_lambda = J.eigenvalues.sum();
    r.decoherence_per_spin = kappa * g * g / (delta_c * delta_c) * sum_lambda;
    const double base = kappa * omega_z * g * g / (std::abs(delta_c) * g_c * g_c) * beta * beta;
    for (int k = 0; k < J.n(); ++k)
        r.detection_rate += std::sqrt(J.eigenvalues(k) * base);
    return r;
}

double effective_temperature(double delta_c, double kappa) {
    if (delta_c == 0.0) throw std::invalid_argument("effective_temperature: delta_c must be nonzero");
    return (delta_c * delta_c + kappa * kappa) / (4.0 * delta_c);
}

std::vector<CollapseSpec> build_collapse_specs(const CouplingMatrix& J, const ModelCoefficients& mc) {
    const int n = J.n();
    std::vector<CollapseSpec> specs(n);
    for (int k = 0; k < n; ++k) {
        CollapseSpec& s = specs[k];
        s.k = k;
        s.prefactor = mc.g * std::sqrt(J.eigenvalues(k) * mc.kappa) / (2.0 * mc.delta_c);
        s.weights_x.resize(n);
        s.weights_y.resize(n);
        for (int i = 0; i < n; ++i) {
            const double v = J.eigenvectors(i, k);
            s.weights_x[i] = s.prefactor * v * mc.alpha_plus;
            s.weights_y[i] = s.prefactor * v * cplx(0.0, 1.0) * mc.alpha_minus;
        }
    }
    return specs;
}

} // namespace ccsg
