#pragma once
#include "ccsg/cavity_geometry.hpp"

#include <complex>
#include <vector>

namespace ccsg {

// Drive schedules. Frequencies are angular (rad/s), times in seconds.
struct DriveParams {
    double g_final_sq_over_gc_sq = 5.0;
    double omega_z0 = 2.0 * 3.14159265358979323846 * 10.0e3; // 2*pi*10 kHz
    double ramp_start = 100e-6;
    double ramp_end = 700e-6;
    bool quench = false;

    void validate() const;
};

// Coefficients of the atom-only model at one instant.
struct ModelCoefficients {
    std::complex<double> alpha_plus;
    std::complex<double> alpha_minus;
    double g = 0.0;       // coupling (rad/s)
    double delta_c = 0.0; // rad/s, negative
    double kappa = 0.0;   // rad/s
    double omega_z = 0.0; // rad/s
};

// One diagonalized collapse channel C_k = prefactor * sum_i v_i (a_+ S_i^x + i a_- S_i^y).
// weights_x[i] = prefactor*v_i*alpha_plus, weights_y[i] = prefactor*v_i*i*alpha_minus.
struct CollapseSpec {
    int k = 0;
    double prefactor = 0.0; // g*sqrt(lambda_k*kappa)/(2*delta_c), real
    std::vector<std::complex<double>> weights_x;
    std::vector<std::complex<double>> weights_y;
};

// Piecewise ramp: 0 before ramp_start, cubic smoothstep on [start, end], 1 after.
// Quench mode returns 1 for all t >= 0.
double ramp_fraction(double t, const DriveParams& drive);

// g(t) = g_c*sqrt(ratio*f(t)), omega_z(t) = omega_z0*(1 - f(t)).
struct ScheduleValues {
    double g;
    double omega_z;
};
ScheduleValues schedule_values(double t, const DriveParams& drive, double g_c);

// First t with f(t) = gc^2/g_final^2, i.e. the semiclassical threshold crossing
// of the fixed critical coupling (bisection on the ramp interval).
double threshold_crossing_time(const DriveParams& drive);

// alpha_pm = delta_c/(-delta_c + omega_z - i kappa) +/- delta_c/(-delta_c - omega_z - i kappa)
std::pair<std::complex<double>, std::complex<double>>
alpha_coefficients(double omega_z, double delta_c, double kappa);

ModelCoefficients model_coefficients(double g, double omega_z, double delta_c, double kappa);

// g_c = sqrt(omega_z*(delta_c^2 + kappa^2)/(lambda_max*|delta_c|*M))
double critical_coupling(double lambda_max, double omega_z, double delta_c, double kappa, int M);

// Stability spectrum of the normal phase: N values 1 - M g^2 |delta_c| lambda_k /
// (omega_z (delta_c^2 + kappa^2)) plus N trivially-one values. Stable iff all > 0.
std::vector<double> stability_eigenvalues(double g, const CouplingMatrix& J, double omega_z,
                                          double delta_c, double kappa, int M);

struct RateEstimates {
    double decoherence_per_spin; // (kappa g^2/delta_c^2) * sum_k lambda_k
    double detection_rate;       // sum_k sqrt(lambda_k kappa omega_z g^2 beta^2/(|delta_c| g_c^2))
};
RateEstimates rate_estimates(double g, const CouplingMatrix& J, double delta_c, double kappa,
                             double omega_z, double g_c, double beta);

// (delta_c^2 + kappa^2)/(4 delta_c); carries the sign of delta_c.
double effective_temperature(double delta_c, double kappa);

std::vector<CollapseSpec> build_collapse_specs(const CouplingMatrix& J, const ModelCoefficients& mc);

} // namespace ccsg
