#pragma once
#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace ccsg {

using Vec2 = std::array<double, 2>; // midplane position in units of w0

// Confocal-cavity parameters. All positions in this module are dimensionless
// (x/w0), so w0 appears only as metadata; frequencies are angular (rad/s).
struct CavityParams {
    double w0_um = 35.0;       // fundamental-mode waist, micrometers
    double alpha_c = 0.02;     // Green's-function smoothing parameter
    double kappa = 0.0;        // cavity loss rate (rad/s)
    double delta_c = 0.0;      // pump-cavity detuning (rad/s), negative
    int n_modes_oracle = 60;   // mode-sum truncation, oracle use only

    void validate() const; // throws std::invalid_argument on violation
};

enum class PositionRegime { spin_glass, ferromagnetic };

struct SpinLayout {
    std::vector<Vec2> positions; // units of w0
    int ensemble_size = 1;       // M, atoms per node

    int n() const { return static_cast<int>(positions.size()); }
};

// Symmetric coupling matrix with its spectral decomposition.
// eigenvalues sorted descending, eigenvectors() column k pairs with
// eigenvalue k. Eigenvalues in [-1e-8*||J||, 0) are clamped to zero.
struct CouplingMatrix {
    Eigen::MatrixXd entries;
    Eigen::VectorXd eigenvalues;  // descending, clamped nonnegative
    Eigen::MatrixXd eigenvectors; // orthonormal columns

    int n() const { return static_cast<int>(entries.rows()); }
    double lambda_max() const { return eigenvalues(0); }
};

// n iid 2D Gaussian positions, per-axis std 2*w0 (spin_glass) or 0.5*w0
// (ferromagnetic), centered on the cavity axis.
SpinLayout sample_positions(PositionRegime regime, int n, uint64_t seed, int ensemble_size = 1);

// Closed-form harmonic-oscillator Green's function (positions in units of w0):
//   G(r,r',a) = e^a/(2 pi sinh a) * exp[-(r-r')^2/(2 tanh(a/2)) - (r+r')^2/(2 coth(a/2))]
// Requires Re(a) > 0.
std::complex<double> green_function(const Vec2& r, const Vec2& rp, std::complex<double> alpha);

// Even-parity confocal interaction
//   D(r,r') = Gp(r,r',a) + Gp(r,r',a+i pi/2),  Gp(r,r',a) = G(r,r',a) + G(r,-r',a),
// real up to numerical residue (rejected above 1e-8 relative).
// Equals 4 * sum over l+m = 0 mod 4 modes of Xi_lm(r) Xi_lm(r') e^{-(l+m)a},
// hence positive semidefinite as a kernel; the alpha->0 nonlocal limit is
// (1/pi) cos(2 r.r').
double confocal_interaction(const Vec2& r, const Vec2& rp, const CavityParams& params);

// J_ij = D(r_i, r_j) for all pairs including i = j, plus spectral data.
CouplingMatrix build_coupling_matrix(const SpinLayout& layout, const CavityParams& params);

} // namespace ccsg
