#include "ccsg/cavity_geometry.hpp"
#include "ccsg/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ccsg {

using cplx = std::complex<double>;

void CavityParams::validate() const {
    if (!(w0_um > 0.0)) throw std::invalid_argument("CavityParams: w0 must be > 0");
    if (!(alpha_c > 0.0)) throw std::invalid_argument("CavityParams: alpha_c must be > 0");
    if (!(kappa > 0.0)) throw std::invalid_argument("CavityParams: kappa must be > 0");
    if (!(delta_c < 0.0)) throw std::invalid_argument("CavityParams: delta_c must be negative");
    if (n_modes_oracle < 1) throw std::invalid_argument("CavityParams: n_modes_oracle must be >= 1");
}

SpinLayout sample_positions(PositionRegime regime, int n, uint64_t seed, int ensemble_size) {
    if (n < 1) throw std::invalid_argument("sample_positions: n must be >= 1");
    if (ensemble_size < 1) throw std::invalid_argument("sample_positions: ensemble_size must be >= 1");
    const double sigma = (regime == PositionRegime::spin_glass) ? 2.0 : 0.5;
    Rng rng(seed);
    SpinLayout layout;
    layout.ensemble_size = ensemble_size;
    layout.positions.reserve(n);
    for (int i = 0; i < n; ++i)
        layout.positions.push_back({sigma * rng.normal(), sigma * rng.normal()});
    return layout;
}

std::complex<double> green_function(const Vec2& r, const Vec2& rp, cplx alpha) {
    if (!(alpha.real() > 0.0))
        throw std::invalid_argument("green_function: Re(alpha) must be > 0");
    const double dm2 = (r[0] - rp[0]) * (r[0] - rp[0]) + (r[1] - rp[1]) * (r[1] - rp[1]);
    const double dp2 = (r[0] + rp[0]) * (r[0] + rp[0]) + (r[1] + rp[1]) * (r[1] + rp[1]);
    const cplx th = std::tanh(alpha / 2.0);
    const cplx pre = std::exp(alpha) / (2.0 * std::numbers::pi * std::sinh(alpha));
    // coth(a/2) = 1/tanh(a/2); written as multiplication by th to avoid a division
    const cplx expo = -dm2 / (2.0 * th) - dp2 * th / 2.0;
    return pre * std::exp(expo);
}

double confocal_interaction(const Vec2& r, const Vec2& rp, const CavityParams& params) {
    const cplx a(params.alpha_c, 0.0);
    const cplx ashift = a + cplx(0.0, std::numbers::pi / 2.0);
    const Vec2 rpm{-rp[0], -rp[1]};
    const cplx gp_even = green_function(r, rp, a) + green_function(r, rpm, a);
    const cplx gp_shift = green_function(r, rp, ashift) + green_function(r, rpm, ashift);
    const cplx d = gp_even + gp_shift;
    const double mag = std::abs(d);
    if (mag > 0.0 && std::abs(d.imag()) > 1e-8 * mag)
        throw std::runtime_error("confocal_interaction: imaginary residue exceeds 1e-8 of magnitude");
    return d.real();
}

CouplingMatrix build_coupling_matrix(const SpinLayout& layout, const CavityParams& params) {
    params.validate();
    const int n = layout.n();
    if (n < 1) throw std::invalid_argument("build_coupling_matrix: empty layout");

    CouplingMatrix cm;
    cm.entries.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const double v = confocal_interaction(layout.positions[i], layout.positions[j], params);
            cm.entries(i, j) = v;
            cm.entries(j, i) = v; // symmetric by construction
        }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cm.entries);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("build_coupling_matrix: eigendecomposition failed");

    // Eigen sorts ascending; store descending.
    cm.eigenvalues = es.eigenvalues().reverse();
    cm.eigenvectors = es.eigenvectors().rowwise().reverse();

    const double norm = std::max(cm.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);
    constexpr double eps_clamp = 1e-8;
    for (int k = 0; k < n; ++k) {
        if (cm.eigenvalues(k) < -eps_clamp * norm)
            throw std::runtime_error("build_coupling_matrix: eigenvalue below -1e-8*||J|| (broken positivity)");
        if (cm.eigenvalues(k) < 0.0) cm.eigenvalues(k) = 0.0;
    }
    return cm;
}

} // namespace ccsg
