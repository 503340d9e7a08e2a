#include "ccsg/quantum_state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace ccsg {

double PureState::norm() const {
    double s = 0.0;
    for (const cplx& a : amp) s += a.real() * a.real() + a.imag() * a.imag();
    return std::sqrt(s);
}

void PureState::normalize() {
    const double nrm = norm();
    if (!(nrm > 1e-300)) throw std::runtime_error("PureState: norm collapse (dt too large?)");
    const double inv = 1.0 / nrm;
    for (cplx& a : amp) a *= inv;
}

PureState initial_state(int n, int max_spins) {
    if (n < 1 || n > max_spins)
        throw std::invalid_argument("initial_state: n out of range");
    PureState psi;
    psi.n_spins = n;
    const size_t dim = size_t(1) << n;
    psi.amp.resize(dim);
    const double a = std::pow(2.0, -0.5 * n);
    for (size_t b = 0; b < dim; ++b)
        psi.amp[b] = (std::popcount(b) & 1u) ? -a : a;
    return psi;
}

std::vector<cplx> apply_spin_sum(const PureState& psi, const std::vector<cplx>& wx,
                                 const std::vector<cplx>& wy) {
    const int n = psi.n_spins;
    if (static_cast<int>(wx.size()) != n || static_cast<int>(wy.size()) != n)
        throw std::invalid_argument("apply_spin_sum: weight list length mismatch");
    const size_t dim = psi.dim();
    std::vector<cplx> out(dim, cplx(0.0, 0.0));

    // diagonal S^x part
    for (size_t b = 0; b < dim; ++b) {
        cplx w(0.0, 0.0);
        for (int i = 0; i < n; ++i) w += wx[i] * (0.5 * xval(b, i));
        out[b] = cmul(w, psi.amp[b]);
    }
    // bit-flip S^y part: S_i^y |b> = -(i/2) x_i(b) |b ^ e_i>
    for (int i = 0; i < n; ++i) {
        if (wy[i] == cplx(0.0, 0.0)) continue;
        const cplx w = wy[i] * cplx(0.0, -0.5);
        const uint64_t mask = uint64_t(1) << i;
        for (size_t b = 0; b < dim; ++b)
            out[b ^ mask] += cmul(w * xval(b, i), psi.amp[b]);
    }
    return out;
}

double sigma_x_expect(const PureState& psi, int i) {
    double s = 0.0;
    for (size_t b = 0; b < psi.dim(); ++b)
        s += xval(b, i) * std::norm(psi.amp[b]);
    return s;
}

double sigma_y_expect(const PureState& psi, int i) {
    // <psi| sigma^y |psi> = sum_b conj(psi_b) * (-i x_i(b^e_i)) psi_{b^e_i}
    const uint64_t mask = uint64_t(1) << i;
    cplx s(0.0, 0.0);
    for (size_t b = 0; b < psi.dim(); ++b)
        s += cmul(std::conj(psi.amp[b]), cplx(0.0, xval(b, i)) * psi.amp[b ^ mask]);
    return s.real();
}

double sigma_z_expect(const PureState& psi, int i) {
    const uint64_t mask = uint64_t(1) << i;
    cplx s(0.0, 0.0);
    for (size_t b = 0; b < psi.dim(); ++b)
        s += cmul(std::conj(psi.amp[b]), psi.amp[b ^ mask]);
    return s.real();
}

double entanglement_entropy(const PureState& psi, int i) {
    const uint64_t mask = uint64_t(1) << i;
    double p0 = 0.0;
    cplx coh(0.0, 0.0);
    for (size_t b = 0; b < psi.dim(); ++b) {
        if (b & mask) continue;
        p0 += std::norm(psi.amp[b]);
        coh += cmul(psi.amp[b], std::conj(psi.amp[b | mask]));
    }
    const double p1 = 1.0 - p0;
    const double disc = std::sqrt(std::max(0.0, (p0 - p1) * (p0 - p1) + 4.0 * std::norm(coh)));
    double lam[2] = {0.5 * (1.0 + disc), 0.5 * (1.0 - disc)};
    double s = 0.0;
    for (double l : lam) {
        l = std::min(1.0, std::max(0.0, l));
        if (l > 0.0) s -= l * std::log(l);
    }
    return s;
}

} // namespace ccsg
