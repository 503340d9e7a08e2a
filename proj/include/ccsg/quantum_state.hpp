#pragma once
#include <complex>
#include <cstdint>
#include <vector>

namespace ccsg {

using cplx = std::complex<double>;

// complex multiply without the libm NaN-handling call in hot loops
inline cplx cmul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

// x_i eigenvalue (+1/-1) encoded by bit i of the basis index: 0 -> +1, 1 -> -1.
inline double xval(uint64_t b, int i) { return ((b >> i) & 1ull) ? -1.0 : 1.0; }

// Pure state of n spin-1/2 particles in the sigma^x product basis.
// Conventions (shared by all oracles):
//   sigma^x |b> = x_i(b) |b>
//   sigma^y |b> = -i x_i(b) |b ^ e_i>
//   sigma^z |b> = |b ^ e_i>
//   |down>_z = (|+>_x - |->_x)/sqrt(2)
struct PureState {
    std::vector<cplx> amp;
    int n_spins = 0;

    size_t dim() const { return amp.size(); }
    double norm() const;
    void normalize(); // throws std::runtime_error if norm underflows (dt too large)
};

PureState initial_state(int n, int max_spins = 15);

// (sum_i wx_i S_i^x + wy_i S_i^y) |psi>, unnormalized
std::vector<cplx> apply_spin_sum(const PureState& psi, const std::vector<cplx>& wx,
                                 const std::vector<cplx>& wy);

double sigma_x_expect(const PureState& psi, int i);
double sigma_y_expect(const PureState& psi, int i);
double sigma_z_expect(const PureState& psi, int i);

// single-spin von Neumann entropy (nats) from the 2x2 reduced density matrix
double entanglement_entropy(const PureState& psi, int i);

} // namespace ccsg
