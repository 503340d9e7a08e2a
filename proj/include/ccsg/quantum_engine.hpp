#pragma once
#include "ccsg/model.hpp"
#include "ccsg/quantum_state.hpp"
#include "ccsg/rng.hpp"

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace ccsg {

struct SimConfig {
    double dt = 0.0;                    // seconds; 0 selects min(10 ns, jump bound)
    double beta_sqrt_kappa = 0.1;       // beta = beta_sqrt_kappa * sqrt(kappa)
    double sample_interval = 10e-6;     // seconds
    double t_final = 4e-3;              // seconds
    double max_jump_prob_per_step = 0.1;
    int max_spins = 15;
    bool record_energy = false;
    // LO phase convention for the displaced operators (C_k +/- i beta_k)/sqrt(2):
    //   locked : beta_k = beta exp(i(arg(c_k alpha_+) - pi/2)), LO in phase with
    //            the channel field so the counters measure the occupied quadrature
    //   literal: beta_k = beta (displacement exactly +/- i beta)
    enum class LoPhase { locked, literal } lo_phase = LoPhase::locked;

    void validate() const;
};

struct JumpEvent {
    double t;    // seconds
    int channel; // 0..N-1
    int sign;    // +1 / -1
};

struct TrajectoryRecord {
    uint64_t seed = 0;
    int n_spins = 0;
    std::vector<double> sample_times_us;
    Eigen::MatrixXd sx, sy, sz;     // sample x spin
    Eigen::MatrixXd entropy;        // sample x spin, nats
    Eigen::MatrixXd s_rec;          // sample x spin, s_i(t) = sum_k v^k_i h_k(t)
    Eigen::MatrixXi h_counters;     // sample x channel
    std::vector<double> energy;     // <H(t)>, filled when record_energy
    std::vector<double> energy0;    // instantaneous ground energy, when record_energy
    std::vector<JumpEvent> jumps;
};

// Per-J lookup tables shared by every trajectory (read-only).
struct SpinTables {
    int n = 0;
    size_t dim = 0;
    std::vector<double> q;      // q[b] = x^T J x, full double sum
    Eigen::MatrixXd d;          // dim x n, d(b,k) = (v^k . x(b))/2
    Eigen::MatrixXd field;      // dim x n, field(b,j) = sum_{i != j} J_ij x_i(b)/2
    Eigen::VectorXd jdiag;      // J_ii
    double trJ = 0.0;
    Eigen::MatrixXd evec;       // copy of eigenvectors (column k)
    Eigen::VectorXd eval;       // copy of eigenvalues (descending)

    static SpinTables build(const CouplingMatrix& J);
};

// One first-order step of d|psi> = -i (H - (i/2) sum_k C_k^dag C_k)|psi> dt,
// then renormalize. H and C_k are the atom-only forms for the given coefficients.
void effective_step(PureState& psi, const SpinTables& tab, const ModelCoefficients& mc, double dt);

// Exact per-channel moments behind the jump rates.
struct ChannelMoments {
    std::vector<double> cc;  // <C_k^dag C_k>
    std::vector<cplx> c1;    // <C_k>
};
ChannelMoments channel_moments(const PureState& psi, const SpinTables& tab, const ModelCoefficients& mc);

// rate_{k,+/-} = (<C^dag C> + beta^2 +/- 2 beta Im(e^{-i phi_k} <C_k>))/2
std::vector<double> jump_rates(const ChannelMoments& m, const SpinTables& tab,
                               const ModelCoefficients& mc, double beta,
                               SimConfig::LoPhase lo); // size 2n: (k,+), (k,-) pairs

// Bernoulli-per-channel jump sampling; applies (C_k +/- i beta_k)/sqrt(2) on
// each triggered channel, updates counters, returns events. Consumes exactly
// 2n uniforms. Throws when the summed probability exceeds max_prob.
std::vector<JumpEvent> sample_jumps(PureState& psi, const SpinTables& tab,
                                    const ModelCoefficients& mc, double beta,
                                    SimConfig::LoPhase lo, double dt, double t, double max_prob,
                                    Rng& rng, std::vector<long>& h);

// <H> for the instantaneous Hamiltonian
double energy_expectation(const PureState& psi, const SpinTables& tab, const ModelCoefficients& mc);

// Lowest eigenvalue of the instantaneous H (Lanczos, 1e-8 relative tolerance).
double ground_energy(const SpinTables& tab, const ModelCoefficients& mc);

// s_i(t) from the homodyne counters
Eigen::VectorXd measurement_record(const std::vector<long>& h, const Eigen::MatrixXd& evec);

class QuantumEngine {
  public:
    QuantumEngine(const CouplingMatrix& J, const DriveParams& drive, const CavityParams& cavity,
                  SimConfig sim, int ensemble_size = 1);

    TrajectoryRecord run(uint64_t seed) const;

    double g_c() const { return g_c_; }
    double dt() const { return dt_; }
    double beta() const { return beta_; }
    const SpinTables& tables() const { return tab_; }
    ModelCoefficients coefficients_at(double t) const;

    // optional shared ground-energy grid (per sample index), set by ensemble runners
    void set_ground_energy_grid(std::vector<double> e0) { e0_grid_ = std::move(e0); }
    std::vector<double> sample_times() const;

  private:
    SpinTables tab_;
    DriveParams drive_;
    CavityParams cavity_;
    SimConfig sim_;
    double g_c_ = 0.0;
    double beta_ = 0.0;
    double dt_ = 0.0;
    long n_steps_ = 0;
    long sample_stride_ = 0;
    std::optional<std::vector<double>> e0_grid_;
};

} // namespace ccsg
