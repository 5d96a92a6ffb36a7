#pragma once

// Three-qubit phase-flip code protecting Bob's half of a shared pair, and the
// Pauli-channel comparison between error correction, dilution and doing
// nothing.
//
// Qubit order is (A, B1, B2, B3). The encoder prepares B2, B3 in |+> and
// applies CNOT(B2 -> B1), CNOT(B3 -> B1), which maps |±>_B1 to |±±±>.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "resdil/channels.hpp"
#include "resdil/states.hpp"

namespace resdil {

/// Encodes Bob's qubit of a two-qubit state. Output dims {2, 2, 2, 2}.
DensityMatrix encode(const DensityMatrix& pair);

/// Inverse of encode on the code space: undoes the CNOTs and traces out B2, B3.
DensityMatrix decode(const DensityMatrix& encoded);

/// encode(singlet()).
DensityMatrix phase_flip_encode();

/// Applies a qubit channel independently to B1, B2 and B3.
DensityMatrix apply_bob_noise(const QuantumChannel& noise, const DensityMatrix& encoded);

struct SyndromeOutcome {
  int x23;
  int x34;
  double probability;
  /// Normalized post-measurement state, before recovery. Empty when the
  /// outcome has probability below 1e-14.
  std::optional<DensityMatrix> post_state;
};

/// Projective measurement of X_B1 X_B2 and X_B2 X_B3. Outcomes in the order
/// (+1,+1), (+1,-1), (-1,+1), (-1,-1).
std::array<SyndromeOutcome, 4> syndrome_measure(const DensityMatrix& noisy);

/// Recovery unitary on the 4-qubit register: I, Z_B3, Z_B1, Z_B2 for the
/// outcomes (+1,+1), (+1,-1), (-1,+1), (-1,-1).
ComplexMatrix recovery_operator(int x23, int x34);

/// Measures, applies the matching recovery in each branch and sums the
/// branches (the measurement record is discarded).
DensityMatrix recover(const DensityMatrix& noisy);

/// encode -> noise on Bob's three qubits -> recover -> decode.
DensityMatrix phase_flip_round(const QuantumChannel& noise, const DensityMatrix& pair = singlet());

/// The 4-qubit state right after recovery for phase-flip noise p.
DensityMatrix intermediate_check_post_recovery(double p, const DensityMatrix& pair = singlet());

/// Probability that a 2t+1 repetition code sees more than t flips.
double p_fail(double p, unsigned t);

/// 1 - h((1-p)^3 + 3p(1-p)^2).
double ed_qec_phase_flip(double p);

/// Dilution into cos a|00> + sin a|11> under phase flip p:
/// 1 - h((1 + sqrt(1 - 2p(1-p)(1 - cos 4a)))/2) / h(cos^2 a).
double ed_dil_phase_flip(double p, double alpha = 0.25);

/// Full simulation of the code for Pauli noise on the singlet.
DensityMatrix pauli_qec_decoded(const PauliProbs& p);

/// (p1, p2, p3) -> (p_{k+1}, p_{k+2}, p_k) with k the index of the largest
/// of p1..p3 (smallest k on ties), indices mod 3.
PauliProbs cyclic_permutation(const PauliProbs& p);

/// U3(theta, phi, lam) = [[cos t/2, -e^{i lam} sin t/2], [e^{i phi} sin t/2, e^{i(phi+lam)} cos t/2]].
ComplexMatrix u3(double theta, double phi, double lam);

/// (S(rho^B) - S(rho)) / h(cos^2 alpha) for rho = 1⊗Λ_p[(1⊗U) psi(alpha) (1⊗U)^†].
double dilution_bound(const PauliProbs& p, const ComplexMatrix& u, double alpha = 0.25);

struct PauliComparison {
  double ed_qec_bound;
  double ed_dil_bound;
  double ed_nothing_bound;
  /// Euler angles (theta, phi, lam) of the best U found.
  std::array<double, 3> best_angles;
};

/// Compares the three strategies. The dilution bound maximizes over U3 on a
/// u_grid^3 grid (theta in [0, pi], phi and lam in [0, 2 pi)) followed by
/// Nelder-Mead refinement; grid ties go to the lexicographically smallest
/// angles. u_grid >= 8.
PauliComparison pauli_compare(const PauliProbs& p, std::size_t u_grid = 16, double alpha = 0.25,
                              std::size_t workers = 0);

}  // namespace resdil
