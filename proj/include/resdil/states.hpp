#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "resdil/linalg.hpp"

namespace resdil {

/// How strictly a DensityMatrix checks its invariants on construction.
enum class Validation {
  /// Hermitian, unit trace and min eigenvalue >= -1e-10; the matrix is kept as is.
  kStrict,
  /// Outputs of positivity-preserving maps (channels, partial traces,
  /// tensor products): Hermiticity and trace are checked, the matrix is
  /// symmetrized so round-off asymmetry does not accumulate, and the
  /// eigenvalue check is skipped.
  kLenient,
};

/// A quantum state together with its subsystem dimensions.
class DensityMatrix {
 public:
  /// Single system: dims = {mat.dim()}.
  explicit DensityMatrix(ComplexMatrix mat, Validation mode = Validation::kStrict);
  DensityMatrix(ComplexMatrix mat, std::vector<std::size_t> dims,
                Validation mode = Validation::kStrict);

  /// Normalized projector onto `ket` (normalizes internally).
  static DensityMatrix pure(std::span<const Complex> ket, std::vector<std::size_t> dims);
  static DensityMatrix maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const { return mat_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim() const { return mat_.dim(); }
  Complex operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

  /// Same matrix, different subsystem split (product must match).
  DensityMatrix with_dims(std::vector<std::size_t> dims) const;

 private:
  ComplexMatrix mat_;
  std::vector<std::size_t> dims_;
};

/// Tensor product of states; dims are concatenated.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the listed subsystems (indices into rho.dims()).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

/// U rho U†, dims preserved.
DensityMatrix unitary_conjugate(const ComplexMatrix& u, const DensityMatrix& rho);

/// Energy levels of a Hamiltonian that is diagonal in its eigenbasis (k = 1).
class Hamiltonian {
 public:
  /// Needs at least two finite levels, sorted ascending.
  explicit Hamiltonian(std::vector<double> energies);

  const std::vector<double>& energies() const { return energies_; }
  std::size_t levels() const { return energies_.size(); }
  ComplexMatrix matrix() const;

  /// Ground and first excited level at 0 and 1.
  static Hamiltonian unit_qubit() { return Hamiltonian({0.0, 1.0}); }

 private:
  std::vector<double> energies_;
};

/// cos(alpha)|00> + sin(alpha)|11>, alpha in [0, pi/2].
DensityMatrix pure_two_qubit(double alpha);

/// (|01> - |10>)/sqrt(2).
DensityMatrix singlet();

/// (|00> + |11>)/sqrt(2).
DensityMatrix phi_plus();

/// The fixed local relabel 1 ⊗ sigma_y. It maps phi_plus() to the singlet up
/// to a global phase and leaves every entropic quantity unchanged, so closed
/// forms written for |00>+|11>-type states can be compared against
/// singlet-based simulations.
ComplexMatrix singlet_relabel();

/// Computational-basis projector |index><index| of a d-level system.
DensityMatrix basis_state(std::size_t index, std::size_t dim);

/// |+><+|.
DensityMatrix plus_state();

struct CoherenceStates {
  /// cos(alpha)|0> + sin(alpha)|1>.
  DensityMatrix pure;
  /// sin^2(alpha)|+><+| + cos^2(alpha) 1/2.
  DensityMatrix mixed;
};
CoherenceStates coherence_states(double alpha);

/// e^{-H/T}/Z. Throws ValidationError unless temperature > 0.
DensityMatrix gibbs(const Hamiltonian& h, double temperature);

/// (1 - q)|E0><E0| + q|E1><E1|.
DensityMatrix diagonal_qubit(double q);

/// True iff every entry outside the span{|ii>} block has modulus < tol.
/// Requires dims = {d, d}.
bool is_maximally_correlated(const DensityMatrix& rho, double tolerance = 1e-10);

}  // namespace resdil
