#pragma once

// Entropic functionals. All logarithms are base 2.

#include <span>

#include "resdil/linalg.hpp"
#include "resdil/states.hpp"

namespace resdil {

/// Eigenvalues below this count as exact zeros (0·log 0 = 0).
inline constexpr double kSpectralFloor = 1e-12;
/// rho-weight on the kernel of sigma above this makes S(rho||sigma) infinite.
inline constexpr double kSupportWeight = 1e-10;

/// h(x) = -x log x - (1 - x) log(1 - x). Throws ValidationError outside [0, 1].
double binary_entropy(double x);

/// -sum p_i log p_i. Entries below kSpectralFloor are skipped; negative
/// entries below -kSpectralFloor are rejected.
double shannon_entropy(std::span<const double> p);

/// Shannon entropy of the spectrum.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho||sigma) = Tr[rho log rho] - Tr[rho log sigma]; +infinity when the
/// support of rho is not contained in the support of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Delta[rho] in the computational basis (which is also the energy basis of
/// every Hamiltonian handled here).
DensityMatrix dephase(const DensityMatrix& rho);

/// Delta[rho] = sum_i <b_i|rho|b_i> |b_i><b_i| for the orthonormal basis given
/// by the columns of `basis`.
DensityMatrix dephase(const DensityMatrix& rho, const ComplexMatrix& basis);

/// C(rho) = S(Delta[rho]) - S(rho).
double coherence_rel_entropy(const DensityMatrix& rho);

/// Tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace resdil
