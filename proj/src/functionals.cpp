#include "resdil/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "resdil/errors.hpp"

namespace resdil {

namespace {

double entropy_term(double x) { return x > kSpectralFloor ? -x * std::log2(x) : 0.0; }

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimMismatch("states have dimensions " + std::to_string(a.dim()) + " and " +
                      std::to_string(b.dim()));
  }
}

}  // namespace

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError("binary entropy argument must lie in [0, 1], got " + std::to_string(x));
  }
  return entropy_term(x) + entropy_term(1.0 - x);
}

double shannon_entropy(std::span<const double> p) {
  double s = 0.0;
  for (double x : p) {
    if (x < -kSpectralFloor) throw ValidationError("negative probability in Shannon entropy");
    s += entropy_term(x);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const std::vector<double> ev = hermitian_eigenvalues(rho.matrix());
  return shannon_entropy(ev);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const EigDecomposition sig = hermitian_eig(sigma.matrix());
  const std::size_t n = rho.dim();
  double cross = 0.0;  // Tr[rho log sigma]
  for (std::size_t k = 0; k < n; ++k) {
    // <v_k|rho|v_k>
    Complex w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += rho(i, j) * sig.eigenvectors(j, k);
      w += std::conj(sig.eigenvectors(i, k)) * row;
    }
    const double weight = w.real();
    const double lambda = sig.eigenvalues[k];
    if (lambda < kSpectralFloor) {
      if (weight > kSupportWeight) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log2(lambda);
  }
  const double value = -von_neumann_entropy(rho) - cross;
  // Round-off can leave values like -1e-16 for rho == sigma.
  return std::max(0.0, value);
}

DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix out(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) out(i, i) = rho(i, i).real();
  return DensityMatrix(std::move(out), rho.dims(), Validation::kLenient);
}

DensityMatrix dephase(const DensityMatrix& rho, const ComplexMatrix& basis) {
  if (basis.dim() != rho.dim()) throw DimMismatch("basis and state dimensions differ");
  if (!approx_equal(basis.adjoint() * basis, ComplexMatrix::identity(basis.dim()))) {
    throw ValidationError("dephasing basis is not orthonormal");
  }
  // Rotate into the basis, drop off-diagonals, rotate back.
  const ComplexMatrix in_basis = basis.adjoint() * rho.matrix() * basis;
  ComplexMatrix diag(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) diag(i, i) = in_basis(i, i).real();
  return DensityMatrix(basis * diag * basis.adjoint(), rho.dims(), Validation::kLenient);
}

double coherence_rel_entropy(const DensityMatrix& rho) {
  const std::vector<double> populations = rho.matrix().real_diagonal();
  return std::max(0.0, shannon_entropy(populations) - von_neumann_entropy(rho));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const auto clamp_sqrt = [](double x) { return std::sqrt(std::max(0.0, x)); };
  const ComplexMatrix root = hermitian_function(rho.matrix(), clamp_sqrt);
  ComplexMatrix inner = root * sigma.matrix() * root;
  inner = 0.5 * (inner + inner.adjoint());
  double f = 0.0;
  for (double e : hermitian_eigenvalues(inner)) f += clamp_sqrt(e);
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace resdil
