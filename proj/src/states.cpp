#include "resdil/states.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "resdil/errors.hpp"

namespace resdil {

namespace {

constexpr double kTraceTolerance = 1e-10;
constexpr double kPsdTolerance = 1e-10;

void check_probability(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

void check_angle(double alpha) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2 + 1e-15)) {
    throw ValidationError("alpha must lie in [0, pi/2], got " + std::to_string(alpha));
  }
}

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, Validation mode)
    : DensityMatrix(mat, std::vector<std::size_t>{mat.dim()}, mode) {}

DensityMatrix::DensityMatrix(ComplexMatrix mat, std::vector<std::size_t> dims, Validation mode)
    : mat_(std::move(mat)), dims_(std::move(dims)) {
  if (dims_.empty() || product(dims_) != mat_.dim()) throw BadDims("dims do not match matrix");
  if (!mat_.is_hermitian(tol::kHermitian)) throw NotHermitian("density matrix not Hermitian");
  if (mode == Validation::kLenient) {
    mat_ = 0.5 * (mat_ + mat_.adjoint());
  }
  const Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw ValidationError("density matrix trace is " + std::to_string(tr.real()));
  }
  if (mode == Validation::kLenient) return;
  const std::vector<double> ev = hermitian_eigenvalues(mat_);
  if (ev.front() < -kPsdTolerance) {
    throw ValidationError("density matrix has negative eigenvalue " + std::to_string(ev.front()));
  }
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> ket, std::vector<std::size_t> dims) {
  double norm2 = 0.0;
  for (const Complex& z : ket) norm2 += std::norm(z);
  if (norm2 <= 0.0) throw ValidationError("zero state vector");
  ComplexMatrix m = ComplexMatrix::outer(ket);
  m *= 1.0 / norm2;
  return DensityMatrix(std::move(m), std::move(dims));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::with_dims(std::vector<std::size_t> dims) const {
  if (product(dims) != dim()) throw BadDims("new dims do not match matrix");
  DensityMatrix out = *this;
  out.dims_ = std::move(dims);
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims), Validation::kLenient);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.dims(), keep);
  std::vector<std::size_t> dims;
  for (std::size_t k : keep) dims.push_back(rho.dims()[k]);
  return DensityMatrix(std::move(reduced), std::move(dims), Validation::kLenient);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

DensityMatrix unitary_conjugate(const ComplexMatrix& u, const DensityMatrix& rho) {
  return DensityMatrix(conjugate(u, rho.matrix()), rho.dims(), Validation::kLenient);
}

Hamiltonian::Hamiltonian(std::vector<double> energies) : energies_(std::move(energies)) {
  if (energies_.size() < 2) throw ValidationError("Hamiltonian needs at least two levels");
  for (std::size_t i = 0; i < energies_.size(); ++i) {
    if (!std::isfinite(energies_[i])) throw ValidationError("non-finite energy level");
    if (i > 0 && energies_[i] < energies_[i - 1]) {
      throw ValidationError("energy levels must be sorted ascending");
    }
  }
}

ComplexMatrix Hamiltonian::matrix() const { return ComplexMatrix::diagonal(energies_); }

DensityMatrix pure_two_qubit(double alpha) {
  check_angle(alpha);
  const std::vector<Complex> ket{std::cos(alpha), 0.0, 0.0, std::sin(alpha)};
  return DensityMatrix::pure(ket, {2, 2});
}

DensityMatrix singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> ket{0.0, r, -r, 0.0};
  return DensityMatrix::pure(ket, {2, 2});
}

DensityMatrix phi_plus() {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> ket{r, 0.0, 0.0, r};
  return DensityMatrix::pure(ket, {2, 2});
}

ComplexMatrix singlet_relabel() { return kron(pauli::I(), pauli::Y()); }

DensityMatrix basis_state(std::size_t index, std::size_t dim) {
  if (index >= dim) throw ValidationError("basis index out of range");
  ComplexMatrix m(dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix plus_state() {
  return DensityMatrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}});
}

CoherenceStates coherence_states(double alpha) {
  check_angle(alpha);
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const std::vector<Complex> ket{c, s};
  ComplexMatrix mixed = plus_state().matrix() * (s * s) +
                        ComplexMatrix::identity(2) * (0.5 * c * c);
  return {DensityMatrix::pure(ket, {2}), DensityMatrix(std::move(mixed))};
}

DensityMatrix gibbs(const Hamiltonian& h, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw ValidationError("temperature must be positive and finite");
  }
  // Shift by the ground energy so exp never overflows.
  const double e0 = h.energies().front();
  std::vector<double> w(h.levels());
  double z = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(-(h.energies()[i] - e0) / temperature);
    z += w[i];
  }
  for (double& x : w) x /= z;
  return DensityMatrix(ComplexMatrix::diagonal(w));
}

DensityMatrix diagonal_qubit(double q) {
  check_probability(q, "q");
  return DensityMatrix(ComplexMatrix::diagonal({1.0 - q, q}));
}

bool is_maximally_correlated(const DensityMatrix& rho, double tolerance) {
  if (rho.dims().size() != 2 || rho.dims()[0] != rho.dims()[1]) {
    throw BadDims("is_maximally_correlated needs dims {d, d}");
  }
  const std::size_t d = rho.dims()[0];
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      const bool row_in_block = r / d == r % d;
      const bool col_in_block = c / d == c % d;
      if (row_in_block && col_in_block) continue;
      if (std::abs(rho(r, c)) >= tolerance) return false;
    }
  }
  return true;
}

}  // namespace resdil
