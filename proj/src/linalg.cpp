#include "resdil/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "resdil/errors.hpp"

namespace resdil {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw ValidationError("matrix dimension " + std::to_string(dim) + " outside [1, " +
                          std::to_string(kMaxDim) + "]");
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimMismatch("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) { check_dim(dim); }

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), data_() {
  check_dim(dim_);
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw ValidationError("matrix initializer is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) { return outer(v, v); }

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  if (ket.size() != bra.size()) throw DimMismatch("outer product of unequal vectors");
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i) {
    for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tolerance) return false;
    }
  }
  return true;
}

bool ComplexMatrix::is_diagonal(double tolerance) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i != j && std::abs((*this)(i, j)) > tolerance) return false;
    }
  }
  return true;
}

std::vector<double> ComplexMatrix::real_diagonal() const {
  std::vector<double> d(dim_);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = (*this)(i, i).real();
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scalar) { return a *= scalar; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) throw DimMismatch("matrix-vector dimension mismatch");
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a * b) * a.adjoint();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  }
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tolerance) {
  return a.dim() == b.dim() && max_abs_diff(a, b) <= tolerance;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors) {
  if (factors.size() == 0) throw ValidationError("kron of an empty factor list");
  auto it = factors.begin();
  ComplexMatrix out = *it;
  for (++it; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

ComplexMatrix EigDecomposition::reconstruct() const {
  const std::size_t n = eigenvectors.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = eigenvectors(i, k) * eigenvalues[k];
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eigenvectors(j, k));
    }
  }
  return out;
}

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation is
// G = P·R where P = diag(1, e^{-i phi}) makes a(p, q) real and R is the
// classical real Jacobi rotation. a <- G† a G, v <- v G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // Columns of G: g_pp = c, g_qp = -s e^{-i phi}, g_pq = s, g_qq = c e^{-i phi}.
  const Complex gpp = c;
  const Complex gqp = -s * std::conj(phase);
  const Complex gpq = s;
  const Complex gqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  // a <- a G (columns p, q).
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  // a <- G† a (rows p, q).
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

EigDecomposition hermitian_eig(const ComplexMatrix& h) {
  const std::size_t n = h.dim();
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      asym = std::max(asym, std::abs(h(i, j) - std::conj(h(j, i))));
    }
  }
  if (asym > tol::kHermitian) {
    throw NotHermitian("matrix is not Hermitian (max |h - h^dagger| = " + std::to_string(asym) +
                       ")");
  }

  // Work on the exactly Hermitian part.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = tol::kJacobiOffDiagonal * std::max(1.0, a.frobenius_norm());
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_mass(a) >= threshold) {
    if (++sweep > kMaxSweeps) throw NumericalError("Jacobi eigensolver did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eig(h).eigenvalues;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (dims.empty()) throw BadDims("empty subsystem dimension list");
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw BadDims("zero subsystem dimension");
    total *= d;
  }
  if (total != m.dim()) {
    throw BadDims("subsystem dimensions multiply to " + std::to_string(total) +
                  " but matrix has dimension " + std::to_string(m.dim()));
  }
  if (keep.empty()) throw BadDims("partial trace must keep at least one subsystem");
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= dims.size() || (k > 0 && keep[k] <= keep[k - 1])) {
      throw BadDims("kept subsystem indices must be increasing and in range");
    }
  }

  const std::size_t n_sub = dims.size();
  std::vector<bool> kept(n_sub, false);
  for (std::size_t k : keep) kept[k] = true;

  std::size_t keep_dim = 1;
  for (std::size_t k : keep) keep_dim *= dims[k];
  ComplexMatrix out(keep_dim);

  // For each full index, split into (kept index, traced index).
  std::vector<std::size_t> kept_index(total);
  std::vector<std::size_t> traced_index(total);
  std::vector<std::size_t> digits(n_sub);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t s = n_sub; s-- > 0;) {
      digits[s] = rest % dims[s];
      rest /= dims[s];
    }
    std::size_t ki = 0;
    std::size_t ti = 0;
    for (std::size_t s = 0; s < n_sub; ++s) {
      if (kept[s]) {
        ki = ki * dims[s] + digits[s];
      } else {
        ti = ti * dims[s] + digits[s];
      }
    }
    kept_index[idx] = ki;
    traced_index[idx] = ti;
  }
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += m(i, j);
    }
  }
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  if (m.is_hermitian(0.0)) {
    double s = 0.0;
    for (double e : hermitian_eigenvalues(m)) s += std::abs(e);
    return s;
  }
  const std::vector<double> ev = hermitian_eigenvalues(m.adjoint() * m);
  double s = 0.0;
  for (double e : ev) s += std::sqrt(std::max(0.0, e));
  return s;
}

namespace pauli {
ComplexMatrix I() { return ComplexMatrix::identity(2); }
ComplexMatrix X() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix Y() { return ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix Z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix H() {
  const double r = 1.0 / std::sqrt(2.0);
  return ComplexMatrix{{r, r}, {r, -r}};
}
ComplexMatrix sigma(int index) {
  switch (index) {
    case 0: return I();
    case 1: return X();
    case 2: return Y();
    case 3: return Z();
    default: throw ValidationError("Pauli index must be 0..3");
  }
}
}  // namespace pauli

ComplexMatrix embed_qubit_operator(const ComplexMatrix& op, std::size_t target,
                                   std::size_t n_qubits) {
  if (op.dim() != 2) throw DimMismatch("embed_qubit_operator expects a 2x2 operator");
  if (target >= n_qubits) throw ValidationError("target qubit out of range");
  const std::size_t left = std::size_t{1} << target;
  const std::size_t right = std::size_t{1} << (n_qubits - target - 1);
  return kron(kron(ComplexMatrix::identity(left), op), ComplexMatrix::identity(right));
}

}  // namespace resdil
