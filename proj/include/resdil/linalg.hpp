#pragma once

// Dense complex linear algebra for small square matrices (a few qubits).
//
// Everything here is dependency free. Matrices are stored row-major and are
// always square; the largest supported dimension is kMaxDim.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace resdil {

using Complex = std::complex<double>;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kReconstruction = 1e-10;
inline constexpr double kEquality = 1e-10;
/// Jacobi sweeps stop once the off-diagonal Frobenius mass drops below this.
inline constexpr double kJacobiOffDiagonal = 1e-14;
}  // namespace tol

inline constexpr std::size_t kMaxDim = 256;

class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);

  /// Row-major nested initializer, e.g. {{1, 0}, {0, -1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  /// |v><v|, not normalized.
  static ComplexMatrix outer(std::span<const Complex> v);
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// Largest entrywise modulus.
  double max_abs() const;
  double frobenius_norm() const;

  bool is_hermitian(double tolerance = tol::kHermitian) const;
  bool is_diagonal(double tolerance = tol::kEquality) const;
  std::vector<double> real_diagonal() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
/// Matrix product. Zero entries of the left operand are skipped, which makes
/// products with the diagonal or permutation-like Kraus operators cheap.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix-vector product.
std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v);

/// a·b·a†.
ComplexMatrix conjugate(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise equality within an absolute tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tolerance = tol::kEquality);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; block (i, j) of the result is a(i, j)·b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors);

struct EigDecomposition {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column k is the eigenvector belonging to eigenvalues[k].
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi eigensolver for Hermitian input.
/// Throws NotHermitian if max |h - h†| exceeds tol::kHermitian.
EigDecomposition hermitian_eig(const ComplexMatrix& h);

/// Eigenvalues only (same algorithm, eigenvectors discarded).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// V·diag(f(λ))·V† for Hermitian input.
template <class F>
ComplexMatrix hermitian_function(const ComplexMatrix& h, F&& f) {
  const EigDecomposition eig = hermitian_eig(h);
  const std::size_t n = h.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = eig.eigenvectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += vi * std::conj(eig.eigenvectors(j, k));
      }
    }
  }
  return out;
}

/// Traces out every subsystem not listed in `keep`. `dims` gives subsystem
/// dimensions, most significant first; `keep` must be nonempty, strictly
/// increasing and in range. Throws BadDims otherwise.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Sum of singular values, computed from the spectrum of m†m.
double trace_norm(const ComplexMatrix& m);

/// Single-qubit Paulis and friends.
namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
/// Hadamard.
ComplexMatrix H();
/// sigma_0..sigma_3 = I, X, Y, Z.
ComplexMatrix sigma(int index);
}  // namespace pauli

/// Operator acting as `op` on qubit `target` of an n-qubit register
/// (qubit 0 is the most significant tensor factor) and as identity elsewhere.
ComplexMatrix embed_qubit_operator(const ComplexMatrix& op, std::size_t target,
                                   std::size_t n_qubits);

}  // namespace resdil
