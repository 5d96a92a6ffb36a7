#include "resdil/rates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "resdil/errors.hpp"
#include "resdil/functionals.hpp"

namespace resdil {

namespace {

void check_probability(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

bool is_pure(const DensityMatrix& rho) {
  const ComplexMatrix sq = rho.matrix() * rho.matrix();
  return std::abs(sq.trace().real() - 1.0) < 1e-10;
}

}  // namespace

double rate_ratio(double numerator, double denominator, const char* what) {
  if (!(denominator >= kDegenerateDenominator) || std::isinf(denominator)) {
    throw Degenerate(std::string(what) + ": rate denominator is " + std::to_string(denominator));
  }
  return numerator / denominator;
}

double hashing_rate(const DensityMatrix& rho, HashingSide side) {
  if (rho.dims().size() != 2) throw BadDims("hashing_rate needs a bipartite state");
  const double joint = von_neumann_entropy(rho);
  const double a = von_neumann_entropy(partial_trace(rho, {0})) - joint;
  if (side == HashingSide::kA) return a;
  const double b = von_neumann_entropy(partial_trace(rho, {1})) - joint;
  if (side == HashingSide::kB) return b;
  return std::max(a, b);
}

double ed_phase_damped_pure(double alpha, double lambda) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) {
    throw ValidationError("alpha must lie in [0, pi/2]");
  }
  check_probability(lambda, "lambda");
  const double c = std::cos(alpha);
  const double root = std::sqrt(2.0 * lambda * std::cos(4.0 * alpha) - 2.0 * lambda + 4.0);
  const double x = std::min(1.0, 0.5 + root / 4.0);
  return binary_entropy(c * c) - binary_entropy(x);
}

double ed_phase_damped_singlet(double lambda) {
  check_probability(lambda, "lambda");
  return 1.0 - binary_entropy((1.0 + std::sqrt(1.0 - lambda)) / 2.0);
}

DensityMatrix correlated_noise_state(std::size_t n, std::optional<double> alpha,
                                     std::span<const double> probs) {
  if (n == 0 || n > 4) throw ValidationError("correlated noise states support n = 1..4");
  // Pair amplitudes indexed by 2a + b.
  std::array<double, 4> pair{};
  if (alpha) {
    if (!(*alpha >= 0.0 && *alpha <= std::numbers::pi / 2)) {
      throw ValidationError("alpha must lie in [0, pi/2]");
    }
    pair = {std::cos(*alpha), 0.0, 0.0, std::sin(*alpha)};
  } else {
    const double r = 1.0 / std::sqrt(2.0);
    pair = {0.0, r, -r, 0.0};
  }
  const std::size_t side = std::size_t{1} << n;
  std::vector<Complex> ket(side * side);
  for (std::size_t a = 0; a < side; ++a) {
    for (std::size_t b = 0; b < side; ++b) {
      double amp = 1.0;
      for (std::size_t q = 0; q < n; ++q) {
        const std::size_t shift = n - 1 - q;  // qubit 1 is most significant
        amp *= pair[2 * ((a >> shift) & 1U) + ((b >> shift) & 1U)];
      }
      ket[a * side + b] = amp;
    }
  }
  const DensityMatrix psi = DensityMatrix::pure(ket, {side, side});
  const QuantumChannel noise = extend_id_tensor(correlated_z_noise(n, probs), side, 1);
  return apply(noise, psi);
}

double ed_correlated_noise(std::size_t n, std::optional<double> alpha,
                           std::span<const double> probs) {
  if (!alpha) {
    // Validates probs as a side effect.
    (void)correlated_z_noise(n, probs);
    return static_cast<double>(n) - shannon_entropy(probs);
  }
  const DensityMatrix rho = correlated_noise_state(n, alpha, probs);
  const double c = std::cos(*alpha);
  return static_cast<double>(n) * binary_entropy(c * c) - von_neumann_entropy(rho);
}

double coherence_rate(const DensityMatrix& mu, const Noise& noise) {
  const double denominator = coherence_rel_entropy(mu);
  return rate_ratio(coherence_rel_entropy(apply(noise, mu)), denominator, "coherence_rate");
}

double thermal_rate(const DensityMatrix& mu, const Noise& noise, const DensityMatrix& gamma) {
  const double denominator = relative_entropy(mu, gamma);
  return rate_ratio(relative_entropy(apply(noise, mu), gamma), denominator, "thermal_rate");
}

double purity_rate(const DensityMatrix& mu, const Noise& noise, std::size_t d) {
  if (mu.dim() != d) throw DimMismatch("purity_rate: state dimension differs from d");
  return thermal_rate(mu, noise, DensityMatrix::maximally_mixed(d));
}

ResourceTheory::ResourceTheory(TheoryKind kind, std::optional<DensityMatrix> reference)
    : kind_(kind), reference_(std::move(reference)) {}

ResourceTheory ResourceTheory::entanglement() { return {TheoryKind::kEntanglement, std::nullopt}; }
ResourceTheory ResourceTheory::coherence() { return {TheoryKind::kCoherence, std::nullopt}; }
ResourceTheory ResourceTheory::thermo(const Hamiltonian& h, double temperature) {
  return {TheoryKind::kThermo, gibbs(h, temperature)};
}
ResourceTheory ResourceTheory::purity(std::size_t d) {
  return {TheoryKind::kPurity, DensityMatrix::maximally_mixed(d)};
}

const DensityMatrix& ResourceTheory::reference_state() const {
  if (!reference_) throw ValidationError("this resource theory has no single free state");
  return *reference_;
}

double ResourceTheory::source_measure(const DensityMatrix& rho) const {
  switch (kind_) {
    case TheoryKind::kEntanglement: return hashing_rate(rho, HashingSide::kA);
    case TheoryKind::kCoherence: return coherence_rel_entropy(rho);
    case TheoryKind::kThermo:
    case TheoryKind::kPurity: return relative_entropy(rho, *reference_);
  }
  throw ValidationError("unknown resource theory");
}

double ResourceTheory::target_measure(const DensityMatrix& rho) const {
  if (kind_ == TheoryKind::kEntanglement) {
    if (rho.dims().size() != 2) throw BadDims("entanglement target must be bipartite");
    if (!is_pure(rho)) {
      throw ValidationError("entanglement cost is only available for pure targets");
    }
    return von_neumann_entropy(partial_trace(rho, {0}));
  }
  return source_measure(rho);
}

double reversible_rate(const DensityMatrix& rho, const DensityMatrix& sigma,
                       const ResourceTheory& theory) {
  return rate_ratio(theory.source_measure(rho), theory.target_measure(sigma), "reversible_rate");
}

}  // namespace resdil
