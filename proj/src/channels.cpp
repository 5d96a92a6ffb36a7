#include "resdil/channels.hpp"

#include <bit>
#include <cmath>
#include <numeric>

#include "resdil/errors.hpp"

namespace resdil {

namespace {

constexpr double kCompletenessTolerance = 1e-10;

void check_probability(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

ComplexMatrix dephased(const ComplexMatrix& x) {
  ComplexMatrix out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out(i, i) = x(i, i);
  return out;
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus, std::string name)
    : kraus_(std::move(kraus)), in_dim_(0), name_(std::move(name)) {
  if (kraus_.empty()) throw ValidationError("channel needs at least one Kraus operator");
  in_dim_ = kraus_.front().dim();
  for (const ComplexMatrix& k : kraus_) {
    if (k.dim() != in_dim_) throw DimMismatch("Kraus operators have different dimensions");
  }
  const double err = completeness_error();
  if (err > kCompletenessTolerance) {
    throw ValidationError(name_ + ": Kraus operators violate completeness by " +
                          std::to_string(err));
  }
}

double QuantumChannel::completeness_error() const {
  ComplexMatrix sum(in_dim_);
  for (const ComplexMatrix& k : kraus_) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::identity(in_dim_));
}

ComplexMatrix QuantumChannel::apply_to_operator(const ComplexMatrix& x) const {
  if (x.dim() != in_dim_) {
    throw DimMismatch(name_ + " acts on dimension " + std::to_string(in_dim_) +
                      ", input has dimension " + std::to_string(x.dim()));
  }
  ComplexMatrix out(in_dim_);
  for (const ComplexMatrix& k : kraus_) out += conjugate(k, x);
  return out;
}

ThermalDephasingNoise::ThermalDephasingNoise(double p, DensityMatrix gamma)
    : p_(p), gamma_(std::move(gamma)) {
  check_probability(p_, "p");
  if (!gamma_.matrix().is_diagonal()) {
    throw ValidationError("thermal noise needs a state diagonal in the energy basis");
  }
}

ComplexMatrix ThermalDephasingNoise::apply_to_operator(const ComplexMatrix& x) const {
  if (x.dim() != in_dim()) throw DimMismatch("thermal noise dimension mismatch");
  return gamma_.matrix() * (p_ * x.trace()) + dephased(x) * (1.0 - p_);
}

QuantumChannel ThermalDephasingNoise::kraus_realization() const {
  const std::size_t d = in_dim();
  const std::vector<double> g = gamma_.matrix().real_diagonal();
  std::vector<ComplexMatrix> kraus;
  if (d == 2) {
    const double x = p_ * g[0] + 1.0 - p_;
    const double y = p_ * g[1] + 1.0 - p_;
    ComplexMatrix lower(2);
    lower(0, 1) = std::sqrt(p_ * g[0]);
    ComplexMatrix raise(2);
    raise(1, 0) = std::sqrt(p_ * g[1]);
    kraus.push_back(lower);
    kraus.push_back(raise);
    kraus.push_back(ComplexMatrix::diagonal({std::sqrt(x / 2), std::sqrt(y / 2)}));
    kraus.push_back(ComplexMatrix::diagonal({std::sqrt(x / 2), -std::sqrt(y / 2)}));
  } else {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        ComplexMatrix k(d);
        k(i, j) = std::sqrt(p_ * g[i]);
        kraus.push_back(std::move(k));
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      ComplexMatrix k(d);
      k(i, i) = std::sqrt(1.0 - p_);
      kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel(std::move(kraus), "thermal-dephasing-kraus");
}

std::size_t in_dim(const Noise& noise) {
  return std::visit([](const auto& n) { return n.in_dim(); }, noise);
}

ComplexMatrix apply_to_operator(const Noise& noise, const ComplexMatrix& x) {
  return std::visit([&](const auto& n) { return n.apply_to_operator(x); }, noise);
}

DensityMatrix apply(const Noise& noise, const DensityMatrix& rho) {
  if (in_dim(noise) != rho.dim()) {
    throw DimMismatch("noise acts on dimension " + std::to_string(in_dim(noise)) +
                      ", state has dimension " + std::to_string(rho.dim()));
  }
  return DensityMatrix(apply_to_operator(noise, rho.matrix()), rho.dims(), Validation::kLenient);
}

bool channels_equal(const Noise& a, const Noise& b, double tolerance) {
  const std::size_t d = in_dim(a);
  if (in_dim(b) != d) return false;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix unit(d);
      unit(i, j) = 1.0;
      if (!approx_equal(apply_to_operator(a, unit), apply_to_operator(b, unit), tolerance)) {
        return false;
      }
    }
  }
  return true;
}

QuantumChannel identity_channel(std::size_t dim) {
  return QuantumChannel({ComplexMatrix::identity(dim)}, "identity");
}

QuantumChannel phase_damping(double lambda) {
  check_probability(lambda, "lambda");
  return QuantumChannel({ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - lambda)}),
                         ComplexMatrix::diagonal({0.0, std::sqrt(lambda)})},
                        "phase-damping");
}

QuantumChannel amplitude_damping(double gamma) {
  check_probability(gamma, "gamma");
  ComplexMatrix k1(2);
  k1(0, 1) = std::sqrt(gamma);
  return QuantumChannel({ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - gamma)}), k1},
                        "amplitude-damping");
}

ThermalDephasingNoise thermal_dephasing_noise(double p, const DensityMatrix& gamma_state) {
  return ThermalDephasingNoise(p, gamma_state);
}

QuantumChannel depolarizing(double p, std::size_t dim) {
  check_probability(p, "p");
  if (dim < 2) throw ValidationError("depolarizing channel needs dimension >= 2");
  std::vector<ComplexMatrix> kraus;
  kraus.push_back(ComplexMatrix::identity(dim) * std::sqrt(1.0 - p));
  const double w = std::sqrt(p / static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      ComplexMatrix k(dim);
      k(i, j) = w;
      kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel(std::move(kraus), "depolarizing");
}

void PauliProbs::validate() const {
  double sum = 0.0;
  for (double x : as_array()) {
    if (!(x >= 0.0 && x <= 1.0)) throw ValidationError("Pauli probabilities must lie in [0, 1]");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("Pauli probabilities must sum to 1");
}

QuantumChannel pauli_channel(const PauliProbs& p) {
  p.validate();
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < 4; ++i) kraus.push_back(pauli::sigma(i) * std::sqrt(p[i]));
  return QuantumChannel(std::move(kraus), "pauli");
}

QuantumChannel phase_flip(double p) {
  check_probability(p, "p");
  return pauli_channel({1.0 - p, 0.0, 0.0, p});
}

QuantumChannel correlated_z_noise(std::size_t n, std::span<const double> probs) {
  if (n == 0 || n > 8) throw ValidationError("correlated Z noise supports 1..8 qubits");
  const std::size_t patterns = std::size_t{1} << n;
  if (probs.size() != patterns) {
    throw ValidationError("correlated Z noise on " + std::to_string(n) + " qubits needs " +
                          std::to_string(patterns) + " probabilities");
  }
  double sum = 0.0;
  for (double x : probs) {
    if (!(x >= 0.0 && x <= 1.0)) throw ValidationError("pattern probabilities must lie in [0, 1]");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("pattern probabilities must sum to 1");

  // Z^{b_1}⊗...⊗Z^{b_n} is diagonal with sign (-1)^{popcount(basis & pattern)}.
  std::vector<ComplexMatrix> kraus;
  for (std::size_t pattern = 0; pattern < patterns; ++pattern) {
    std::vector<double> diag(patterns);
    const double w = std::sqrt(probs[pattern]);
    for (std::size_t basis = 0; basis < patterns; ++basis) {
      const bool odd = std::popcount(basis & pattern) % 2 == 1;
      diag[basis] = odd ? -w : w;
    }
    kraus.push_back(ComplexMatrix::diagonal(diag));
  }
  return QuantumChannel(std::move(kraus), "correlated-z");
}

QuantumChannel extend_id_tensor(const QuantumChannel& channel, std::size_t left_dim,
                                std::size_t right_dim) {
  std::vector<ComplexMatrix> kraus;
  const ComplexMatrix left = ComplexMatrix::identity(left_dim);
  const ComplexMatrix right = ComplexMatrix::identity(right_dim);
  for (const ComplexMatrix& k : channel.kraus()) kraus.push_back(kron({left, k, right}));
  return QuantumChannel(std::move(kraus), "id⊗" + channel.name());
}

DensityMatrix apply_to_qubits(const QuantumChannel& channel, const DensityMatrix& rho,
                              std::span<const std::size_t> qubits) {
  if (channel.in_dim() != 2) throw DimMismatch("apply_to_qubits needs a qubit channel");
  std::size_t n = 0;
  while ((std::size_t{1} << n) < rho.dim()) ++n;
  if ((std::size_t{1} << n) != rho.dim()) throw DimMismatch("state is not an n-qubit state");
  ComplexMatrix m = rho.matrix();
  for (std::size_t q : qubits) {
    ComplexMatrix next(m.dim());
    for (const ComplexMatrix& k : channel.kraus()) {
      next += conjugate(embed_qubit_operator(k, q, n), m);
    }
    m = std::move(next);
  }
  return DensityMatrix(std::move(m), rho.dims(), Validation::kLenient);
}

}  // namespace resdil
