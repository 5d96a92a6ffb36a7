#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "resdil/linalg.hpp"
#include "resdil/states.hpp"

namespace resdil {

/// CPTP map in Kraus form. Construction checks sum K†K = 1 within 1e-10.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus, std::string name = "channel");

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  std::size_t in_dim() const { return in_dim_; }
  const std::string& name() const { return name_; }

  /// max |sum K†K - 1| entry.
  double completeness_error() const;

  /// sum K X K† for an arbitrary operator X (linear extension).
  ComplexMatrix apply_to_operator(const ComplexMatrix& x) const;

 private:
  std::vector<ComplexMatrix> kraus_;
  std::size_t in_dim_;
  std::string name_;
};

/// rho -> p·gamma + (1 - p)·Delta[rho], Delta = dephasing in the energy
/// (computational) basis. This map has a constant term once restricted to
/// unit-trace inputs, so it is evaluated directly rather than through Kraus
/// operators; kraus_realization() provides an equivalent Kraus form.
class ThermalDephasingNoise {
 public:
  /// gamma must be diagonal; p in [0, 1].
  ThermalDephasingNoise(double p, DensityMatrix gamma);

  double p() const { return p_; }
  const DensityMatrix& gamma() const { return gamma_; }
  std::size_t in_dim() const { return gamma_.dim(); }

  /// p·gamma·Tr(X) + (1 - p)·Delta[X].
  ComplexMatrix apply_to_operator(const ComplexMatrix& x) const;

  /// Qubits get the four-operator form
  ///   sqrt(p g0)|0><1|, sqrt(p g1)|1><0|, diag(sqrt(x/2), ±sqrt(y/2))
  /// with x = p g0 + 1 - p, y = p g1 + 1 - p. Larger d uses the d^2 + d
  /// operators sqrt(p g_i)|i><j| and sqrt(1 - p)|i><i|.
  QuantumChannel kraus_realization() const;

 private:
  double p_;
  DensityMatrix gamma_;
};

/// Any noise model the rate functions accept.
using Noise = std::variant<QuantumChannel, ThermalDephasingNoise>;

std::size_t in_dim(const Noise& noise);

/// Throws DimMismatch if the state dimension differs from the channel's.
DensityMatrix apply(const Noise& noise, const DensityMatrix& rho);
ComplexMatrix apply_to_operator(const Noise& noise, const ComplexMatrix& x);

/// Extensional equality: both maps agree on every matrix unit |i><j|.
bool channels_equal(const Noise& a, const Noise& b, double tolerance = 1e-10);

QuantumChannel identity_channel(std::size_t dim);

/// K0 = diag(1, sqrt(1 - lambda)), K1 = diag(0, sqrt(lambda)).
QuantumChannel phase_damping(double lambda);

/// K0 = diag(1, sqrt(1 - gamma)), K1 = sqrt(gamma)|0><1|.
QuantumChannel amplitude_damping(double gamma);

ThermalDephasingNoise thermal_dephasing_noise(double p, const DensityMatrix& gamma_state);

/// rho -> p·1/d + (1 - p)·rho, as Kraus operators sqrt(1 - p)·1 and
/// sqrt(p/d)|i><j|.
QuantumChannel depolarizing(double p, std::size_t dim);

struct PauliProbs {
  double p0 = 1.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;

  std::array<double, 4> as_array() const { return {p0, p1, p2, p3}; }
  double operator[](int i) const { return as_array()[static_cast<std::size_t>(i)]; }
  /// Each in [0, 1] and sum within 1e-12 of 1; throws ValidationError otherwise.
  void validate() const;
};

/// sum_i p_i sigma_i rho sigma_i.
QuantumChannel pauli_channel(const PauliProbs& p);

/// (1 - p)·rho + p·Z rho Z.
QuantumChannel phase_flip(double p);

/// n-qubit correlated Z noise: Kraus operators sqrt(p_k)·Z^{b_1}⊗...⊗Z^{b_n}
/// where b_1..b_n are the bits of the pattern index k, most significant bit
/// on qubit 1. probs.size() must be 2^n.
QuantumChannel correlated_z_noise(std::size_t n, std::span<const double> probs);

/// 1_left ⊗ channel ⊗ 1_right.
QuantumChannel extend_id_tensor(const QuantumChannel& channel, std::size_t left_dim,
                                std::size_t right_dim);

/// Apply `channel` independently to each listed qubit of an n-qubit state.
DensityMatrix apply_to_qubits(const QuantumChannel& channel, const DensityMatrix& rho,
                              std::span<const std::size_t> qubits);

}  // namespace resdil
