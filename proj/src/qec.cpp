#include "resdil/qec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "resdil/errors.hpp"
#include "resdil/functionals.hpp"
#include "resdil/optimize.hpp"
#include "resdil/parallel.hpp"
#include "resdil/rates.hpp"

namespace resdil {

namespace {

constexpr std::size_t kQubits = 4;
const std::vector<std::size_t> kRegisterDims{2, 2, 2, 2};

ComplexMatrix on(const ComplexMatrix& op, std::size_t qubit) {
  return embed_qubit_operator(op, qubit, kQubits);
}

ComplexMatrix cnot(std::size_t control, std::size_t target) {
  const ComplexMatrix p0 = ComplexMatrix::diagonal({1.0, 0.0});
  const ComplexMatrix p1 = ComplexMatrix::diagonal({0.0, 1.0});
  return on(p0, control) + on(p1, control) * on(pauli::X(), target);
}

const ComplexMatrix& encoder() {
  static const ComplexMatrix e = cnot(2, 1) * cnot(3, 1);
  return e;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
}

double decoded_weight(double p) { return std::pow(1 - p, 3) + 3 * p * (1 - p) * (1 - p); }

}  // namespace

DensityMatrix encode(const DensityMatrix& pair) {
  if (pair.dim() != 4) throw DimMismatch("encode needs a two-qubit state");
  const DensityMatrix ancillas = tensor(plus_state(), plus_state());
  const ComplexMatrix joint = kron(pair.matrix(), ancillas.matrix());
  return DensityMatrix(conjugate(encoder(), joint), kRegisterDims, Validation::kLenient);
}

DensityMatrix decode(const DensityMatrix& encoded) {
  if (encoded.dim() != 16) throw DimMismatch("decode needs a four-qubit state");
  const DensityMatrix undone(conjugate(encoder(), encoded.matrix()), kRegisterDims,
                             Validation::kLenient);
  return partial_trace(undone, {0, 1});
}

DensityMatrix phase_flip_encode() { return encode(singlet()); }

DensityMatrix apply_bob_noise(const QuantumChannel& noise, const DensityMatrix& encoded) {
  if (encoded.dim() != 16) throw DimMismatch("Bob's noise acts on a four-qubit register");
  if (noise.in_dim() != 2) throw DimMismatch("Bob's noise must be a qubit channel");
  const std::array<std::size_t, 3> bob{1, 2, 3};
  return apply_to_qubits(noise, encoded, bob);
}

std::array<SyndromeOutcome, 4> syndrome_measure(const DensityMatrix& noisy) {
  if (noisy.dim() != 16) throw DimMismatch("syndrome measurement needs a four-qubit state");
  const ComplexMatrix id = ComplexMatrix::identity(16);
  const ComplexMatrix x23 = on(pauli::X(), 1) * on(pauli::X(), 2);
  const ComplexMatrix x34 = on(pauli::X(), 2) * on(pauli::X(), 3);
  std::array<SyndromeOutcome, 4> out{};
  std::size_t i = 0;
  for (const int s23 : {1, -1}) {
    for (const int s34 : {1, -1}) {
      const ComplexMatrix proj = (Complex(0.5) * (id + Complex(s23) * x23)) *
                                 (Complex(0.5) * (id + Complex(s34) * x34));
      const ComplexMatrix branch = conjugate(proj, noisy.matrix());
      const double prob = branch.trace().real();
      std::optional<DensityMatrix> post;
      if (prob >= 1e-14) {
        post = DensityMatrix(Complex(1.0 / prob) * branch, kRegisterDims, Validation::kLenient);
      }
      out[i++] = {s23, s34, prob, std::move(post)};
    }
  }
  return out;
}

ComplexMatrix recovery_operator(int x23, int x34) {
  if (std::abs(x23) != 1 || std::abs(x34) != 1) throw ValidationError("syndrome bits are ±1");
  if (x23 == 1 && x34 == 1) return ComplexMatrix::identity(16);
  if (x23 == 1) return on(pauli::Z(), 3);
  if (x34 == 1) return on(pauli::Z(), 1);
  return on(pauli::Z(), 2);
}

DensityMatrix recover(const DensityMatrix& noisy) {
  ComplexMatrix sum(16);
  for (const SyndromeOutcome& o : syndrome_measure(noisy)) {
    if (!o.post_state) continue;
    sum += Complex(o.probability) *
           conjugate(recovery_operator(o.x23, o.x34), o.post_state->matrix());
  }
  return DensityMatrix(std::move(sum), kRegisterDims, Validation::kLenient);
}

DensityMatrix phase_flip_round(const QuantumChannel& noise, const DensityMatrix& pair) {
  return decode(recover(apply_bob_noise(noise, encode(pair))));
}

DensityMatrix intermediate_check_post_recovery(double p, const DensityMatrix& pair) {
  return recover(apply_bob_noise(phase_flip(p), encode(pair)));
}

double p_fail(double p, unsigned t) {
  check_probability(p);
  const unsigned n = 2 * t + 1;
  double sum = 0.0;
  double binom = 1.0;  // C(n, k), built up from k = 0
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * static_cast<double>(n - k + 1) / static_cast<double>(k);
    if (k >= t + 1) sum += binom * std::pow(p, k) * std::pow(1 - p, n - k);
  }
  return sum;
}

double ed_qec_phase_flip(double p) {
  check_probability(p);
  return 1.0 - binary_entropy(decoded_weight(p));
}

double ed_dil_phase_flip(double p, double alpha) {
  check_probability(p);
  const double c = std::cos(alpha);
  const double x = 0.5 * (1 + std::sqrt(1 - 2 * p * (1 - p) * (1 - std::cos(4 * alpha))));
  return 1.0 - rate_ratio(binary_entropy(x), binary_entropy(c * c), "ed_dil_phase_flip");
}

DensityMatrix pauli_qec_decoded(const PauliProbs& p) {
  p.validate();
  return phase_flip_round(pauli_channel(p));
}

PauliProbs cyclic_permutation(const PauliProbs& p) {
  p.validate();
  const std::array<double, 3> v{p.p1, p.p2, p.p3};
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (v[i] > v[k]) k = i;
  }
  // v is 0-based here; (p_{k+1}, p_{k+2}, p_k) in 1-based indices.
  return {p.p0, v[(k + 1) % 3], v[(k + 2) % 3], v[k]};
}

ComplexMatrix u3(double theta, double phi, double lam) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return ComplexMatrix{{c, -std::polar(s, lam)},
                       {std::polar(s, phi), std::polar(c, phi + lam)}};
}

double dilution_bound(const PauliProbs& p, const ComplexMatrix& u, double alpha) {
  const DensityMatrix psi = pure_two_qubit(alpha);
  const DensityMatrix rotated = unitary_conjugate(kron(pauli::I(), u), psi);
  const DensityMatrix rho =
      apply(extend_id_tensor(pauli_channel(p), 2, 1), rotated).with_dims({2, 2});
  const double c = std::cos(alpha);
  return rate_ratio(hashing_rate(rho, HashingSide::kB), binary_entropy(c * c), "dilution_bound");
}

PauliComparison pauli_compare(const PauliProbs& p, std::size_t u_grid, double alpha,
                              std::size_t workers) {
  p.validate();
  if (u_grid < 8) throw ValidationError("u_grid must be at least 8");

  PauliComparison report{};
  report.ed_qec_bound = hashing_rate(pauli_qec_decoded(cyclic_permutation(p)), HashingSide::kA);
  report.ed_nothing_bound =
      hashing_rate(apply(extend_id_tensor(pauli_channel(p), 2, 1), singlet()).with_dims({2, 2}),
                   HashingSide::kA);

  const double pi = std::numbers::pi;
  const std::size_t g = u_grid;
  const auto angles = [&](std::size_t index) {
    const std::size_t i = index / (g * g);
    const std::size_t j = (index / g) % g;
    const std::size_t l = index % g;
    return std::array<double, 3>{pi * static_cast<double>(i) / static_cast<double>(g - 1),
                                 2 * pi * static_cast<double>(j) / static_cast<double>(g),
                                 2 * pi * static_cast<double>(l) / static_cast<double>(g)};
  };
  const QuantumChannel noise = extend_id_tensor(pauli_channel(p), 2, 1);
  const DensityMatrix psi = pure_two_qubit(alpha);
  const double c = std::cos(alpha);
  const double denominator = binary_entropy(c * c);
  const auto bound = [&](const std::array<double, 3>& a) {
    const DensityMatrix rotated = unitary_conjugate(kron(pauli::I(), u3(a[0], a[1], a[2])), psi);
    const DensityMatrix rho = apply(noise, rotated).with_dims({2, 2});
    return rate_ratio(hashing_rate(rho, HashingSide::kB), denominator, "dilution_bound");
  };
  const std::vector<double> values =
      parallel_map(g * g * g, [&](std::size_t idx) { return bound(angles(idx)); }, workers);
  const std::size_t best =
      static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
  std::array<double, 3> best_angles = angles(best);
  double best_value = values[best];

  const MaximumND refined = nelder_mead_maximize(
      [&](const std::vector<double>& x) { return bound({x[0], x[1], x[2]}); },
      {best_angles[0], best_angles[1], best_angles[2]}, {0.05, 1e-12, 2000});
  if (refined.value > best_value) {
    best_value = refined.value;
    best_angles = {refined.x[0], refined.x[1], refined.x[2]};
  }
  report.ed_dil_bound = best_value;
  report.best_angles = best_angles;
  return report;
}

}  // namespace resdil
