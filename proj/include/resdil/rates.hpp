#pragma once

// Asymptotic conversion rates for the entanglement, coherence, thermodynamics
// and purity resource theories.
//
// Entanglement rates go through the hashing bound S(rho_kept) - S(rho), which
// equals the distillable entanglement on maximally correlated states; every
// closed form below is of that kind. Coherence, thermal and purity rates are
// ratios of the theory's relative-entropy measure.

#include <cstddef>
#include <optional>
#include <span>

#include "resdil/channels.hpp"
#include "resdil/states.hpp"

namespace resdil {

/// Rate denominators below this raise Degenerate.
inline constexpr double kDegenerateDenominator = 1e-12;

/// numerator / denominator, or Degenerate when the denominator is below
/// kDegenerateDenominator or infinite. `what` prefixes the error message.
double rate_ratio(double numerator, double denominator, const char* what);

enum class HashingSide {
  /// S(rho^A) - S(rho).
  kA,
  /// S(rho^B) - S(rho).
  kB,
  /// Larger of the two.
  kBest,
};

/// Hashing bound of a bipartite state (dims must have exactly two entries).
/// Negative values are returned as is.
double hashing_rate(const DensityMatrix& rho, HashingSide side = HashingSide::kA);

/// Closed-form distillable entanglement of 1⊗Λ_pd(lambda)[cos a|00> + sin a|11>]:
///   h(cos^2 a) - h(1/2 + sqrt(2 lambda cos 4a - 2 lambda + 4)/4).
double ed_phase_damped_pure(double alpha, double lambda);

/// Closed form for the phase-damped singlet: 1 - h((1 + sqrt(1 - lambda))/2).
double ed_phase_damped_singlet(double lambda);

/// The 2n-qubit state 1⊗Λ_B[psi^{⊗n}] with Alice's n qubits first, so
/// dims = {2^n, 2^n}. `alpha` selects cos a|00> + sin a|11> pairs; nullopt
/// selects singlets. Λ_B is correlated_z_noise(n, probs) on Bob's qubits.
DensityMatrix correlated_noise_state(std::size_t n, std::optional<double> alpha,
                                     std::span<const double> probs);

/// Distillable entanglement under correlated Z noise. Singlets (alpha =
/// nullopt) use n - h(p); diluted pairs use n·h(cos^2 a) - S(Λ_B[psi^{⊗n}])
/// with the entropy taken from the simulated state. n in 1..4.
double ed_correlated_noise(std::size_t n, std::optional<double> alpha,
                           std::span<const double> probs);

/// C(Λ[mu]) / C(mu). Throws Degenerate if C(mu) < kDegenerateDenominator.
double coherence_rate(const DensityMatrix& mu, const Noise& noise);

/// S(Λ[mu]||gamma) / S(mu||gamma). Throws Degenerate if the denominator is
/// below kDegenerateDenominator or infinite.
double thermal_rate(const DensityMatrix& mu, const Noise& noise, const DensityMatrix& gamma);

/// thermal_rate with gamma = 1/d.
double purity_rate(const DensityMatrix& mu, const Noise& noise, std::size_t d);

enum class TheoryKind { kEntanglement, kCoherence, kThermo, kPurity };

/// A resource theory together with its free reference state where one exists
/// (the Gibbs state for thermodynamics, 1/d for purity).
class ResourceTheory {
 public:
  static ResourceTheory entanglement();
  static ResourceTheory coherence();
  static ResourceTheory thermo(const Hamiltonian& h, double temperature);
  static ResourceTheory purity(std::size_t d);

  TheoryKind kind() const { return kind_; }
  /// Throws ValidationError for theories without one.
  const DensityMatrix& reference_state() const;

  /// Rate numerator when rho is the source of a conversion: C, S(.||gamma),
  /// or for entanglement the hashing bound on side A (= S(rho^A) for pure
  /// states, = E_d on maximally correlated states).
  double source_measure(const DensityMatrix& rho) const;
  /// Rate denominator when rho is the target. For entanglement this is the
  /// entanglement cost S(rho^A), available in closed form for pure states
  /// only; mixed targets throw ValidationError.
  double target_measure(const DensityMatrix& rho) const;

 private:
  ResourceTheory(TheoryKind kind, std::optional<DensityMatrix> reference);

  TheoryKind kind_;
  std::optional<DensityMatrix> reference_;
};

/// R(rho -> sigma) = source_measure(rho) / target_measure(sigma).
double reversible_rate(const DensityMatrix& rho, const DensityMatrix& sigma,
                       const ResourceTheory& theory);

}  // namespace resdil
