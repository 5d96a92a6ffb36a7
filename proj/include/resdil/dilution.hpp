#pragma once

// Does diluting a resource before noise beat sending it as is? Scenario
// evaluators for each theory, parameter sweeps, and the composed rate
// R(psi -> mu)·R(Λ[mu] -> psi).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "resdil/channels.hpp"
#include "resdil/rates.hpp"
#include "resdil/states.hpp"

namespace resdil {

/// lhs: rate with dilution. rhs: rate without it.
struct AdvantagePair {
  double lhs;
  double rhs;
};

/// lhs = E_d(1⊗Λ_pd[psi(alpha)]) / h(cos^2 alpha), rhs = E_d(1⊗Λ_pd[singlet]).
/// alpha in [0, pi/4]; alpha = 0 is a 0/0 point and throws Degenerate.
AdvantagePair entanglement_advantage(double lambda, double alpha);

enum class CoherenceFamily {
  /// cos a|0> + sin a|1>.
  kPure,
  /// sin^2 a |+><+| + cos^2 a 1/2.
  kMixed,
};

/// lhs = C(Λ_AD[mu]) / C(mu) for mu in the chosen family, rhs = C(Λ_AD[|+><+|]).
AdvantagePair coherence_advantage(double gamma, double alpha, CoherenceFamily family);

/// Energies {0, 1}, noise p·gamma + (1 - p)Δ. lhs is the rate for the diagonal
/// state with excited weight q, rhs the rate for the excited state itself.
AdvantagePair thermal_advantage(double temperature, double p, double q);

/// Closed parameter interval; lo < hi is required.
struct Range {
  double lo;
  double hi;
  void validate() const;
};

struct SweepPoint {
  double parameter;
  double lhs;
  double rhs;
};

struct SweepResult {
  /// Sorted by parameter; Degenerate grid points are left out.
  std::vector<SweepPoint> points;
  /// Parameter of the largest lhs (first grid point on ties), refined by
  /// golden section when that point is interior.
  double argmax_param = 0.0;
  double max_rate = 0.0;
  std::size_t skipped = 0;
};

struct SweepOptions {
  std::size_t grid = 200;
  bool refine = true;
  double refine_tolerance = 1e-6;
  /// 0 = hardware concurrency. The result does not depend on this.
  std::size_t workers = 0;
};

using AdvantageFn = std::function<AdvantagePair(double)>;

/// Evaluates f on `grid` evenly spaced points of `range` (both ends included).
SweepResult sweep(const AdvantageFn& f, const Range& range, const SweepOptions& options = {});

/// For each temperature in `temperatures`: lhs = q_max, rhs = the rate at q_max.
/// The q search runs on [0, 1] with the same grid size.
SweepResult qmax_curve(double p, const Range& temperatures, const SweepOptions& options = {});

/// Purity rate of diag(1 - q, q) under qubit depolarizing(p); rhs = 1 - h(p/2),
/// the rate of a pure state. q = 1/2 is Degenerate.
SweepResult purity_depolarizing_sweep(double p, const Range& q_range,
                                      const SweepOptions& options = {});

struct CorrelationReport {
  /// max over product states of 1 - S(Λ^{⊗k}[psi])/k.
  double best_product;
  /// Best value found by random search over k-qubit pure states plus local
  /// refinement of the best sample.
  double best_correlated;
  std::size_t trials;
};

/// Searches for a correlated k-qubit input that beats product inputs for the
/// purity figure of merit under a unital qubit channel. k in {1, 2, 3}.
CorrelationReport purity_correlation_search(const QuantumChannel& channel, std::size_t k,
                                            std::size_t trials, std::uint64_t seed);

/// R(psi -> mu)·R(Λ[mu] -> psi) with rates from `theory`.
double composed_rate(const DensityMatrix& psi, const DensityMatrix& mu, const Noise& noise,
                     const ResourceTheory& theory);

/// Limit of f(x) as x -> 0+ from f at eps, eps/ratio, eps/ratio^2 by Aitken's
/// delta-squared extrapolation; falls back to the last sample when the second
/// difference vanishes.
double boundary_limit(const std::function<double(double)>& f, double eps = 1e-2,
                      double ratio = 10.0);

}  // namespace resdil
