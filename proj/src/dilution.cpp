#include "resdil/dilution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "resdil/errors.hpp"
#include "resdil/functionals.hpp"
#include "resdil/optimize.hpp"
#include "resdil/parallel.hpp"
#include "resdil/rng.hpp"

namespace resdil {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::optional<AdvantagePair> try_eval(const AdvantageFn& f, double x) {
  try {
    return f(x);
  } catch (const Degenerate&) {
    return std::nullopt;
  }
}

// Kraus operators of channel^{⊗k}.
QuantumChannel tensor_power(const QuantumChannel& channel, std::size_t k) {
  std::vector<ComplexMatrix> ops = channel.kraus();
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<ComplexMatrix> next;
    next.reserve(ops.size() * channel.kraus().size());
    for (const ComplexMatrix& a : ops) {
      for (const ComplexMatrix& b : channel.kraus()) next.push_back(kron(a, b));
    }
    ops = std::move(next);
  }
  return QuantumChannel(std::move(ops), channel.name() + "^k");
}

DensityMatrix pure_from_reals(const std::vector<double>& x) {
  const std::size_t d = x.size() / 2;
  std::vector<Complex> ket(d);
  double norm = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    ket[i] = {x[2 * i], x[2 * i + 1]};
    norm += std::norm(ket[i]);
  }
  if (!(norm > 1e-300)) throw Degenerate("zero vector in state search");
  const double s = 1.0 / std::sqrt(norm);
  for (Complex& c : ket) c *= s;
  return DensityMatrix::pure(ket, {d});
}

DensityMatrix bloch_pure(double theta, double phi) {
  const std::vector<Complex> ket{std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
  return DensityMatrix::pure(ket, {2});
}

}  // namespace

AdvantagePair entanglement_advantage(double lambda, double alpha) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 4 + 1e-15)) {
    throw ValidationError("alpha must lie in [0, pi/4]");
  }
  const double c = std::cos(alpha);
  const double lhs = rate_ratio(ed_phase_damped_pure(alpha, lambda), binary_entropy(c * c),
                                "entanglement_advantage");
  return {lhs, ed_phase_damped_singlet(lambda)};
}

AdvantagePair coherence_advantage(double gamma, double alpha, CoherenceFamily family) {
  const CoherenceStates states = coherence_states(alpha);
  const QuantumChannel noise = amplitude_damping(gamma);
  const DensityMatrix& mu = family == CoherenceFamily::kPure ? states.pure : states.mixed;
  return {coherence_rate(mu, noise), coherence_rate(plus_state(), noise)};
}

AdvantagePair thermal_advantage(double temperature, double p, double q) {
  const DensityMatrix gamma = gibbs(Hamiltonian::unit_qubit(), temperature);
  const ThermalDephasingNoise noise = thermal_dephasing_noise(p, gamma);
  return {thermal_rate(diagonal_qubit(q), noise, gamma),
          thermal_rate(basis_state(1, 2), noise, gamma)};
}

void Range::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw ValidationError("range ends must be finite");
  if (!(lo < hi)) {
    throw ValidationError("range must satisfy lo < hi, got [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
}

SweepResult sweep(const AdvantageFn& f, const Range& range, const SweepOptions& options) {
  range.validate();
  if (options.grid < 2) throw ValidationError("grid needs at least 2 points");
  const std::size_t n = options.grid;
  const auto at = [&](std::size_t i) {
    if (i + 1 == n) return range.hi;
    return range.lo + (range.hi - range.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  const std::vector<std::optional<AdvantagePair>> values =
      parallel_map(n, [&](std::size_t i) { return try_eval(f, at(i)); }, options.workers);

  SweepResult result;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < n; ++i) {
    if (!values[i]) {
      ++result.skipped;
      continue;
    }
    result.points.push_back({at(i), values[i]->lhs, values[i]->rhs});
    if (!best || values[i]->lhs > values[*best]->lhs) best = i;
  }
  if (!best) throw Degenerate("every sweep point was degenerate");

  result.argmax_param = at(*best);
  result.max_rate = values[*best]->lhs;
  const bool interior = *best > 0 && *best + 1 < n && values[*best - 1] && values[*best + 1];
  if (options.refine && interior) {
    const auto lhs = [&](double x) {
      const std::optional<AdvantagePair> v = try_eval(f, x);
      return v ? v->lhs : kNegInf;
    };
    const Maximum1D m =
        golden_section_maximize(lhs, at(*best - 1), at(*best + 1), options.refine_tolerance);
    if (m.value > result.max_rate) {
      result.argmax_param = m.x;
      result.max_rate = m.value;
    }
  }
  return result;
}

SweepResult qmax_curve(double p, const Range& temperatures, const SweepOptions& options) {
  temperatures.validate();
  if (!(temperatures.lo > 0.0)) throw ValidationError("temperatures must be positive");
  SweepOptions inner = options;
  inner.workers = 1;
  const AdvantageFn per_temperature = [&](double t) {
    const SweepResult s =
        sweep([&](double q) { return thermal_advantage(t, p, q); }, {0.0, 1.0}, inner);
    return AdvantagePair{s.argmax_param, s.max_rate};
  };
  SweepOptions outer = options;
  outer.refine = false;
  return sweep(per_temperature, temperatures, outer);
}

SweepResult purity_depolarizing_sweep(double p, const Range& q_range,
                                      const SweepOptions& options) {
  if (!(q_range.lo >= 0.0 && q_range.hi <= 1.0)) throw ValidationError("q must lie in [0, 1]");
  const QuantumChannel noise = depolarizing(p, 2);
  const double rhs = 1.0 - binary_entropy(p / 2.0);
  return sweep(
      [&](double q) { return AdvantagePair{purity_rate(diagonal_qubit(q), noise, 2), rhs}; },
      q_range, options);
}

CorrelationReport purity_correlation_search(const QuantumChannel& channel, std::size_t k,
                                            std::size_t trials, std::uint64_t seed) {
  if (channel.in_dim() != 2) throw DimMismatch("purity_correlation_search needs a qubit channel");
  if (k < 1 || k > 3) throw ValidationError("k must be 1, 2 or 3");
  if (trials == 0) throw ValidationError("trials must be positive");
  const ComplexMatrix half = ComplexMatrix::identity(2) * Complex(0.5);
  if (max_abs_diff(channel.apply_to_operator(half), half) > 1e-10) {
    throw ValidationError("purity_correlation_search needs a unital channel");
  }

  // Entropy is additive on products, so the best product of k qubits is k
  // copies of the best single-qubit input.
  const auto single = [&](const std::vector<double>& x) {
    return 1.0 - von_neumann_entropy(apply(channel, bloch_pure(x[0], x[1])));
  };
  const std::size_t nt = 33;
  const std::size_t np = 64;
  std::vector<double> best_angles{0.0, 0.0};
  double best_product = kNegInf;
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      const std::vector<double> x{std::numbers::pi * static_cast<double>(i) / (nt - 1),
                                  2 * std::numbers::pi * static_cast<double>(j) / np};
      const double v = single(x);
      if (v > best_product) {
        best_product = v;
        best_angles = x;
      }
    }
  }
  best_product = std::max(best_product,
                          nelder_mead_maximize(single, best_angles, {0.05, 1e-13, 2000}).value);

  const QuantumChannel noise = tensor_power(channel, k);
  const double kd = static_cast<double>(k);
  const auto merit = [&](const std::vector<double>& x) {
    return 1.0 - von_neumann_entropy(apply(noise, pure_from_reals(x))) / kd;
  };
  const std::size_t dim = std::size_t{1} << k;
  std::mt19937_64 rng = named_stream(seed, "purity_correlation_search");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(2 * dim);
  std::vector<double> best_x;
  double best_correlated = kNegInf;
  for (std::size_t t = 0; t < trials; ++t) {
    for (double& v : x) v = gauss(rng);
    const double v = merit(x);
    if (v > best_correlated) {
      best_correlated = v;
      best_x = x;
    }
  }
  const MaximumND refined = nelder_mead_maximize(
      [&](const std::vector<double>& y) {
        try {
          return merit(y);
        } catch (const Degenerate&) {
          return kNegInf;
        }
      },
      best_x, {0.05, 1e-13, 5000});
  best_correlated = std::max(best_correlated, refined.value);
  return {best_product, best_correlated, trials};
}

double composed_rate(const DensityMatrix& psi, const DensityMatrix& mu, const Noise& noise,
                     const ResourceTheory& theory) {
  return reversible_rate(psi, mu, theory) * reversible_rate(apply(noise, mu), psi, theory);
}

double boundary_limit(const std::function<double(double)>& f, double eps, double ratio) {
  if (!(eps > 0.0) || !(ratio > 1.0)) throw ValidationError("need eps > 0 and ratio > 1");
  const double f0 = f(eps);
  const double f1 = f(eps / ratio);
  const double f2 = f(eps / (ratio * ratio));
  const double d1 = f1 - f0;
  const double d2 = f2 - f1;
  const double second = d2 - d1;
  if (std::abs(second) < 1e-15) return f2;
  return f2 - d2 * d2 / second;
}

}  // namespace resdil
