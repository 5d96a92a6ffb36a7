#include "resdil/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "resdil/channels.hpp"
#include "resdil/dilution.hpp"
#include "resdil/functionals.hpp"
#include "resdil/linalg.hpp"
#include "resdil/qec.hpp"
#include "resdil/rates.hpp"
#include "resdil/rng.hpp"
#include "resdil/states.hpp"

namespace resdil {

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Complex z = i == j ? Complex(g(rng), 0.0) : Complex(g(rng), g(rng));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

DensityMatrix random_state(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix a(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
  }
  ComplexMatrix rho = a * a.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return DensityMatrix(std::move(rho), Validation::kLenient);
}

double worst_completeness() {
  const DensityMatrix gamma = gibbs(Hamiltonian::unit_qubit(), 0.3);
  const std::vector<double> probs{0.05, 0.03, 0.26, 0.66};
  double worst = 0.0;
  for (const QuantumChannel& ch :
       {identity_channel(3), phase_damping(0.3), amplitude_damping(0.7), depolarizing(0.4, 3),
        pauli_channel({0.7, 0.1, 0.05, 0.15}), phase_flip(0.2), correlated_z_noise(2, probs),
        thermal_dephasing_noise(0.6, gamma).kraus_realization()}) {
    worst = std::max(worst, ch.completeness_error());
  }
  return worst;
}

std::vector<SelftestCase> build_registry() {
  std::vector<SelftestCase> cases;
  const auto add = [&](std::string module, std::string name, std::function<double()> error,
                       double tolerance) {
    cases.push_back({std::move(module), std::move(name), std::move(error), tolerance});
  };

  add("linalg", "eigendecomposition reconstructs", [] {
    std::mt19937_64 rng = named_stream(1, "selftest/linalg");
    const ComplexMatrix h = random_hermitian(rng, 8);
    return max_abs_diff(hermitian_eig(h).reconstruct(), h);
  }, 1e-10);
  add("linalg", "partial trace of product", [] {
    std::mt19937_64 rng = named_stream(1, "selftest/ptrace");
    const DensityMatrix a = random_state(rng, 2);
    const DensityMatrix b = random_state(rng, 3);
    return max_abs_diff(partial_trace(tensor(a, b), {1}).matrix(), b.matrix());
  }, 1e-12);

  add("states", "gibbs populations follow Boltzmann", [] {
    const DensityMatrix g = gibbs(Hamiltonian({0.0, 0.5, 2.0}), 0.7);
    return std::abs(g(1, 1).real() / g(0, 0).real() - std::exp(-0.5 / 0.7));
  }, 1e-12);
  add("states", "singlet marginal is maximally mixed", [] {
    return max_abs_diff(partial_trace(singlet(), {0}).matrix(),
                        DensityMatrix::maximally_mixed(2).matrix());
  }, 1e-12);

  add("channels", "CPTP completeness", worst_completeness, 1e-10);
  add("channels", "thermal noise fixes the Gibbs state", [] {
    const DensityMatrix g = gibbs(Hamiltonian::unit_qubit(), 0.3);
    return max_abs_diff(apply(thermal_dephasing_noise(0.6, g), g).matrix(), g.matrix());
  }, 1e-12);

  add("functionals", "relative entropy contracts", [] {
    std::mt19937_64 rng = named_stream(1, "selftest/contract");
    const QuantumChannel ch = amplitude_damping(0.4);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const DensityMatrix r = random_state(rng, 2);
      const DensityMatrix s = random_state(rng, 2);
      worst = std::max(worst, relative_entropy(apply(ch, r), apply(ch, s)) - relative_entropy(r, s));
    }
    return worst;
  }, 1e-9);
  add("functionals", "h(1/4)", [] { return std::abs(binary_entropy(0.25) - 0.8112781244591328); },
      1e-14);

  add("rates", "closed form vs hashing", [] {
    double worst = 0.0;
    for (const double a : {0.1, 0.4, 0.7}) {
      for (const double l : {0.2, 0.5, 0.9}) {
        const DensityMatrix rho =
            apply(extend_id_tensor(phase_damping(l), 2, 1), pure_two_qubit(a)).with_dims({2, 2});
        worst = std::max(worst, std::abs(hashing_rate(rho) - ed_phase_damped_pure(a, l)));
      }
    }
    return worst;
  }, 1e-9);
  add("rates", "reversibility product", [] {
    std::mt19937_64 rng = named_stream(1, "selftest/reversible");
    const ResourceTheory theory = ResourceTheory::purity(2);
    const DensityMatrix r = random_state(rng, 2);
    const DensityMatrix s = random_state(rng, 2);
    return std::abs(reversible_rate(r, s, theory) * reversible_rate(s, r, theory) - 1.0);
  }, 1e-9);

  add("dilution", "no-dilution coherence rate", [] {
    return std::abs(coherence_advantage(0.9, 0.5, CoherenceFamily::kPure).rhs -
                    coherence_rate(plus_state(), amplitude_damping(0.9)));
  }, 1e-14);
  add("dilution", "composed rate independent of source", [] {
    const ResourceTheory theory = ResourceTheory::coherence();
    const QuantumChannel noise = amplitude_damping(0.6);
    const DensityMatrix mu = coherence_states(0.3).pure;
    return std::abs(composed_rate(plus_state(), mu, noise, theory) -
                    composed_rate(coherence_states(0.6).mixed, mu, noise, theory));
  }, 1e-9);

  add("qec", "syndrome probabilities sum to one", [] {
    double sum = 0.0;
    for (const SyndromeOutcome& o :
         syndrome_measure(apply_bob_noise(pauli_channel({0.7, 0.1, 0.05, 0.15}),
                                          phase_flip_encode()))) {
      sum += o.probability;
    }
    return std::abs(sum - 1.0);
  }, 1e-10);
  add("qec", "decoded weight", [] {
    const double p = 0.1;
    const double w = std::pow(1 - p, 3) + 3 * p * (1 - p) * (1 - p);
    const double fid = fidelity(phase_flip_round(phase_flip(p)), singlet());
    return std::abs(fid * fid - w);
  }, 1e-10);
  add("qec", "P(0.1, 1)", [] { return std::abs(p_fail(0.1, 1) - 0.028); }, 1e-12);
  return cases;
}

}  // namespace

const std::vector<SelftestCase>& selftest_registry() {
  static const std::vector<SelftestCase> registry = build_registry();
  return registry;
}

bool SelftestReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const SelftestResult& r) { return r.passed; });
}

std::string SelftestReport::to_text() const {
  std::string out;
  char buf[512];
  for (const SelftestResult& r : results) {
    std::snprintf(buf, sizeof buf, "%s %s/%s error=%.3g tolerance=%.3g%s%s\n",
                  r.passed ? "PASS" : "FAIL", r.module.c_str(), r.invariant.c_str(), r.error,
                  r.tolerance, r.exception.empty() ? "" : " exception=", r.exception.c_str());
    out += buf;
  }
  std::size_t passed = 0;
  for (const auto& [module, counts] : per_module) {
    std::snprintf(buf, sizeof buf, "module %s: %zu/%zu passed\n", module.c_str(), counts.first,
                  counts.second);
    out += buf;
    passed += counts.first;
  }
  std::snprintf(buf, sizeof buf, "total: %zu/%zu passed\n", passed, results.size());
  out += buf;
  return out;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  for (const SelftestCase& c : selftest_registry()) {
    SelftestResult r{c.module, c.invariant, 0.0, c.tolerance * options.tolerance_scale, false, {}};
    if (options.corrupt == c.module + "/" + c.invariant) r.tolerance = -1.0;
    try {
      r.error = c.error();
      r.passed = r.error <= r.tolerance;
    } catch (const std::exception& e) {
      r.exception = e.what();
    }
    auto& counts = report.per_module[c.module];
    counts.second += 1;
    if (r.passed) counts.first += 1;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace resdil
