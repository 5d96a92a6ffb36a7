#pragma once

// Derivative-free maximizers used for argmax refinement and unitary search.

#include <cstddef>
#include <functional>
#include <vector>

namespace resdil {

struct Maximum1D {
  double x;
  double value;
};

/// Golden-section search for a maximum of a unimodal f on [lo, hi]; stops once
/// the bracket is narrower than x_tolerance.
Maximum1D golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                  double x_tolerance = 1e-6);

struct MaximumND {
  std::vector<double> x;
  double value;
  int iterations;
};

struct NelderMeadOptions {
  /// Initial simplex edge length along each axis.
  double step = 0.1;
  /// Stop when max - min over the simplex drops below this.
  double value_tolerance = 1e-10;
  int max_iterations = 2000;
};

/// Nelder-Mead simplex maximization (standard reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2 coefficients).
MaximumND nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                               std::vector<double> start, const NelderMeadOptions& options = {});

}  // namespace resdil
