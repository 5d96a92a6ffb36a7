#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "resdil/errors.hpp"
#include "resdil/optimize.hpp"
#include "resdil/parallel.hpp"
#include "resdil/rng.hpp"

using namespace resdil;

TEST(optimize, GoldenSectionFindsParabolaPeak) {
  const Maximum1D m = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); },
                                              0.0, 1.0, 1e-8);
  EXPECT_NEAR(m.x, 0.3, 1e-7);
  EXPECT_NEAR(m.value, 0.0, 1e-14);
}

TEST(optimize, GoldenSectionEndpointMaximum) {
  const Maximum1D m = golden_section_maximize([](double x) { return x; }, 0.0, 2.0, 1e-6);
  EXPECT_NEAR(m.x, 2.0, 1e-5);
  EXPECT_THROW(golden_section_maximize([](double x) { return x; }, 1.0, 0.0), ValidationError);
}

TEST(optimize, NelderMeadRosenbrock) {
  const auto f = [](const std::vector<double>& x) {
    return -(100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2));
  };
  const MaximumND m = nelder_mead_maximize(f, {-1.0, 1.5}, {0.2, 1e-16, 10000});
  EXPECT_NEAR(m.x[0], 1.0, 1e-4);
  EXPECT_NEAR(m.x[1], 1.0, 1e-4);
}

TEST(optimize, NelderMeadNeverWorseThanStart) {
  const auto f = [](const std::vector<double>& x) { return std::cos(3 * x[0]) * std::sin(2 * x[1]); };
  const std::vector<double> start{0.4, 0.2};
  EXPECT_GE(nelder_mead_maximize(f, start).value, f(start));
  EXPECT_THROW(nelder_mead_maximize(f, {}), ValidationError);
}

TEST(parallel, ResultsInIndexOrder) {
  for (std::size_t workers : {1u, 2u, 5u, 0u}) {
    const std::vector<std::size_t> out =
        parallel_map(37, [](std::size_t i) { return i * i; }, workers);
    ASSERT_EQ(out.size(), 37u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  }
}

TEST(parallel, RethrowsFirstErrorByIndex) {
  const auto f = [](std::size_t i) -> int {
    if (i == 3) throw std::runtime_error("three");
    if (i == 7) throw std::runtime_error("seven");
    return 0;
  };
  try {
    parallel_map(10, f, 4);
    FAIL() << "expected a throw";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "three");
  }
}

TEST(rng, NamedStreamsAreIndependentAndStable) {
  std::mt19937_64 a1 = named_stream(5, "alpha");
  std::mt19937_64 a2 = named_stream(5, "alpha");
  std::mt19937_64 b = named_stream(5, "beta");
  std::mt19937_64 c = named_stream(6, "alpha");
  const auto first = a1();
  EXPECT_EQ(first, a2());
  EXPECT_NE(first, b());
  EXPECT_NE(first, c());
}
