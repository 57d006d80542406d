#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qcs {

// Objective with gradient: returns f(x) and, when `grad` is non-empty, writes
// the gradient into it.
using SmoothObjective = std::function<double(std::span<const double> x, std::span<double> grad)>;

struct SmoothOptions {
  std::size_t max_iterations = 2000;
  double gradient_tolerance = 1e-12;
  double function_tolerance = 1e-15;
  double parameter_tolerance = 1e-14;
};

struct SmoothResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Unconstrained quasi-Newton (BFGS with line search) from `start`.
SmoothResult minimize_smooth(const SmoothObjective& f, std::vector<double> start,
                             const SmoothOptions& options = {});

// `starts` runs from points drawn uniformly from [-radius, radius]^dim with a
// generator seeded by `seed`; the result with the least value wins, ties going
// to the earlier start.
SmoothResult multi_start(const SmoothObjective& f, std::size_t dim, std::size_t starts,
                         std::uint64_t seed, double radius = 1.0,
                         const SmoothOptions& options = {});

// Deterministic uniform draws in [-radius, radius]^dim, shared by every
// randomized path in the library.
std::vector<std::vector<double>> seeded_starts(std::size_t dim, std::size_t count,
                                               std::uint64_t seed, double radius = 1.0);

}  // namespace qcs
