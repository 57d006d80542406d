#include "qcs/smooth_min.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <ceres/ceres.h>

namespace qcs {

namespace {

class Adapter final : public ceres::FirstOrderFunction {
 public:
  Adapter(const SmoothObjective& f, int dim) : f_(f), dim_(dim) {}

  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    std::span<const double> x(parameters, static_cast<std::size_t>(dim_));
    std::span<double> g;
    if (gradient != nullptr) g = std::span<double>(gradient, static_cast<std::size_t>(dim_));
    *cost = f_(x, g);
    return std::isfinite(*cost);
  }

  int NumParameters() const override { return dim_; }

 private:
  const SmoothObjective& f_;
  int dim_;
};

}  // namespace

SmoothResult minimize_smooth(const SmoothObjective& f, std::vector<double> start,
                             const SmoothOptions& options) {
  SmoothResult result;
  result.x = std::move(start);
  if (result.x.empty()) {
    result.value = f(result.x, {});
    result.converged = true;
    return result;
  }
  ceres::GradientProblem problem(new Adapter(f, static_cast<int>(result.x.size())));
  FLAGS_minloglevel = std::max(FLAGS_minloglevel, 2);
  ceres::GradientProblemSolver::Options opts;
  opts.line_search_direction_type = ceres::BFGS;
  opts.max_num_iterations = static_cast<int>(options.max_iterations);
  opts.gradient_tolerance = options.gradient_tolerance;
  opts.function_tolerance = options.function_tolerance;
  opts.parameter_tolerance = options.parameter_tolerance;
  opts.logging_type = ceres::SILENT;
  opts.minimizer_progress_to_stdout = false;
  ceres::GradientProblemSolver::Summary summary;
  ceres::Solve(opts, problem, result.x.data(), &summary);
  result.value = f(result.x, {});
  result.iterations = static_cast<std::size_t>(summary.iterations.size());
  result.converged = summary.termination_type == ceres::CONVERGENCE;
  return result;
}

std::vector<std::vector<double>> seeded_starts(std::size_t dim, std::size_t count,
                                               std::uint64_t seed, double radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-radius, radius);
  std::vector<std::vector<double>> starts(count, std::vector<double>(dim));
  for (auto& s : starts) {
    for (double& v : s) v = unif(rng);
  }
  return starts;
}

SmoothResult multi_start(const SmoothObjective& f, std::size_t dim, std::size_t starts,
                         std::uint64_t seed, double radius, const SmoothOptions& options) {
  SmoothResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (auto& s : seeded_starts(dim, std::max<std::size_t>(starts, 1), seed, radius)) {
    SmoothResult r = minimize_smooth(f, std::move(s), options);
    if (r.value < best.value) best = std::move(r);
  }
  return best;
}

}  // namespace qcs
