#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qcs/digraph.hpp"
#include "qcs/gp.hpp"

namespace qcs {

inline constexpr double kFuncEqMaxX = 1e5;

struct FuncEqOptions {
  std::size_t unit_points = 1024;   // uniform grid on [0, 1]
  std::size_t per_decade = 4096;    // log-spaced grid above 1
  std::size_t max_doublings = 3;    // refinement passes before giving up
};

// Tabulated solution of F(x) = min_{0<y<x-1} (F(y) + x/(y+1)), F = x on [0, 1].
class FuncEqTable {
 public:
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double x_max() const noexcept { return grid_.back(); }
  double tolerance() const noexcept { return tolerance_; }
  std::size_t per_decade() const noexcept { return per_decade_; }
  // Largest change at shared grid points between the last two refinements.
  double refinement_change() const noexcept { return refinement_change_; }

  // F(x): exact on [0, 1]; above 1 one DP step against the table, refined by
  // golden section. Throws DomainError outside [0, x_max].
  double operator()(double x) const;
  // Argmin y of the DP step at x (0 for x <= 1).
  double argmin(double x) const;
  // Piecewise-linear interpolation of the stored values.
  double interpolate(double x) const;

  // "x,F" header, then one row per grid point, 17 significant digits.
  void write_csv(std::ostream& out) const;

 private:
  friend FuncEqTable build_F_table(double, double, const FuncEqOptions&);
  std::vector<double> grid_;
  std::vector<double> values_;
  double tolerance_ = 0.0;
  std::size_t per_decade_ = 0;
  double refinement_change_ = 0.0;
};

// Builds the table up to x_max (<= 1e5, else CapacityError), doubling the log
// density until two successive tables agree within tol at shared points.
FuncEqTable build_F_table(double x_max, double tol, const FuncEqOptions& options = {});

struct StaircaseResult {
  std::size_t n = 1;
  double value = 0.0;
  std::vector<double> chain;  // t_1 .. t_{n-1}
  bool boundary = false;      // t_1 = 0, i.e. the infimum reduces to F_{n-1}
};

// F_n(x) = inf over t >= 0 of t_1 + t_2/(t_1+1) + ... + x/(t_{n-1}+1).
// Interior critical chains satisfy t_{j+1} = (t_j + 1)^2 / (t_{j-1} + 1) with
// t_0 = 0 and t_n = x; every root t_1 of t_n(t_1) = x is bracketed on a grid
// and bisected. Boundary chains reduce to F_{n-1}. The value is the sum
// evaluated at the returned chain.
StaircaseResult staircase_min(double x, std::size_t n);

// Sum t_1 + t_2/(t_1+1) + ... + x/(t_{n-1}+1) at a given chain.
double staircase_sum(double x, std::span<const double> chain);

// inf_n F_n(x): the best interior chain over n <= ceil(2 ln(x+1)) + 3.
StaircaseResult staircase_F(double x);

double distance_to_nearest_integer(double y);

struct AsymptoticResidual {
  double corrected = 0.0;    // F - (e ln x - A + e ||b + ln x||^2 / (2 ln x))
  double uncorrected = 0.0;  // F - (e ln x - A)
};

// Requires x > e^2.
AsymptoticResidual F_residual(double x, const FuncEqTable& table);

struct AmgmResult {
  double value = 0.0;
  std::size_t n = 1;
};

// f(x) = min over integers n of n x^{1/n}, scanning n in [1, ceil(3 ln x) + 2].
AmgmResult amgm_f(double x);
// Same with L = ln x as input (x >= 1), for arguments beyond double range.
AmgmResult amgm_f_log(double log_x);
// f(x) - e ln x - e ||ln x||^2 / (2 ln x); needs ln x > 0.
double amgm_residual_log(double log_x);

// Vertices "0".."n"; edges j->0, 0->j for j = 1..n and j->j+1 for j < n.
WeightedDigraph shallit_graph(std::size_t n);

// g_n(x) = sum (x_j + 1/x_j) + sum_{j<n} x_j / x_{j+1}.
double shallit_g(std::span<const double> x);

struct ShallitResult {
  OptReport report;  // minimizer over vertices 0..n with y_0 = 1
  double c_n = 0.0;  // 3n - min g_n
};
ShallitResult shallit_min(std::size_t n);

// A_{n,*} = F(n).
double a_n_star(std::size_t n, const FuncEqTable& table);

struct BruteForceResult {
  double value = 0.0;
  std::vector<std::size_t> windows;  // minimizing window vector
  std::vector<double> x;
};

// Minimum over all n^n window vectors of the numerically minimized
// variable-window sum (16 seeded starts each). n <= 5.
BruteForceResult a_n_star_bruteforce(std::size_t n, std::uint64_t seed = 0);

// Variable-window sum at x = exp(t) and its gradient in t.
double variable_window_log_objective(std::span<const std::size_t> windows,
                                     std::span<const double> t, std::span<double> grad);

}  // namespace qcs
