#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "qcs/digraph.hpp"

namespace qcs {

// Order p of a power mean, p in R u {-inf, +inf}. The values -inf, 0 and +inf
// select the minimum, the geometric mean and the maximum.
struct PowerOrder {
  double p = 1.0;

  static constexpr PowerOrder min() { return {-std::numeric_limits<double>::infinity()}; }
  static constexpr PowerOrder geometric() { return {0.0}; }
  static constexpr PowerOrder max() { return {std::numeric_limits<double>::infinity()}; }

  bool is_min() const noexcept { return p == -std::numeric_limits<double>::infinity(); }
  bool is_max() const noexcept { return p == std::numeric_limits<double>::infinity(); }
  bool is_geometric() const noexcept { return p == 0.0; }
};

// Accepts "-inf", "inf", "+inf", "min", "max" and decimal numbers.
PowerOrder parse_power_order(std::string_view text);

// Normalized mean [(sum x^p)/k]^{1/p}; geometric mean at p = 0, min/max at
// p = -inf/+inf. Large |p| is evaluated relative to the extreme element.
double power_mean(PowerOrder p, std::span<const double> values);

// Unnormalized (sum x^p)^{1/p}, the denominator of a graphic p-sum; min/max at
// p = -inf/+inf. p = 0 has no finite meaning here and throws DomainError.
double power_sum_mean(PowerOrder p, std::span<const double> values);

// sum_v x_v / M_p(x | out(v)) with the unnormalized denominator.
double graphic_p_sum(const Digraph& g, std::span<const double> x, PowerOrder p);
inline double min_sum(const Digraph& g, std::span<const double> x) {
  return graphic_p_sum(g, x, PowerOrder::min());
}
inline double max_sum(const Digraph& g, std::span<const double> x) {
  return graphic_p_sum(g, x, PowerOrder::max());
}

// Digraph on "1".."n" with edges i -> i+1, ..., i+k_i (indices mod n). A window
// of length n wraps onto i itself and yields a self-loop.
Digraph circulant(std::size_t n, std::size_t k);
Digraph circulant(std::size_t n, std::span<const std::size_t> ks);

// Cyclic sum with n terms and window lengths k_j. The variable-window form
// always uses the arithmetic mean.
struct CyclicSumSpec {
  std::size_t n = 0;
  std::vector<std::size_t> k;  // one window length per term
  PowerOrder p;

  static CyclicSumSpec uniform(std::size_t n, std::size_t k, PowerOrder p);
  static CyclicSumSpec variable(std::vector<std::size_t> ks);

  void validate() const;
  bool has_uniform_window() const;
};

// sum_j x_j / M_{k_j,p}(x_{j+1}, ..., x_{j+k_j}) with the normalized mean.
double diananda_sum(const CyclicSumSpec& spec, std::span<const double> x);

// For a window of k elements, normalized and unnormalized means differ by the
// factor k^{1/p}: M_{k,p} = power_sum_mean / k^{1/p}. Hence on circulant(n, k)
// diananda_sum = window_normalization_factor(k, p) * graphic_p_sum.
double window_normalization_factor(std::size_t k, PowerOrder p);

// sum_i x_i / x_{sigma(i)} for a permutation sigma of 0..n-1.
double permutation_quotient_sum(std::span<const double> x, std::span<const std::size_t> sigma);

}  // namespace qcs
