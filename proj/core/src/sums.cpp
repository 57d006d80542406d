#include "qcs/sums.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

#include "qcs/error.hpp"

namespace qcs {

namespace {

void require_positive(std::span<const double> values) {
  if (values.empty()) throw DomainError("mean of an empty list");
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("values must be positive and finite");
  }
}

// (sum (x/ref)^p)^{1/p} * ref with ref the dominating element, so that
// neither x^p nor the sum overflows for large |p|.
double scaled_power_sum(double p, std::span<const double> values, double divisor) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double ref = p > 0 ? *hi : *lo;
  double acc = 0.0;
  for (double v : values) acc += std::pow(v / ref, p);
  return ref * std::pow(acc / divisor, 1.0 / p);
}

}  // namespace

PowerOrder parse_power_order(std::string_view text) {
  if (text == "-inf" || text == "min") return PowerOrder::min();
  if (text == "inf" || text == "+inf" || text == "max") return PowerOrder::max();
  double p = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size() || std::isnan(p)) {
    throw ValidationError("invalid power order '" + std::string(text) + "'");
  }
  return {p};
}

double power_mean(PowerOrder p, std::span<const double> values) {
  require_positive(values);
  if (p.is_min()) return *std::min_element(values.begin(), values.end());
  if (p.is_max()) return *std::max_element(values.begin(), values.end());
  if (p.is_geometric()) {
    double s = 0.0;
    for (double v : values) s += std::log(v);
    return std::exp(s / static_cast<double>(values.size()));
  }
  return scaled_power_sum(p.p, values, static_cast<double>(values.size()));
}

double power_sum_mean(PowerOrder p, std::span<const double> values) {
  require_positive(values);
  if (p.is_min()) return *std::min_element(values.begin(), values.end());
  if (p.is_max()) return *std::max_element(values.begin(), values.end());
  if (p.is_geometric()) throw DomainError("unnormalized power sum is undefined at p = 0");
  return scaled_power_sum(p.p, values, 1.0);
}

double graphic_p_sum(const Digraph& g, std::span<const double> x, PowerOrder p) {
  if (x.size() != g.size()) throw ValidationError("vector length does not match vertex count");
  for (double v : x) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("x must be positive");
  }
  std::vector<double> window;
  double total = 0.0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto nb = g.out(v);
    if (nb.empty()) throw StructureError("vertex '" + g.id(v) + "' has no out-neighbors");
    window.clear();
    for (std::size_t w : nb) window.push_back(x[w]);
    total += x[v] / power_sum_mean(p, window);
  }
  return total;
}

Digraph circulant(std::size_t n, std::size_t k) {
  const std::vector<std::size_t> ks(n, k);
  return circulant(n, ks);
}

Digraph circulant(std::size_t n, std::span<const std::size_t> ks) {
  if (n == 0) throw ValidationError("circulant needs n >= 1");
  if (ks.size() != n) throw ValidationError("window vector length must equal n");
  for (std::size_t k : ks) {
    if (k < 1 || k > n) throw ValidationError("window length out of range [1, n]");
  }
  Digraph g(/*allow_self_loops=*/true);
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 1; s <= ks[i]; ++s) g.add_edge(i, (i + s) % n);
  }
  return g;
}

CyclicSumSpec CyclicSumSpec::uniform(std::size_t n, std::size_t k, PowerOrder p) {
  CyclicSumSpec spec{n, std::vector<std::size_t>(n, k), p};
  spec.validate();
  return spec;
}

CyclicSumSpec CyclicSumSpec::variable(std::vector<std::size_t> ks) {
  CyclicSumSpec spec{ks.size(), std::move(ks), PowerOrder{1.0}};
  spec.validate();
  return spec;
}

void CyclicSumSpec::validate() const {
  if (n == 0) throw DomainError("cyclic sum needs n >= 1");
  if (k.size() != n) throw DomainError("window vector length must equal n");
  for (std::size_t kj : k) {
    if (kj < 1 || kj > n) throw DomainError("window length out of range [1, n]");
  }
  if (std::isnan(p.p)) throw DomainError("power order is NaN");
  if (!has_uniform_window() && p.p != 1.0) {
    throw DomainError("variable window lengths require the arithmetic mean");
  }
}

bool CyclicSumSpec::has_uniform_window() const {
  return std::adjacent_find(k.begin(), k.end(), std::not_equal_to<>()) == k.end();
}

double diananda_sum(const CyclicSumSpec& spec, std::span<const double> x) {
  spec.validate();
  if (x.size() != spec.n) throw ValidationError("vector length does not match n");
  for (double v : x) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("x must be positive");
  }
  const std::size_t n = spec.n;
  std::vector<double> window;
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    window.clear();
    for (std::size_t s = 1; s <= spec.k[j]; ++s) window.push_back(x[(j + s) % n]);
    total += x[j] / power_mean(spec.p, window);
  }
  return total;
}

double window_normalization_factor(std::size_t k, PowerOrder p) {
  if (k == 0) throw DomainError("window length must be positive");
  if (p.is_min() || p.is_max()) return 1.0;
  if (p.is_geometric()) throw DomainError("no normalization factor at p = 0");
  return std::pow(static_cast<double>(k), 1.0 / p.p);
}

double permutation_quotient_sum(std::span<const double> x, std::span<const std::size_t> sigma) {
  const std::size_t n = x.size();
  if (sigma.size() != n) throw ValidationError("permutation length does not match vector length");
  std::vector<bool> hit(n, false);
  for (std::size_t s : sigma) {
    if (s >= n || hit[s]) throw ValidationError("sigma is not a permutation");
    hit[s] = true;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0)) throw DomainError("x must be positive");
    total += x[i] / x[sigma[i]];
  }
  return total;
}

}  // namespace qcs
