#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qcs/digraph.hpp"
#include "qcs/gp.hpp"

namespace qcs {

inline constexpr std::size_t kMaxPartitionVertices = 8;

// Preferential arrangement: ordered blocks of vertices, lower rank = smaller
// value. nu[v] is the lowest rank among the blocks of v's out-neighbors.
struct OrderedPartition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;
  std::vector<std::size_t> nu;
};

// Calls `visit` on every ordered set partition of {0..n-1} exactly once
// (block_of and blocks filled, nu left empty) and returns the count, the
// Fubini number of n. Throws CapacityError when n exceeds `cap`.
std::size_t for_each_ordered_partition(std::size_t n,
                                       const std::function<void(const OrderedPartition&)>& visit,
                                       std::size_t cap = kMaxPartitionVertices);
std::vector<OrderedPartition> enumerate_ordered_partitions(std::size_t n,
                                                           std::size_t cap = kMaxPartitionVertices);

// Fills nu for graph g. Throws StructureError on an empty out-neighborhood.
void assign_nu(const Digraph& g, OrderedPartition& part);

// Each vertex v contributes y_{block_of(v)} / y_{nu(v)}; equal indices add 1
// to the offset. Vertices with the same (block, nu) pair are merged into one
// weighted edge on the block digraph (vertex ids "B0", "B1", ...).
struct BlockReduction {
  QuotientSumSpec spec;
  double offset = 0.0;
};
BlockReduction block_reduction(const Digraph& g, const OrderedPartition& part);

struct MinSumCertificate {
  OrderedPartition partition;
  std::vector<double> block_values;  // strictly increasing with rank, lowest = 1
  double value = 0.0;

  // x_v = block_values[block_of(v)].
  std::vector<double> induced_x() const;
};

struct MinSumOptions {
  std::size_t cap = kMaxPartitionVertices;
  double order_tolerance = 1e-9;  // require y_{r+1} / y_r >= 1 + order_tolerance
  std::size_t threads = 1;
};

struct MinSumResult {
  OptReport report;  // minimizer = certificate.induced_x()
  std::optional<MinSumCertificate> certificate;
  std::size_t candidates = 0;  // ordered partitions examined
  std::size_t accepted = 0;    // attained and order-consistent
  // Set when g is strongly connected yet no candidate was accepted.
  bool inconsistent = false;
};

// Global minimum of the graphic min-sum: every ordered partition is reduced to
// a quotient sum over blocks; a candidate is accepted when its reduced problem
// has an attained minimum whose block values respect the rank order. The least
// accepted value wins, ties going to the lexicographically smallest block_of.
MinSumResult minsum_exact(const Digraph& g, const MinSumOptions& options = {});

struct OracleOptions {
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
};

// Upper bound on min S_min(x|g): multi-start pattern search in log coordinates
// on smoothed surrogates, then on the exact nonsmooth objective.
double minsum_oracle(const Digraph& g, const OracleOptions& options = {});

// min over k in [1, n-2] of (k+1) (n-k)^{1/(k+1)}.
struct ExtremalValue {
  double value = 0.0;
  std::size_t k = 0;
};
ExtremalValue extremal_minsum_value(std::size_t n);

// e * ln(n + 1 - ln(n + 1)).
double extremal_lower_bound(std::size_t n);

// min over 0 < x <= r-1 of (ln x + ln(r-x)/x), minus ln ln(r - ln r).
struct KsGap {
  double gap = 0.0;
  double argmin = 0.0;
  double minimum = 0.0;
};
KsGap ks_gap(double r);

}  // namespace qcs
