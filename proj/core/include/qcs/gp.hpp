#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcs/digraph.hpp"

namespace qcs {

// Fixes one vertex to a positive value. Quotient sums are homogeneous of
// order zero, so the pin selects the normalization of the minimizer.
struct Pin {
  std::size_t vertex = 0;
  double value = 1.0;
};

// Objective sum_u w_u y_{from(u)} / y_{to(u)} over the weighted edges.
struct QuotientSumSpec {
  WeightedDigraph graph;
  std::optional<Pin> pin;
};

QuotientSumSpec build_quotient_sum(WeightedDigraph g, std::optional<Pin> pin = std::nullopt);

double evaluate(const QuotientSumSpec& spec, std::span<const double> y);

// Value and gradient of t -> sum_u w_u exp(t_from - t_to).
double log_objective(const QuotientSumSpec& spec, std::span<const double> t);
std::vector<double> log_gradient(const QuotientSumSpec& spec, std::span<const double> t);

enum class SolveStatus { converged, recession_detected, iteration_limit };

const char* to_string(SolveStatus s);

struct OptReport {
  double value = 0.0;
  // Normalized: pinned vertex at its value, else the first vertex equals 1.
  // Under recession each strong component carries its own attained minimizer,
  // normalized so that its first vertex equals 1.
  std::vector<double> minimizer;
  bool attained = false;
  SolveStatus status = SolveStatus::converged;
  // Log-space direction d with f(t + s d) decreasing to the infimum as s grows.
  // Empty when the minimum is attained.
  std::vector<double> recession_direction;
  std::size_t iterations = 0;
  double gradient_norm = 0.0;
};

struct GpOptions {
  // Stop when max |grad| <= tolerance * max(1, f).
  double tolerance = 1e-10;
  std::size_t max_iterations = 500;
  // Starting log-coordinates; empty means all zeros.
  std::vector<double> initial_log;
};

// Damped Newton in log coordinates. Strongly connected support: unique
// attained minimum. Otherwise the infimum is the sum over strong components of
// their attained internal minima; edges between components contribute 0.
OptReport minimize(const QuotientSumSpec& spec, const GpOptions& options = {});

struct Attainment {
  bool attained = false;
  std::vector<double> direction;  // recession direction in log coordinates
};

// Attained iff the support digraph is strongly connected. The direction
// assigns each vertex the topological rank of its component, so every edge
// that crosses components has a negative exponent along it.
Attainment attainment_check(const QuotientSumSpec& spec);

struct UniquenessReport {
  bool unique = false;
  double max_discrepancy = 0.0;
};

// Minimizes from `trials` seeded random starts (uniform in [-1, 1] per log
// coordinate) and compares the normalized minimizers.
UniquenessReport verify_uniqueness(const QuotientSumSpec& spec, std::size_t trials,
                                   std::uint64_t seed, double tolerance = 1e-6);

// True iff the minimizer satisfies y_v = y_{perm[v]} within `tolerance`.
// Throws PreconditionError when perm is not an automorphism or the minimum is
// not attained.
bool verify_symmetry(const QuotientSumSpec& spec, std::span<const std::size_t> perm,
                     double tolerance = 1e-6);

// One element of a cycle basis of the underlying undirected graph, as the
// multiplicative constraint prod_u z_u^{sign_u} = 1 on edge ratios
// z_u = y_from / y_to. Sign is +1 for edges traversed forward.
struct CycleConstraint {
  std::vector<std::size_t> edges;
  std::vector<int> signs;
};

// Fundamental cycles of a BFS spanning forest rooted at the lowest index of
// each connected part; |E| - |V| + (number of connected parts) constraints.
std::vector<CycleConstraint> cycle_constraints(const QuotientSumSpec& spec);

// |sum_u sign_u log z_u| at y.
double constraint_residual(const QuotientSumSpec& spec, const CycleConstraint& c,
                           std::span<const double> y);

}  // namespace qcs
