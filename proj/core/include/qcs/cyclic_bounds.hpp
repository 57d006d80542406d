#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcs/digraph.hpp"
#include "qcs/gp.hpp"
#include "qcs/sums.hpp"

namespace qcs {

// How much a reported A_{n,k,p} value is worth.
enum class BoundKind {
  exact,        // proven value, attained at the reported point
  formula,      // proven closed form; infimum, possibly not attained
  upper_bound,  // best local minimum found numerically
};

const char* to_string(BoundKind k);

struct DianandaOptions {
  std::size_t starts = 64;
  std::uint64_t seed = 0;
};

struct DianandaReport {
  OptReport report;
  BoundKind kind = BoundKind::upper_bound;
  std::string citation;
};

// A_{n,k,p} = inf_x S_{n,k,p}(x). p <= 0: exactly n at x = 1. p = +inf:
// floor((n+k-1)/k). Otherwise multi-start BFGS in log coordinates; the result
// is an upper bound only.
DianandaReport minimize_diananda(std::size_t n, std::size_t k, PowerOrder p,
                                 const DianandaOptions& options = {});

// S_{n,k,p}(exp(t)) and its gradient in t, for finite p (p = 0 allowed).
double diananda_log_objective(std::size_t n, std::size_t k, double p, std::span<const double> t,
                              std::span<double> grad);

// Numeric search for A_{n,k,+inf} by continuation through finite p
// (2, 4, ..., 64): each stage starts from the previous minimizer. The
// max-sum S_{n,k,+inf} is evaluated exactly at the final point.
struct ContinuationResult {
  double value = 0.0;            // S_{n,k,+inf} at x
  double surrogate_value = 0.0;  // S_{n,k,64} at x
  std::vector<double> x;
};
ContinuationResult diananda_max_continuation(std::size_t n, std::size_t k,
                                             const DianandaOptions& options = {});

// k (2^{1/k} - 1): lower bound on A_{n,k}/n.
double diananda_lb(std::size_t k);

// k^{-1/q^2} / (k-1) * U_{1/p}(k) * U_{1/q}(k), U_t(k) = (k^t - 1)^t t^{-t},
// 1/p + 1/q = 1. Decreases from 1 to 1/k as p runs over (1, inf).
double bkp_factor(std::size_t k, double p);

// Lower bound on B_{k,p} for p > 1 given a valid lower bound on B_{k,1}.
double bkp_lower_bound(std::size_t k, double p, double bk1_lower);

// a/(b+cx) + b/(c+ax) + c/(a+bx).
double mavlo_lhs(double a, double b, double c, double x);

struct MavloBounds {
  double original = 0.0;  // 3x / (1 + x^3)
  double sharp = 0.0;     // 3 / (1 + x)
};
MavloBounds mavlo_bounds(double x);

// Relative residual of (1+x^3) L = (B/A) x^2 + A/B + (C/B) x^2 + B/C + (A/C) x^2
// + C/A - 3x, with A = b+cx, B = c+ax, C = a+bx.
double georgiev_identity_residual(double a, double b, double c, double x);

// 1/(u(1+v)) + 1/(v(1+w)) + 1/(w(1+u)).
double mavlo_uvw_lhs(double u, double v, double w);

struct MavloTuple {
  double a, b, c, x;
};
// x = (uvw)^{1/3}, a = 1, and b, c chosen so that u = xb/a, v = xc/b, w = xa/c.
// Then mavlo_lhs(a, b, c, x) = x * mavlo_uvw_lhs(u, v, w).
MavloTuple mavlo_substitution(double u, double v, double w);

// Complete digraph on A, B, C with weight x^2 on B->A, C->B, A->C and 1 on
// A->B, B->C, C->A. Its quotient-sum minimum is 3(x^2 + 1).
WeightedDigraph mavlo_graph(double x);

}  // namespace qcs
