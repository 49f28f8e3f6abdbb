#pragma once

// Derivative-free minimization of a relation's gap over the pure-state
// manifold for fixed observables, to locate saturating states.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "revbound/inequalities.hpp"
#include "revbound/sampling.hpp"

namespace revbound {

// Objective value returned inside undefined regions (REV_DW at eigenvector
// states); finite so the simplex arithmetic stays finite.
inline constexpr double kUndefinedPenalty = 1e6;

struct SearchConfig {
  Relation relation = Relation::ReverseCovariance;
  int max_iterations = 2000;
  int restarts = 8;
  double convergence_tol = 1e-9;  // simplex diameter
  std::uint64_t seed = 0;
  bool record_trace = false;
};

struct SearchResult {
  State best_state;
  double best_gap = 0.0;
  long evaluations = 0;
  bool converged = false;
  std::vector<std::pair<int, double>> trace;  // (iteration, best gap so far)
};

// Smooth surjection from 2*dim-2 reals onto pure states modulo global phase:
// hyperspherical half-angles for magnitudes, then dim-1 relative phases.
// The d=2 case coincides with bloch_state(params[0], params[1]).
State parameterize_state(std::span<const double> params);

// Inverse up to global phase (used to start searches from Haar states).
std::vector<double> state_parameters(const State& state);

// rhs - lhs of an upper-bound relation at parameterize_state(params);
// kUndefinedPenalty inside undefined regions. Throws for non-upper-bound
// relations.
double gap_objective(Relation relation, const Observable& a, const Observable& b,
                     std::span<const double> params, const Tolerances& tol = {});

// Nelder-Mead simplex descent (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5) with `restarts` independent starts from Haar-sampled states.
// Deterministic for identical config; ties across restarts resolve to the
// lowest restart index.
SearchResult minimize_gap(const Observable& a, const Observable& b, const SearchConfig& config,
                          const Tolerances& tol = {});

}  // namespace revbound
