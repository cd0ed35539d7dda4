#pragma once

#include <cstdint>
#include <map>

#include <Eigen/Dense>

#include "pushsum/digraph.hpp"
#include "pushsum/schedule.hpp"

namespace pushsum {

/**
 * Per-step mixing matrix. Entry (i, j) is the weight w_ij applied by
 * receiver i to sender j's message, so column j describes how sender j
 * splits its mass across its out-neighbors and every column sums to
 * one. `beta` is the guaranteed lower bound on supported entries.
 *
 * The struct itself is a plain carrier; `validate_weights` checks the
 * contract, which lets tests construct deliberately broken matrices.
 */
struct ColumnStochasticMatrix {
  Eigen::MatrixXd entries;
  double beta = 0.0;

  int n() const { return static_cast<int>(entries.rows()); }
};

/// Tolerance for column/row sums of stochastic matrices.
inline constexpr double kStochasticTol = 1e-12;

/// Sender j splits its mass evenly over its out-neighbors:
/// w_ij = 1 / outdeg(j) on every arc (j, i), zero elsewhere. Always
/// valid with beta = 1/n since self-loops keep out-degrees positive.
ColumnStochasticMatrix build_out_degree_weights(const Digraph& g);

/**
 * True iff the support of W matches the arcs of g exactly, every
 * supported entry is >= beta, and every column sums to one within
 * 1e-12. Throws std::invalid_argument on a dimension mismatch.
 */
bool validate_weights(const ColumnStochasticMatrix& W, const Digraph& g, double beta);

/// True iff, in addition to being column-stochastic, every row of W
/// sums to one within 1e-12.
bool is_doubly_stochastic(const ColumnStochasticMatrix& W);

/**
 * Supplies W(t) for each step: either the out-degree rule applied to
 * the step's graph, or user-provided dense matrices keyed by step
 * (looked up modulo the schedule period when one is set). Throws
 * std::invalid_argument when a custom matrix is missing for a step.
 */
struct WeightProvider {
  enum class Kind { OutDegree, Custom };

  Kind kind = Kind::OutDegree;
  std::map<std::int64_t, ColumnStochasticMatrix> custom;

  ColumnStochasticMatrix at(const GraphSchedule& schedule, std::int64_t t) const;

  static WeightProvider out_degree();
  static WeightProvider custom_matrices(std::map<std::int64_t, ColumnStochasticMatrix> by_step);
};

} // namespace pushsum
