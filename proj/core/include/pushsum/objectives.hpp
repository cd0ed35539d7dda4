#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pushsum {

/**
 * One agent's private convex cost with a subgradient oracle. At kinks
 * the oracle returns a fixed canonical subgradient (documented per
 * family) so runs are bit-replayable. `bound_G` is a global 2-norm
 * bound on the oracle's output when one exists; families without one
 * (e.g. quadratics) leave it empty, which disables rate-bound checks.
 */
struct ConvexComponent {
  int d = 0;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> subgradient;
  std::optional<double> bound_G;
};

/// f(z) = ||z - anchor||_1. Subgradient is sign(z_k - anchor_k) per
/// coordinate with sign(0) := 0; bound_G = sqrt(d).
ConvexComponent anchored_l1(const Eigen::VectorXd& anchor);

/// f(z) = max_k (slopes[k] . z + intercepts[k]). The subgradient is the
/// slope of the lowest maximizing index (deterministic tie-break);
/// bound_G = max_k ||slopes[k]||_2.
ConvexComponent max_affine(std::vector<Eigen::VectorXd> slopes, std::vector<double> intercepts);

/// f(z) = (scale / 2) ||z - center||^2 with gradient scale * (z - center).
/// No global subgradient bound, so sets containing it run without
/// rate-bound verification.
ConvexComponent quadratic(const Eigen::VectorXd& center, double scale);

/**
 * The n private components of the global cost f = (1/n) sum_i f_i, all
 * of the same dimension, plus an optional externally known optimum.
 */
struct ObjectiveSet {
  std::vector<ConvexComponent> components;
  std::optional<Eigen::VectorXd> optimum_point_hint;
  std::optional<double> optimum_value_hint;

  int n() const { return static_cast<int>(components.size()); }
  int d() const { return components.empty() ? 0 : components.front().d; }

  /// Max of the component bounds; empty if any component is unbounded.
  std::optional<double> bound_G() const;
};

/// f(z) = (1/n) sum_i f_i(z).
double evaluate_global(const ObjectiveSet& obj, const Eigen::VectorXd& z);

struct OptimumEstimate {
  Eigen::VectorXd z;
  double value = 0.0;
};

/**
 * Grid search for the global minimum over the box [lo, hi]: one coarse
 * pass with `coarse_points` per axis, then two x10 refinement passes
 * around the incumbent. Test oracle only (d <= 3); never used by the
 * iteration itself. Throws std::invalid_argument on a degenerate box
 * (lo >= hi in some coordinate) or d > 3.
 */
OptimumEstimate brute_force_optimum(const ObjectiveSet& obj, const Eigen::VectorXd& lo,
                                    const Eigen::VectorXd& hi, int coarse_points = 101);

struct OptimumValue {
  double value = 0.0;
  Eigen::VectorXd z;
  std::string source; // "hint" or "grid-oracle"
};

/// Optimum hint when present, else the grid oracle over the given box.
/// Throws std::invalid_argument when neither is available.
OptimumValue resolve_f_star(const ObjectiveSet& obj, const std::optional<Eigen::VectorXd>& box_lo,
                            const std::optional<Eigen::VectorXd>& box_hi, int coarse_points = 101);

} // namespace pushsum
