#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"
#include "bohr/functions.hpp"

namespace bohr {

struct RadiusResult {
  FunctionalId id{};
  std::string family;
  /// Family parameter (a) for curve rows; NaN for family-wide results.
  double parameter = std::numeric_limits<double>::quiet_NaN();
  double empirical = 0.0;
  double closed_form = 0.0;
  double discrepancy = 0.0;
  int iterations = 0;
  double tol = 0.0;
  /// Largest truncation order used after escalation.
  std::size_t order = 0;
};

struct BisectOptions {
  double tol = 1e-6;
  int max_iterations = 60;
  std::size_t order = kDefaultOrder;
  /// Ceiling for order doubling when an enclosure straddles 1.
  std::size_t max_order = 4096;
  int audit_points = 20;
};

struct BisectionOutcome {
  double root = 0.0;  ///< last point with g <= 0
  double upper = 0.0; ///< first point known to have g > 0
  int iterations = 0;
};

/// Bisection for a nondecreasing g on [lo, hi] with g(lo) <= 0 < g(hi).
/// Before bisecting, g is sampled at audit_points evenly spaced points and
/// must be nondecreasing within 1e-12, else NonMonotone.
/// Throws NoBracket or MaxIterations.
BisectionOutcome bisect_monotone(const std::function<double(double)>& g, double lo, double hi, double tol,
                                 int max_iterations = 60, int audit_points = 20);

/// Largest rigorous level (1 - margin) over the family at r.
double family_sup(FunctionalId id, std::span<const BoundedFunctionSpec> specs, double r,
                  std::size_t order = kDefaultOrder);

/// Largest r in [0, 0.95] with family_sup(r) <= 1, to within tol. The closed
/// form is the smallest per-function radius over the family.
/// Throws NoBracket, NonMonotone (audit of 20 sampled points) or MaxIterations.
RadiusResult bisect_radius(FunctionalId id, std::span<const BoundedFunctionSpec> specs,
                           const BisectOptions& options = {}, std::string family = {});

/// One bisection per parameter: ShiftedMobius{a} for T3C, Mobius{a} for T2A.
/// Runs the parameters concurrently; output order follows a_grid.
std::vector<RadiusResult> radius_curve(std::span<const double> a_grid, const BisectOptions& options = {},
                                       FunctionalId id = FunctionalId::T3C);

/// Iteration cap implied by halving [0, 0.95] down to tol.
int bisection_iterations(double tol);

}  // namespace bohr
