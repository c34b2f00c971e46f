#pragma once

#include <cstddef>

#include "bohr/functions.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// Slack below which a coefficient bound counts as violated.
inline constexpr double kSlackTolerance = 1e-10;
/// Largest |slack| accepted as equality for the rational extremals.
inline constexpr double kEqualityTolerance = 1e-9;

/// One Carlson coefficient bound evaluated on a series.
/// Odd indices use |a_{2n+1}| <= 1 - sum_{k<=n} |a_k|^2,
/// even indices |a_{2n}| <= 1 - sum_{k<n} |a_k|^2 - |a_n|^2 / (1 + |a_0|).
struct CarlsonSlack {
  std::size_t index = 0;
  double bound = 0.0;
  double observed = 0.0;
  double slack = 0.0;

  bool odd() const { return index % 2 == 1; }
  bool holds(double tol = kSlackTolerance) const { return slack >= -tol; }
};

/// Bound at index 2n+1; needs 2n+1 <= order(f).
CarlsonSlack odd_slack(const CoeffSeries& f, std::size_t n);

/// Bound at index 2n; needs n >= 1 and 2n <= order(f).
CarlsonSlack even_slack(const CoeffSeries& f, std::size_t n);

/// Expands the rational extremal and returns the slack at its target index.
/// Throws EqualityNotAttained when |slack| > kEqualityTolerance.
CarlsonSlack verify_equality_case(const CarlsonOddEq& spec, std::size_t order);
CarlsonSlack verify_equality_case(const CarlsonEvenEq& spec, std::size_t order);

}  // namespace bohr
