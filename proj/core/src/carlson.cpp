#include "bohr/carlson.hpp"

#include <cmath>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

double energy(const CoeffSeries& f, std::size_t count) {
  double s = 0.0;
  for (std::size_t k = 0; k < count; ++k) s += std::norm(f[k]);
  return s;
}

CarlsonSlack make(std::size_t index, double bound, double observed) {
  return {index, bound, observed, bound - observed};
}

void check_order(std::size_t order, std::size_t prefix_len) {
  if (order < 2 * prefix_len) {
    throw IndexOutOfRange("equality check needs order >= " + std::to_string(2 * prefix_len));
  }
}

CarlsonSlack confirm(CarlsonSlack s) {
  if (std::abs(s.slack) > kEqualityTolerance) {
    throw EqualityNotAttained("slack " + std::to_string(s.slack) + " at index " + std::to_string(s.index));
  }
  return s;
}

}  // namespace

CarlsonSlack odd_slack(const CoeffSeries& f, std::size_t n) {
  const std::size_t index = 2 * n + 1;
  if (index > f.order()) {
    throw IndexOutOfRange("odd bound index " + std::to_string(index) + " exceeds order " + std::to_string(f.order()));
  }
  return make(index, 1.0 - energy(f, n + 1), std::abs(f[index]));
}

CarlsonSlack even_slack(const CoeffSeries& f, std::size_t n) {
  const std::size_t index = 2 * n;
  if (n == 0 || index > f.order()) {
    throw IndexOutOfRange("even bound needs 1 <= n and 2n <= order, got n = " + std::to_string(n));
  }
  const double bound = 1.0 - energy(f, n) - std::norm(f[n]) / (1.0 + std::abs(f[0]));
  return make(index, bound, std::abs(f[index]));
}

CarlsonSlack verify_equality_case(const CarlsonOddEq& spec, std::size_t order) {
  check_order(order, spec.prefix.size());
  return confirm(odd_slack(expand(spec, order), spec.prefix.size() - 1));
}

CarlsonSlack verify_equality_case(const CarlsonEvenEq& spec, std::size_t order) {
  check_order(order, spec.prefix.size());
  return confirm(even_slack(expand(spec, order), spec.prefix.size() - 1));
}

}  // namespace bohr
