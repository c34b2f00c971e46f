#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

/// Default truncation order for expansions.
inline constexpr std::size_t kDefaultOrder = 256;
/// Slack allowed on |c_n| <= 1 when certifying (floating-point noise).
inline constexpr double kCoefficientSlack = 1e-12;
/// Slack allowed on sum |c_n|^2 <= 1 when certifying.
inline constexpr double kParsevalSlack = 1e-10;
/// Smallest |den_0| accepted by series_div.
inline constexpr double kDivisionThreshold = 1e-12;
/// Largest |c_0| that shift_down treats as zero.
inline constexpr double kZeroConstantTolerance = 1e-12;

/// Closed interval [lower, upper] certified to contain an exact value.
struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;

  Enclosure() = default;
  Enclosure(double lo, double hi);

  static Enclosure exact(double x) { return {x, x}; }

  double width() const { return upper - lower; }
  bool contains(double x) const { return lower <= x && x <= upper; }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return {a.lower + b.lower, a.upper + b.upper};
  }
  friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

/// Scales an enclosure by a nonnegative factor.
Enclosure scale(const Enclosure& e, double factor);

/// Truncated Taylor series c_0 + c_1 z + ... + c_N z^N.
///
/// Two independent certificates travel with the coefficients:
///  - schwarz_certified: the series comes from a function bounded by 1 on the
///    disk (checked necessary conditions: |c_n| <= 1 and sum |c_n|^2 <= 1);
///  - unit_bounded: every omitted coefficient has modulus <= 1, which is all
///    the tail bounds need. Certified series are always unit bounded.
class CoeffSeries {
 public:
  /// Uncertified series, no tail information.
  explicit CoeffSeries(std::vector<Complex> coeffs);

  /// Checks the necessary Schur-class conditions and certifies; throws
  /// CertificationError when they fail.
  static CoeffSeries certify(std::vector<Complex> coeffs);

  static CoeffSeries zero(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }
  /// Coefficient n, or 0 past the truncation order.
  Complex at(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }

  bool schwarz_certified() const { return certified_; }
  bool unit_bounded() const { return unit_bounded_; }

  /// Re-runs certification on a copy.
  CoeffSeries certified() const { return certify(coeffs_); }

  /// Copy truncated (or zero-padded, uncertified) to a new order.
  CoeffSeries truncated(std::size_t order) const;

  /// Copy with every coefficient multiplied by a unimodular factor.
  CoeffSeries rotated(Complex unit) const;

  friend bool operator==(const CoeffSeries&, const CoeffSeries&) = default;

 private:
  CoeffSeries(std::vector<Complex> coeffs, bool certified, bool unit_bounded);

  std::vector<Complex> coeffs_;
  bool certified_ = false;
  bool unit_bounded_ = false;

  friend CoeffSeries drop_constant(const CoeffSeries& f);
  friend CoeffSeries shift_down(const CoeffSeries& f);
  friend CoeffSeries multiply_by_z(const CoeffSeries& f);
};

/// Cauchy product truncated to min(order(a), order(b)). Not certified.
CoeffSeries series_mul(const CoeffSeries& a, const CoeffSeries& b);

/// Long division num/den truncated to min of the orders. Not certified.
/// Throws NearZeroConstantTerm if |den_0| < threshold.
CoeffSeries series_div(const CoeffSeries& num, const CoeffSeries& den,
                       double threshold = kDivisionThreshold);

/// sum_{n >= first} |c_n| r^n. The upper end adds r^{N+1}/(1-r).
Enclosure majorant(const CoeffSeries& f, double r, std::size_t first = 0);

/// sum_{n >= first} |c_n|^2 r^{2n}. The upper end adds r^{2(N+1)}/(1-r^2).
Enclosure norm_sq(const CoeffSeries& f, double r, std::size_t first = 0);

/// f - f(0). Keeps the unit coefficient bound but drops certification.
CoeffSeries drop_constant(const CoeffSeries& f);

/// g with f = z g; requires c_0 = 0. Certification is inherited (Schwarz lemma).
CoeffSeries shift_down(const CoeffSeries& f);

/// z f, order N+1. Certification is inherited.
CoeffSeries multiply_by_z(const CoeffSeries& f);

}  // namespace bohr
