#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

void check_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("radius must lie in [0, 1), got " + std::to_string(r));
  }
}

void check_tail(const CoeffSeries& f) {
  if (!f.unit_bounded()) {
    throw UncertifiedTail("tail bound needs a series with |c_n| <= 1 beyond the truncation order");
  }
}

// Coefficients below this are treated as zero by the kernels. Decaying
// expansions reach the subnormal range past N ~ 1000, where every multiply
// is two orders of magnitude slower; the dropped mass is far below rounding.
constexpr double kNegligible = 1e-290;

bool negligible(Complex c) { return std::max(std::abs(c.real()), std::abs(c.imag())) < kNegligible; }

// Indices of the non-negligible entries; the products below skip structural
// zeros so sparse factors (Mobius numerators, monomials) cost O(N) instead of O(N^2).
std::vector<std::size_t> support(std::span<const Complex> c) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!negligible(c[i])) idx.push_back(i);
  }
  return idx;
}

// Plain component product; std::complex's operator* routes through the
// Annex G inf/nan recovery, which dominates these loops. Inputs are finite.
inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

void flush_negligible(std::vector<Complex>& c) {
  for (auto& x : c) {
    if (negligible(x)) x = Complex{};
  }
}

}  // namespace

Enclosure::Enclosure(double lo, double hi) : lower(lo), upper(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw DomainError("invalid enclosure [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Enclosure scale(const Enclosure& e, double factor) {
  if (!(factor >= 0.0)) throw DomainError("enclosure scale factor must be nonnegative");
  return {e.lower * factor, e.upper * factor};
}

CoeffSeries::CoeffSeries(std::vector<Complex> coeffs) : CoeffSeries(std::move(coeffs), false, false) {}

CoeffSeries::CoeffSeries(std::vector<Complex> coeffs, bool certified, bool unit_bounded)
    : coeffs_(std::move(coeffs)), certified_(certified), unit_bounded_(unit_bounded) {
  if (coeffs_.empty()) throw DomainError("a series needs at least the constant coefficient");
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("series coefficients must be finite");
    }
  }
}

CoeffSeries CoeffSeries::certify(std::vector<Complex> coeffs) {
  double energy = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const double m = std::abs(coeffs[n]);
    if (!(m <= 1.0 + kCoefficientSlack)) {
      throw CertificationError("|c_" + std::to_string(n) + "| = " + std::to_string(m) + " exceeds 1");
    }
    energy += m * m;
  }
  if (!(energy <= 1.0 + kParsevalSlack)) {
    throw CertificationError("sum of |c_n|^2 = " + std::to_string(energy) + " exceeds 1");
  }
  return CoeffSeries(std::move(coeffs), true, true);
}

CoeffSeries CoeffSeries::zero(std::size_t order) {
  return CoeffSeries(std::vector<Complex>(order + 1), true, true);
}

CoeffSeries CoeffSeries::truncated(std::size_t order) const {
  std::vector<Complex> c(order + 1);
  const std::size_t keep = std::min(order + 1, coeffs_.size());
  std::copy_n(coeffs_.begin(), keep, c.begin());
  if (order <= this->order()) return CoeffSeries(std::move(c), certified_, unit_bounded_);
  return CoeffSeries(std::move(c));
}

CoeffSeries CoeffSeries::rotated(Complex unit) const {
  if (std::abs(std::abs(unit) - 1.0) > 1e-12) throw DomainError("rotation factor must be unimodular");
  std::vector<Complex> c(coeffs_);
  for (auto& x : c) x *= unit;
  return CoeffSeries(std::move(c), certified_, unit_bounded_);
}

CoeffSeries series_mul(const CoeffSeries& a, const CoeffSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  auto sa = support(a.coeffs().first(order + 1));
  auto sb = support(b.coeffs().first(order + 1));
  const bool a_outer = sa.size() <= sb.size();
  const auto& outer = a_outer ? a : b;
  const auto& inner = a_outer ? b : a;
  const auto& idx = a_outer ? sa : sb;

  const auto& inner_idx = a_outer ? sb : sa;
  const std::size_t inner_last = inner_idx.empty() ? 0 : inner_idx.back();

  std::vector<Complex> c(order + 1);
  if (inner_idx.empty()) return CoeffSeries(std::move(c));
  for (std::size_t i : idx) {
    const Complex x = outer[i];
    const std::size_t last = std::min(order - i, inner_last);
    for (std::size_t j = 0; j <= last; ++j) c[i + j] += mul(x, inner[j]);
  }
  flush_negligible(c);
  return CoeffSeries(std::move(c));
}

CoeffSeries series_div(const CoeffSeries& num, const CoeffSeries& den, double threshold) {
  const Complex d0 = den[0];
  if (!(std::abs(d0) >= threshold)) {
    throw NearZeroConstantTerm("denominator constant term " + std::to_string(std::abs(d0)) +
                               " is below " + std::to_string(threshold));
  }
  const std::size_t order = std::min(num.order(), den.order());
  std::vector<std::size_t> idx;
  for (std::size_t k : support(den.coeffs().first(order + 1))) {
    if (k > 0) idx.push_back(k);
  }

  std::vector<Complex> q(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc = num[n];
    for (std::size_t k : idx) {
      if (k > n) break;
      acc -= mul(den[k], q[n - k]);
    }
    q[n] = acc / d0;
    if (negligible(q[n])) q[n] = Complex{};
  }
  return CoeffSeries(std::move(q));
}

Enclosure majorant(const CoeffSeries& f, double r, std::size_t first) {
  check_radius(r);
  check_tail(f);
  const std::size_t n_max = f.order();
  double sum = 0.0;
  // Horner from the top keeps the partial sum exactly monotone in r.
  for (std::size_t n = n_max + 1; n-- > first;) sum = sum * r + std::abs(f[n]);
  if (first <= n_max) sum *= std::pow(r, static_cast<double>(first));
  const double tail = std::pow(r, static_cast<double>(n_max + 1)) / (1.0 - r);
  return {sum, sum + tail};
}

Enclosure norm_sq(const CoeffSeries& f, double r, std::size_t first) {
  check_radius(r);
  check_tail(f);
  const std::size_t n_max = f.order();
  const double r2 = r * r;
  double sum = 0.0;
  for (std::size_t n = n_max + 1; n-- > first;) sum = sum * r2 + std::norm(f[n]);
  if (first <= n_max) sum *= std::pow(r2, static_cast<double>(first));
  const double tail = std::pow(r2, static_cast<double>(n_max + 1)) / (1.0 - r2);
  return {sum, sum + tail};
}

CoeffSeries drop_constant(const CoeffSeries& f) {
  std::vector<Complex> c(f.coeffs_);
  c[0] = 0.0;
  return CoeffSeries(std::move(c), false, f.unit_bounded_);
}

CoeffSeries shift_down(const CoeffSeries& f) {
  if (std::abs(f[0]) > kZeroConstantTolerance) {
    throw NonvanishingConstant("shift_down needs f(0) = 0, got |c_0| = " + std::to_string(std::abs(f[0])));
  }
  if (f.order() == 0) return CoeffSeries(std::vector<Complex>{0.0}, f.certified_, f.unit_bounded_);
  std::vector<Complex> c(f.coeffs_.begin() + 1, f.coeffs_.end());
  return CoeffSeries(std::move(c), f.certified_, f.unit_bounded_);
}

CoeffSeries multiply_by_z(const CoeffSeries& f) {
  std::vector<Complex> c;
  c.reserve(f.coeffs_.size() + 1);
  c.push_back(0.0);
  c.insert(c.end(), f.coeffs_.begin(), f.coeffs_.end());
  return CoeffSeries(std::move(c), f.certified_, f.unit_bounded_);
}

}  // namespace bohr
