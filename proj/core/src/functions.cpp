#include "bohr/functions.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kUnitTolerance = 1e-12;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpec(what);
}

void check_prefix(const std::vector<Complex>& prefix, Complex eps, const char* name) {
  require(!prefix.empty(), std::string(name) + ": prefix must not be empty");
  for (const auto& c : prefix) require(finite(c), std::string(name) + ": prefix entries must be finite");
  require(finite(eps) && std::abs(std::abs(eps) - 1.0) <= kUnitTolerance,
          std::string(name) + ": eps must be unimodular");
}

// Polynomial with coefficients placed at the given degrees, truncated at order.
CoeffSeries poly(std::size_t order, std::initializer_list<std::pair<std::size_t, Complex>> terms) {
  std::vector<Complex> c(order + 1);
  for (const auto& [k, v] : terms) {
    if (k <= order) c[k] += v;
  }
  return CoeffSeries(std::move(c));
}

CoeffSeries mobius_coeffs(double a, std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[0] = a;
  if (order >= 1) c[1] = -(1.0 - a * a);
  for (std::size_t n = 2; n <= order; ++n) c[n] = a * c[n - 1];
  return CoeffSeries(std::move(c));
}

CoeffSeries certified_or_reject(const CoeffSeries& s, const char* name) {
  try {
    return s.certified();
  } catch (const CertificationError& e) {
    throw InvalidSpec(std::string(name) + " does not expand to a bounded function: " + e.what());
  }
}

// num / den for the Carlson rational forms; num holds the prefix (with the
// last entry already reweighted) followed by eps z^top, den its eps-weighted reflection.
CoeffSeries carlson_rational(const std::vector<Complex>& head, Complex eps, std::size_t top, std::size_t order) {
  std::vector<Complex> num(order + 1), den(order + 1);
  for (std::size_t k = 0; k < head.size() && k <= order; ++k) num[k] = head[k];
  if (top <= order) num[top] += eps;
  den[0] = 1.0;
  for (std::size_t k = 0; k < head.size(); ++k) {
    if (top - k <= order) den[top - k] += eps * std::conj(head[k]);
  }
  return series_div(CoeffSeries(std::move(num)), CoeffSeries(std::move(den)));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex uniform_in_disk(std::mt19937_64& rng, double radius) {
  const double rho = radius * std::sqrt(uniform01(rng));
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  return std::polar(rho, phi);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string fmt(Complex z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return "(" + fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i)";
}

std::string fmt(const std::vector<Complex>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
  return s + "]";
}

}  // namespace

void validate(const BoundedFunctionSpec& spec) {
  std::visit(overloaded{
                 [](const Constant& s) {
                   require(finite(s.c) && std::abs(s.c) <= 1.0 + kUnitTolerance, "constant: |c| must be <= 1");
                 },
                 [](const Monomial&) {},
                 [](const Mobius& s) {
                   require(s.a >= 0.0 && s.a < 1.0, "mobius: a must lie in [0, 1)");
                   require(std::isfinite(s.theta), "mobius: theta must be finite");
                 },
                 [](const ShiftedMobius& s) {
                   require(s.a >= 0.0 && s.a < 1.0, "shifted mobius: a must lie in [0, 1)");
                 },
                 [](const Blaschke& s) {
                   require(std::isfinite(s.theta), "blaschke: theta must be finite");
                   for (const auto& w : s.zeros) require(finite(w) && std::abs(w) < 1.0, "blaschke: zeros must lie in the open disk");
                 },
                 [](const Schur& s) {
                   require(!s.params.empty(), "schur: needs at least one parameter");
                   for (const auto& g : s.params) {
                     require(finite(g) && std::abs(g) <= 1.0 + kUnitTolerance, "schur: parameters must satisfy |gamma| <= 1");
                   }
                 },
                 [](const CarlsonOddEq& s) { check_prefix(s.prefix, s.eps, "carlson odd"); },
                 [](const CarlsonEvenEq& s) {
                   check_prefix(s.prefix, s.eps, "carlson even");
                   require(s.prefix.size() >= 2, "carlson even: prefix needs a_0..a_n with n >= 1");
                   const Complex side = s.prefix.front() * std::conj(s.prefix.back()) * std::conj(s.prefix.back()) * s.eps;
                   const double scale = std::max(1.0, std::abs(side));
                   require(std::abs(side.imag()) <= kUnitTolerance * scale && side.real() <= kUnitTolerance * scale,
                           "carlson even: a_0 conj(a_n)^2 eps must be real and <= 0");
                 },
             },
             spec);
}

CoeffSeries expand(const BoundedFunctionSpec& spec, std::size_t order) {
  if (order < 1) throw InvalidSpec("expansion order must be >= 1");
  validate(spec);
  return std::visit(
      overloaded{
          [&](const Constant& s) {
            std::vector<Complex> c(order + 1);
            c[0] = s.c;
            return CoeffSeries::certify(std::move(c));
          },
          [&](const Monomial& s) {
            std::vector<Complex> c(order + 1);
            if (s.k <= order) c[s.k] = 1.0;
            return CoeffSeries::certify(std::move(c));
          },
          [&](const Mobius& s) {
            auto f = mobius_coeffs(s.a, order).certified();
            return s.theta == 0.0 ? f : f.rotated(std::polar(1.0, s.theta));
          },
          [&](const ShiftedMobius& s) {
            return multiply_by_z(mobius_coeffs(s.a, order - 1).certified());
          },
          [&](const Blaschke& s) {
            auto f = poly(order, {{0, std::polar(1.0, s.theta)}});
            for (const auto& w : s.zeros) {
              const auto num = series_mul(f, poly(order, {{0, -w}, {1, 1.0}}));
              f = series_div(num, poly(order, {{0, 1.0}, {1, -std::conj(w)}}));
            }
            return f.certified();
          },
          [&](const Schur& s) {
            auto f = poly(order, {{0, s.params.back()}});
            for (auto it = s.params.rbegin() + 1; it != s.params.rend(); ++it) {
              const Complex g = *it;
              const auto zf = multiply_by_z(f).truncated(order);
              std::vector<Complex> num(zf.coeffs().begin(), zf.coeffs().end());
              std::vector<Complex> den(num.size());
              for (std::size_t n = 0; n < num.size(); ++n) den[n] = std::conj(g) * num[n];
              num[0] += g;
              den[0] += 1.0;
              f = series_div(CoeffSeries(std::move(num)), CoeffSeries(std::move(den)));
            }
            return f.certified();
          },
          [&](const CarlsonOddEq& s) {
            const std::size_t n = s.prefix.size() - 1;
            return certified_or_reject(carlson_rational(s.prefix, s.eps, 2 * n + 1, order), "carlson odd");
          },
          [&](const CarlsonEvenEq& s) {
            const std::size_t n = s.prefix.size() - 1;
            auto head = s.prefix;
            head.back() /= 1.0 + std::abs(s.prefix.front());
            return certified_or_reject(carlson_rational(head, s.eps, 2 * n, order), "carlson even");
          },
      },
      spec);
}

std::string describe(const BoundedFunctionSpec& spec) {
  return std::visit(overloaded{
                        [](const Constant& s) { return "constant(c=" + fmt(s.c) + ")"; },
                        [](const Monomial& s) { return "monomial(k=" + std::to_string(s.k) + ")"; },
                        [](const Mobius& s) {
                          return "mobius(a=" + fmt(s.a) + (s.theta != 0.0 ? ",theta=" + fmt(s.theta) : "") + ")";
                        },
                        [](const ShiftedMobius& s) { return "shifted_mobius(a=" + fmt(s.a) + ")"; },
                        [](const Blaschke& s) {
                          return "blaschke(deg=" + std::to_string(s.zeros.size()) + ",theta=" + fmt(s.theta) + ")";
                        },
                        [](const Schur& s) { return "schur(params=" + fmt(s.params) + ")"; },
                        [](const CarlsonOddEq& s) { return "carlson_odd(prefix=" + fmt(s.prefix) + ",eps=" + fmt(s.eps) + ")"; },
                        [](const CarlsonEvenEq& s) { return "carlson_even(prefix=" + fmt(s.prefix) + ",eps=" + fmt(s.eps) + ")"; },
                    },
                    spec);
}

std::vector<BoundedFunctionSpec> mobius_grid(int count) {
  if (count < 2) throw DomainError("mobius_grid needs count >= 2");
  std::vector<BoundedFunctionSpec> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.emplace_back(Mobius{static_cast<double>(k) / count, 0.0});
  return out;
}

std::vector<BoundedFunctionSpec> mobius_edge_grid(int count) {
  if (count < 2) throw DomainError("mobius_edge_grid needs count >= 2");
  std::vector<BoundedFunctionSpec> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double t = static_cast<double>(count - k) / count;
    out.emplace_back(Mobius{1.0 - t * t * t, 0.0});
  }
  return out;
}

BoundedFunctionSpec random_blaschke(int degree, std::uint64_t seed) {
  if (degree < 1) throw DomainError("random_blaschke needs degree >= 1");
  std::mt19937_64 rng(seed);
  Blaschke b;
  for (int k = 0; k < degree; ++k) b.zeros.push_back(uniform_in_disk(rng, kRandomRadius));
  b.theta = 2.0 * std::numbers::pi * uniform01(rng);
  return b;
}

BoundedFunctionSpec random_schur(int length, std::uint64_t seed) {
  if (length < 1) throw DomainError("random_schur needs length >= 1");
  std::mt19937_64 rng(seed);
  Schur s;
  for (int k = 0; k < length; ++k) s.params.push_back(uniform_in_disk(rng, kRandomRadius));
  return s;
}

namespace {

std::vector<Complex> random_prefix(std::size_t n, std::mt19937_64& rng) {
  std::vector<Complex> prefix;
  double total = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    prefix.push_back(uniform_in_disk(rng, 1.0));
    total += std::abs(prefix.back());
  }
  const double target = 0.9 * (0.1 + 0.9 * uniform01(rng));
  if (total > 0.0) {
    for (auto& c : prefix) c *= target / total;
  }
  return prefix;
}

}  // namespace

CarlsonOddEq random_carlson_odd(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto prefix = random_prefix(n, rng);
  return {std::move(prefix), std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng))};
}

CarlsonEvenEq random_carlson_even(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw DomainError("even extremal needs n >= 1");
  std::mt19937_64 rng(seed);
  auto prefix = random_prefix(n, rng);
  // a_0 conj(a_n)^2 eps = -|a_0| |a_n|^2 for eps = -conj(a_0) a_n^2 / (|a_0| |a_n|^2).
  const Complex w = prefix.front() * std::conj(prefix.back()) * std::conj(prefix.back());
  Complex eps = std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng));
  if (std::abs(w) > 0.0) eps = -std::conj(w) / std::abs(w);
  return {std::move(prefix), eps};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace bohr
