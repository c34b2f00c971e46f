#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

/// c, with |c| <= 1.
struct Constant {
  Complex c{1.0, 0.0};
  friend bool operator==(const Constant&, const Constant&) = default;
};

/// z^k.
struct Monomial {
  unsigned k = 1;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// e^{i theta} (a - z) / (1 - a z), a in [0, 1).
struct Mobius {
  double a = 0.0;
  double theta = 0.0;
  friend bool operator==(const Mobius&, const Mobius&) = default;
};

/// z (a - z) / (1 - a z), a in [0, 1).
struct ShiftedMobius {
  double a = 0.0;
  friend bool operator==(const ShiftedMobius&, const ShiftedMobius&) = default;
};

/// e^{i theta} prod_k (z - w_k) / (1 - conj(w_k) z), |w_k| < 1.
struct Blaschke {
  std::vector<Complex> zeros;
  double theta = 0.0;
  friend bool operator==(const Blaschke&, const Blaschke&) = default;
};

/// Function with Schur parameters gamma_0, ..., gamma_m (|gamma_k| <= 1).
/// Built backwards: F_m = gamma_m, F_k = (gamma_k + z F_{k+1}) / (1 + conj(gamma_k) z F_{k+1}).
struct Schur {
  std::vector<Complex> params;
  friend bool operator==(const Schur&, const Schur&) = default;
};

/// Rational function attaining |a_{2n+1}| = 1 - |a_0|^2 - ... - |a_n|^2:
///   (a_0 + ... + a_n z^n + eps z^{2n+1}) / (1 + eps (conj(a_n) z^{n+1} + ... + conj(a_0) z^{2n+1})).
struct CarlsonOddEq {
  std::vector<Complex> prefix;
  Complex eps{1.0, 0.0};
  friend bool operator==(const CarlsonOddEq&, const CarlsonOddEq&) = default;
};

/// Rational function attaining the even-index bound at index 2n:
///   (a_0 + ... + a_{n-1} z^{n-1} + b z^n + eps z^{2n}) / (1 + eps (conj(b) z^n + conj(a_{n-1}) z^{n+1} + ... + conj(a_0) z^{2n})),
/// with b = a_n / (1 + |a_0|). Requires a_0 conj(a_n)^2 eps to be real and <= 0.
struct CarlsonEvenEq {
  std::vector<Complex> prefix;
  Complex eps{1.0, 0.0};
  friend bool operator==(const CarlsonEvenEq&, const CarlsonEvenEq&) = default;
};

using BoundedFunctionSpec =
    std::variant<Constant, Monomial, Mobius, ShiftedMobius, Blaschke, Schur, CarlsonOddEq, CarlsonEvenEq>;

/// Throws InvalidSpec when a parameter leaves its domain.
void validate(const BoundedFunctionSpec& spec);

/// Certified Taylor expansion to order N (N >= 1).
CoeffSeries expand(const BoundedFunctionSpec& spec, std::size_t order = kDefaultOrder);

/// Short human-readable form, e.g. "mobius(a=0.5)".
std::string describe(const BoundedFunctionSpec& spec);

/// Mobius{a = k / count}, k = 0..count-1.
std::vector<BoundedFunctionSpec> mobius_grid(int count);

/// Mobius{a = 1 - ((count - k) / count)^3}, k = 0..count-1: same size as
/// mobius_grid but packed toward a = 1, where the classical radius 1/(1+2a)
/// approaches 1/3.
std::vector<BoundedFunctionSpec> mobius_edge_grid(int count);

/// Blaschke product of the given degree, zeros uniform by area in |w| < 0.95,
/// rotation uniform in [0, 2 pi). Deterministic in seed.
BoundedFunctionSpec random_blaschke(int degree, std::uint64_t seed);

/// Schur function with `length` parameters uniform by area in |gamma| < 0.95.
BoundedFunctionSpec random_schur(int length, std::uint64_t seed);

/// Random prefixes a_0..a_n with sum |a_k| <= 0.9, so every numerator zero of
/// the rational extremal lies in the disk and the function is bounded. The
/// even variant picks eps to satisfy the sign condition.
CarlsonOddEq random_carlson_odd(std::size_t n, std::uint64_t seed);
CarlsonEvenEq random_carlson_even(std::size_t n, std::uint64_t seed);

/// Maximum modulus used for random zeros and Schur parameters.
inline constexpr double kRandomRadius = 0.95;

/// Stateless 64-bit mixer used to derive per-sample seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace bohr
