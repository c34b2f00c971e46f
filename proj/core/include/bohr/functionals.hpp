#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "bohr/functions.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// Which inequality's left-hand side is evaluated.
///   TA   classical Bohr:        sum_{n>=1} |a_n| r^n <= 1 - |a_0|
///   T1                          M_f(r) <= (1 - r ||f||_r^2) / (1 - r)
///   T2A                         M_f(r) + (1/(1+|a_0|) + r/(1-r)) ||f_0||_r^2 <= 1
///   T2B                         |a_0|^2 + sum_{n>=1} |a_n| r^n + (same weight) ||f_0||_r^2 <= 1
///   T3A  (a_0 = 0)              sum |a_n| r^n + (1/(1+|a_1|) + r/(1-r)) sum_{n>=2} |a_n|^2 r^{2n-1} <= 1
///   T3B, T3C (a_0 = 0)          sum |a_n| r^n + (r^{-1}/(1+|a_1|) + 1/(1-r)) ||f||_r^2 <= 1
/// T3B and T3C share the functional and differ only in the radius claimed.
enum class FunctionalId { TA, T1, T2A, T2B, T3A, T3B, T3C };

inline constexpr FunctionalId kAllFunctionals[] = {FunctionalId::TA,  FunctionalId::T1,  FunctionalId::T2A,
                                                   FunctionalId::T2B, FunctionalId::T3A, FunctionalId::T3B,
                                                   FunctionalId::T3C};

std::string_view to_string(FunctionalId id);
/// Case-insensitive; throws ParseError.
FunctionalId parse_functional(std::string_view name);

/// Evaluation radii are restricted to [0, kMaxRadius].
inline constexpr double kMaxRadius = 0.95;
/// Margins at or above -kMarginTolerance pass; absorbs rounding in equality cases.
inline constexpr double kMarginTolerance = 1e-9;

enum class Mode { Rigorous, Fast };

struct FunctionalValue {
  FunctionalId id{};
  double r = 0.0;
  Enclosure value;      ///< left-hand side
  Enclosure threshold;  ///< right-hand side
  /// Rigorous: threshold.lower - value.upper. Fast: threshold.lower - value.lower.
  double margin = 0.0;
  Mode mode = Mode::Rigorous;

  /// Distance-to-violation on the "threshold 1" scale: > 1 means the inequality fails.
  double level() const { return 1.0 - margin; }
  /// Optimistic margin (threshold.upper - value.lower).
  double best_margin() const { return threshold.upper - value.lower; }
};

enum class Verdict { Pass, Fail, Inconclusive };
std::string_view to_string(Verdict v);

/// Pass when margin >= -tol. In rigorous mode a negative margin whose
/// optimistic counterpart still passes is Inconclusive (the enclosure is too wide).
Verdict classify(const FunctionalValue& v, double tol = kMarginTolerance);

/// Encloses the left- and right-hand sides of the chosen inequality.
/// Needs a unit-bounded series, r in [0, 0.95], and |a_0| <= 1e-12 for T3*.
FunctionalValue eval_functional(FunctionalId id, const CoeffSeries& f, double r, Mode mode = Mode::Rigorous);

/// r x + r^2 (1 - x^2) / (1 - r), x in [0,1], r in [0,1).
double psi(double x, double r);

struct PsiMax {
  double argmax = 0.0;
  double value = 0.0;
};

/// Maximum of psi(., r) on [0,1]. The critical point (1-r)/(2r) leaves [0,1]
/// for r < 1/3, where the maximum sits at x = 1.
PsiMax psi_max(double r);

/// r a + r^2/(1-r) + r a^2/(1+a), a in [0,1], r in [0,1).
double xi(double a, double r);

/// r^2 (2a^2 - 1) - r (1 + 2a + 2a^2) + 1 + a.
double cap_b(double a, double r);

/// r(a) = 2(1+a) / (1 + 2a + 2a^2 + sqrt(4a^4 + 8a + 5)), the smallest positive root of cap_b(a, .).
double radius_t3c(double a);

/// Closed-form radius. `a` is |a_0| for T2A and |a_1| for T3C; ignored otherwise.
/// T1 holds on all of [0,1) and reports 1.
double sharp_radius(FunctionalId id, double a = 0.0);

/// Radius claimed for one function: reads |a_0| or |a_1| from its coefficients.
double sharp_radius_for(FunctionalId id, const CoeffSeries& f);

struct Witness {
  BoundedFunctionSpec spec;
  double value = 0.0;  ///< level() of the evaluated functional, lower end; > 1 means violated
  double radius = 0.0; ///< closed-form radius the witness is measured against
};

/// Extremal function whose functional exceeds 1 at r. `a` selects the
/// parameter for T2A, T2B and T3C (defaults to 0.5). Throws NoWitness when r
/// is not past the radius or above 0.95.
Witness sharpness_witness(FunctionalId id, double r, std::optional<double> a = std::nullopt,
                          std::size_t order = 512);

}  // namespace bohr
