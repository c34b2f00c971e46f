#include "bohr/functionals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

void check_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
}

void check_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("r must lie in [0, 1), got " + std::to_string(r));
}

Enclosure ordered(double a, double b) { return {std::min(a, b), std::max(a, b)}; }

double level_lower(const FunctionalValue& v) { return 1.0 - v.best_margin(); }

// (1 - a) ((1 + 2a) r - 1) / (1 - a r): how far the classical majorant of
// phi_a exceeds 1. Used to pick the Mobius witness past 1/3.
double classical_excess(double a, double r) { return (1.0 - a) * ((1.0 + 2.0 * a) * r - 1.0) / (1.0 - a * r); }

}  // namespace

std::string_view to_string(FunctionalId id) {
  switch (id) {
    case FunctionalId::TA: return "TA";
    case FunctionalId::T1: return "T1";
    case FunctionalId::T2A: return "T2A";
    case FunctionalId::T2B: return "T2B";
    case FunctionalId::T3A: return "T3A";
    case FunctionalId::T3B: return "T3B";
    case FunctionalId::T3C: return "T3C";
  }
  return "?";
}

FunctionalId parse_functional(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (auto id : kAllFunctionals) {
    if (to_string(id) == upper) return id;
  }
  throw ParseError("unknown theorem id \"" + std::string(name) + "\" (expected TA, T1, T2A, T2B, T3A, T3B, T3C)");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict classify(const FunctionalValue& v, double tol) {
  if (v.margin >= -tol) return Verdict::Pass;
  if (v.mode == Mode::Rigorous && v.best_margin() >= -tol) return Verdict::Inconclusive;
  return Verdict::Fail;
}

FunctionalValue eval_functional(FunctionalId id, const CoeffSeries& f, double r, Mode mode) {
  if (!(r >= 0.0 && r <= kMaxRadius)) {
    throw DomainError("evaluation radius must lie in [0, 0.95], got " + std::to_string(r));
  }
  const double a0 = std::abs(f[0]);
  const Enclosure one = Enclosure::exact(1.0);
  const double geometric = r / (1.0 - r);

  Enclosure value;
  Enclosure threshold = one;
  switch (id) {
    case FunctionalId::TA:
      value = majorant(f, r, 1);
      threshold = Enclosure::exact(1.0 - a0);
      break;
    case FunctionalId::T1: {
      value = majorant(f, r);
      const Enclosure n2 = norm_sq(f, r);
      threshold = ordered((1.0 - r * n2.upper) / (1.0 - r), (1.0 - r * n2.lower) / (1.0 - r));
      break;
    }
    case FunctionalId::T2A:
      value = majorant(f, r) + scale(norm_sq(f, r, 1), 1.0 / (1.0 + a0) + geometric);
      break;
    case FunctionalId::T2B:
      value = Enclosure::exact(a0 * a0) + majorant(f, r, 1) + scale(norm_sq(f, r, 1), 1.0 / (1.0 + a0) + geometric);
      break;
    case FunctionalId::T3A:
    case FunctionalId::T3B:
    case FunctionalId::T3C: {
      if (a0 > kZeroConstantTolerance) {
        throw ConstraintViolation(std::string(to_string(id)) + " needs f(0) = 0, got |a_0| = " + std::to_string(a0));
      }
      // g = f / z carries the r^{-1} weights: sum_{n>=k} |a_n|^2 r^{2n-1} = r sum_{m>=k-1} |g_m|^2 r^{2m}.
      const CoeffSeries g = shift_down(f);
      const double a1 = std::abs(f.at(1));
      if (id == FunctionalId::T3A) {
        value = majorant(f, r, 1) + scale(norm_sq(g, r, 1), r * (1.0 / (1.0 + a1) + geometric));
      } else {
        value = majorant(f, r, 1) + scale(norm_sq(g, r), r / (1.0 + a1)) + scale(norm_sq(f, r, 1), 1.0 / (1.0 - r));
      }
      break;
    }
  }

  const double margin = mode == Mode::Rigorous ? threshold.lower - value.upper : threshold.lower - value.lower;
  return {id, r, value, threshold, margin, mode};
}

double psi(double x, double r) {
  check_unit_interval(x, "x");
  check_radius(r);
  return r * x + r * r / (1.0 - r) * (1.0 - x * x);
}

PsiMax psi_max(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("psi_max needs r in (0, 1), got " + std::to_string(r));
  const double x0 = (1.0 - r) / (2.0 * r);
  if (x0 > 1.0) return {1.0, psi(1.0, r)};
  return {x0, 1.0 - (3.0 - 5.0 * r) * (1.0 + r) / (4.0 * (1.0 - r))};
}

double xi(double a, double r) {
  check_unit_interval(a, "a");
  check_radius(r);
  return r * a + r * r / (1.0 - r) + r * a * a / (1.0 + a);
}

double cap_b(double a, double r) {
  return r * r * (2.0 * a * a - 1.0) - r * (1.0 + 2.0 * a + 2.0 * a * a) + 1.0 + a;
}

double radius_t3c(double a) {
  check_unit_interval(a, "a");
  const double a2 = a * a;
  return 2.0 * (1.0 + a) / (1.0 + 2.0 * a + 2.0 * a2 + std::sqrt(4.0 * a2 * a2 + 8.0 * a + 5.0));
}

double sharp_radius(FunctionalId id, double a) {
  switch (id) {
    case FunctionalId::TA: return 1.0 / 3.0;
    case FunctionalId::T1: return 1.0;
    case FunctionalId::T2A: check_unit_interval(a, "|a_0|"); return 1.0 / (2.0 + a);
    case FunctionalId::T2B: return 0.5;
    case FunctionalId::T3A: return 0.6;
    case FunctionalId::T3B: return (5.0 - std::sqrt(17.0)) / 2.0;
    case FunctionalId::T3C: return radius_t3c(a);
  }
  return 0.0;
}

double sharp_radius_for(FunctionalId id, const CoeffSeries& f) {
  switch (id) {
    case FunctionalId::T2A: return sharp_radius(id, std::min(1.0, std::abs(f[0])));
    case FunctionalId::T3C: return sharp_radius(id, std::min(1.0, std::abs(f.at(1))));
    default: return sharp_radius(id);
  }
}

Witness sharpness_witness(FunctionalId id, double r, std::optional<double> a, std::size_t order) {
  if (!(r <= kMaxRadius)) throw NoWitness("witness search is limited to r <= 0.95");
  const double param = a.value_or(0.5);
  if (id == FunctionalId::T1) throw NoWitness("T1 holds on all of [0, 1); there is no radius to exceed");
  if ((id == FunctionalId::T2A || id == FunctionalId::T2B || id == FunctionalId::T3C) && !(param >= 0.0 && param < 1.0)) {
    throw DomainError("witness parameter must lie in [0, 1)");
  }
  const double radius = sharp_radius(id, param);
  if (!(r > radius)) {
    throw NoWitness("r = " + std::to_string(r) + " is not past the radius " + std::to_string(radius));
  }

  BoundedFunctionSpec spec;
  switch (id) {
    case FunctionalId::TA: {
      double best_a = 0.0;
      double best = classical_excess(0.0, r);
      for (int k = 1; k < 100000; ++k) {
        const double t = k * 1e-5;
        if (const double e = classical_excess(t, r); e > best) best = e, best_a = t;
      }
      spec = Mobius{best_a, 0.0};
      break;
    }
    case FunctionalId::T2A:
    case FunctionalId::T2B: spec = Mobius{param, 0.0}; break;
    case FunctionalId::T3A: spec = ShiftedMobius{(1.0 - r) / (2.0 * r)}; break;
    case FunctionalId::T3B: spec = Monomial{1}; break;
    case FunctionalId::T3C: spec = ShiftedMobius{param}; break;
    case FunctionalId::T1: break;
  }

  const double value = level_lower(eval_functional(id, expand(spec, order), r));
  if (!(value > 1.0)) {
    throw NoWitness("witness value " + std::to_string(value) + " does not exceed 1 at r = " + std::to_string(r));
  }
  return {spec, value, radius};
}

}  // namespace bohr
