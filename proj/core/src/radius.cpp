#include "bohr/radius.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohr/errors.hpp"
#include "parallel.hpp"

namespace bohr {

namespace {

// Expanded family members with per-member truncation order. A member whose
// enclosure straddles the threshold is re-expanded at twice the order.
class ExpandedFamily {
 public:
  ExpandedFamily(FunctionalId id, std::span<const BoundedFunctionSpec> specs, std::size_t order,
                 std::size_t max_order)
      : id_(id), specs_(specs.begin(), specs.end()), max_order_(max_order) {
    if (specs_.empty()) throw DomainError("radius search needs a non-empty family");
    series_.reserve(specs_.size());
    for (const auto& s : specs_) series_.push_back(expand(s, order));
  }

  double sup(double r) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < series_.size(); ++i) {
      auto v = eval_functional(id_, series_[i], r);
      while (straddles(v) && series_[i].order() < max_order_) {
        series_[i] = expand(specs_[i], std::min(max_order_, 2 * series_[i].order()));
        v = eval_functional(id_, series_[i], r);
      }
      best = std::max(best, v.level());
    }
    return best;
  }

  double closed_form() const {
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& s : series_) lo = std::min(lo, sharp_radius_for(id_, s));
    return lo;
  }

  std::size_t max_order_used() const {
    std::size_t m = 0;
    for (const auto& s : series_) m = std::max(m, s.order());
    return m;
  }

 private:
  static bool straddles(const FunctionalValue& v) {
    const double hi = v.level();
    const double lo = 1.0 - v.best_margin();
    return lo <= 1.0 && hi > 1.0 && hi - lo > 1e-15;
  }

  FunctionalId id_;
  std::vector<BoundedFunctionSpec> specs_;
  std::vector<CoeffSeries> series_;
  std::size_t max_order_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

int bisection_iterations(double tol) {
  return static_cast<int>(std::ceil(std::log2(kMaxRadius / tol)));
}

BisectionOutcome bisect_monotone(const std::function<double(double)>& g, double lo, double hi, double tol,
                                 int max_iterations, int audit_points) {
  if (!(lo < hi)) throw DomainError("bisection needs lo < hi");
  if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (!(g_lo <= 0.0 && g_hi > 0.0)) {
    throw NoBracket("no sign change on [" + fmt(lo) + ", " + fmt(hi) + "] (g(lo) = " + fmt(g_lo) +
                    ", g(hi) = " + fmt(g_hi) + ")");
  }

  const int points = std::max(2, audit_points);
  double previous = g_lo;
  for (int k = 1; k < points; ++k) {
    const double r = k == points - 1 ? hi : lo + (hi - lo) * k / (points - 1);
    const double current = k == points - 1 ? g_hi : g(r);
    if (current < previous - 1e-12) throw NonMonotone("g decreases near r = " + fmt(r));
    previous = current;
  }

  BisectionOutcome out{lo, hi, 0};
  while (out.upper - out.root > tol) {
    if (++out.iterations > max_iterations) {
      throw MaxIterations("bisection exceeded " + std::to_string(max_iterations) + " iterations");
    }
    const double mid = 0.5 * (out.root + out.upper);
    (g(mid) <= 0.0 ? out.root : out.upper) = mid;
  }
  return out;
}

double family_sup(FunctionalId id, std::span<const BoundedFunctionSpec> specs, double r, std::size_t order) {
  return ExpandedFamily(id, specs, order, order).sup(r);
}

RadiusResult bisect_radius(FunctionalId id, std::span<const BoundedFunctionSpec> specs, const BisectOptions& options,
                           std::string family) {
  if (!(options.tol >= 1e-12)) throw DomainError("bisection tolerance must be >= 1e-12");
  ExpandedFamily fam(id, specs, options.order, std::max(options.order, options.max_order));
  BisectionOutcome outcome;
  try {
    outcome = bisect_monotone([&](double r) { return fam.sup(r) - 1.0; }, 0.0, kMaxRadius, options.tol,
                              options.max_iterations, options.audit_points);
  } catch (const NoBracket& e) {
    throw NoBracket(std::string(to_string(id)) + ": " + e.what());
  } catch (const NonMonotone& e) {
    throw NonMonotone(std::string(to_string(id)) + ": " + e.what());
  }

  RadiusResult out;
  out.id = id;
  out.family = std::move(family);
  out.empirical = outcome.root;
  out.closed_form = fam.closed_form();
  out.discrepancy = std::abs(out.empirical - out.closed_form);
  out.iterations = outcome.iterations;
  out.tol = options.tol;
  out.order = fam.max_order_used();
  return out;
}

std::vector<RadiusResult> radius_curve(std::span<const double> a_grid, const BisectOptions& options, FunctionalId id) {
  if (id != FunctionalId::T3C && id != FunctionalId::T2A) {
    throw DomainError("radius curves exist for T2A and T3C only");
  }
  for (double a : a_grid) {
    if (!(a >= 0.0 && a < 1.0)) throw DomainError("curve parameters must lie in [0, 1)");
  }
  std::vector<RadiusResult> out(a_grid.size());
  detail::parallel_for(a_grid.size(), [&](std::size_t i) {
    const double a = a_grid[i];
    const BoundedFunctionSpec spec =
        id == FunctionalId::T3C ? BoundedFunctionSpec{ShiftedMobius{a}} : BoundedFunctionSpec{Mobius{a, 0.0}};
    out[i] = bisect_radius(id, std::span(&spec, 1), options, describe(spec));
    out[i].parameter = a;
  });
  return out;
}

}  // namespace bohr
