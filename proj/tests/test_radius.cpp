#include <doctest.h>

#include <cmath>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/radius.hpp"
#include "bohr/report.hpp"
#include "oracles.hpp"

using namespace bohr;
using doctest::Approx;

TEST_CASE("family_sup on single functions") {
  const std::vector<BoundedFunctionSpec> identity{Monomial{1}};
  CHECK(family_sup(FunctionalId::T3B, identity, 0.5) == Approx(1.25).epsilon(1e-12));
  const std::vector<BoundedFunctionSpec> phi{Mobius{0.5}};
  CHECK(family_sup(FunctionalId::T2B, phi, 0.55, 512) == Approx(oracle::t2b_mobius(0.5, 0.55)).epsilon(1e-10));
  const std::vector<BoundedFunctionSpec> one{Constant{}};
  CHECK(family_sup(FunctionalId::T1, one, 0.9) == Approx(1.0));
}

TEST_CASE("radius of the extremal families") {
  BisectOptions opts;
  opts.order = 512;

  const auto t2b = bisect_radius(FunctionalId::T2B, make_family("mobius:200", 0), opts, "mobius:200");
  CHECK(std::abs(t2b.empirical - 0.5) <= 1e-5);
  CHECK(t2b.closed_form == 0.5);
  CHECK(t2b.family == "mobius:200");

  const auto t3a = bisect_radius(FunctionalId::T3A, make_family("shifted_mobius:0.2833:0.3833:101", 0), opts);
  CHECK(std::abs(t3a.empirical - 0.6) <= 1e-4);

  const std::vector<BoundedFunctionSpec> one_mobius{Mobius{0.4}};
  const auto t2a = bisect_radius(FunctionalId::T2A, one_mobius, opts);
  CHECK(std::abs(t2a.empirical - 1 / 2.4) <= 1e-6);
  CHECK(t2a.closed_form == Approx(1 / 2.4));

  const std::vector<BoundedFunctionSpec> identity{Monomial{1}};
  const auto t3b = bisect_radius(FunctionalId::T3B, identity, opts);
  CHECK(std::abs(t3b.empirical - (5 - std::sqrt(17.0)) / 2) <= 1e-6);
}

TEST_CASE("T3C curve") {
  const std::vector<double> grid{0.0, 1 / std::sqrt(2.0), 0.9};
  BisectOptions opts;
  opts.order = 512;
  const auto rows = radius_curve(grid, opts);
  REQUIRE(rows.size() == 3);
  CHECK(std::abs(rows[0].empirical - (std::sqrt(5.0) - 1) / 2) <= 1e-6);
  CHECK(std::abs(rows[1].empirical - 0.5) <= 1e-6);
  CHECK(rows[2].empirical == Approx(radius_t3c(0.9)).epsilon(1e-5));
  for (const auto& row : rows) {
    CHECK(row.parameter == Approx(row.parameter));
    CHECK(row.discrepancy <= 1e-6);
    CHECK(row.iterations <= bisection_iterations(opts.tol));
  }
}

TEST_CASE("iteration bound") {
  CHECK(bisection_iterations(1e-6) == 20);
  CHECK(bisection_iterations(1e-12) == 40);
}

TEST_CASE("bisection errors") {
  const std::vector<BoundedFunctionSpec> one{Constant{}};
  CHECK_THROWS_AS(bisect_radius(FunctionalId::T1, one), NoBracket);

  // Brackets a root but dips on (0.4, 0.6).
  auto bumpy = [](double r) { return r - 0.3 - (r > 0.4 && r < 0.6 ? 0.5 : 0.0); };
  CHECK_THROWS_AS(bisect_monotone(bumpy, 0.0, 0.95, 1e-6), NonMonotone);

  auto line = [](double r) { return r - 0.3; };
  CHECK_THROWS_AS(bisect_monotone(line, 0.0, 0.95, 1e-9, 5), MaxIterations);
  const auto ok = bisect_monotone(line, 0.0, 0.95, 1e-9);
  CHECK(ok.root <= 0.3);
  CHECK(ok.upper > 0.3);
  CHECK(ok.upper - ok.root <= 1e-9);

  auto positive = [](double r) { return r + 1.0; };
  CHECK_THROWS_AS(bisect_monotone(positive, 0.0, 0.95, 1e-6), NoBracket);
}

TEST_CASE("property: extremal families stay at or below the closed form") {
  BisectOptions opts;
  opts.order = 512;
  for (int count : {20, 50, 100}) {
    const auto family = make_family("mobius:" + std::to_string(count), 0);
    const auto res = bisect_radius(FunctionalId::T2B, family, opts);
    CHECK(res.empirical <= res.closed_form + opts.tol);
  }
}

TEST_CASE("property: random families hold at least up to their radius") {
  BisectOptions opts;
  const auto check = [&](FunctionalId id, const std::vector<BoundedFunctionSpec>& family) {
    try {
      const auto res = bisect_radius(id, family, opts);
      CHECK(res.empirical >= res.closed_form - opts.tol);
    } catch (const NoBracket&) {
      // The inequality holds on all of [0, 0.95].
    }
  };
  for (const char* name : {"blaschke:5:4", "schur:5:4"})
    for (auto id : {FunctionalId::T2A, FunctionalId::T2B}) check(id, make_family(name, 3));
  for (const char* name : {"zblaschke:5:4", "zschur:5:4"})
    for (auto id : {FunctionalId::T3A, FunctionalId::T3B, FunctionalId::T3C}) check(id, make_family(name, 3));
}
