#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bohr/functionals.hpp"
#include "bohr/functions.hpp"
#include "bohr/radius.hpp"

namespace bohr {

/// Report schema version, bumped on incompatible layout changes.
inline constexpr int kReportSchema = 1;
std::string version_string();

/// Named function families accepted by --family:
///   mobius:COUNT                 Mobius{k/COUNT}
///   mobius_edge:COUNT            Mobius grid packed toward a = 1
///   shifted_mobius:COUNT         ShiftedMobius{k/COUNT}
///   shifted_mobius:LO:HI:COUNT   ShiftedMobius on an even grid of [LO, HI]
///   blaschke:SAMPLES[:MAXDEG]    random Blaschke products, degree 1..MAXDEG (default 8)
///   zblaschke:SAMPLES[:MAXDEG]   same, with one zero moved to the origin (f(0) = 0)
///   schur:SAMPLES[:MAXLEN]       random Schur functions, 1..MAXLEN parameters (default 8)
///   zschur:SAMPLES[:MAXLEN]      same, with gamma_0 = 0 (f(0) = 0)
///   constant | identity | monomial:K
std::vector<BoundedFunctionSpec> make_family(std::string_view name, std::uint64_t seed);

/// "start:stop:count"; stop may be R for the per-function radius (capped at 0.95).
struct Grid {
  double start = 0.0;
  std::optional<double> stop;
  int count = 20;

  static Grid parse(std::string_view text);
  /// Points for a function whose radius is `radius`; points past it are dropped.
  std::vector<double> points(double radius) const;
  /// Points of a fixed grid (stop must be numeric).
  std::vector<double> points() const;
};

struct ReportRow {
  std::string id;
  nlohmann::json spec;
  std::string kind = "functional";  ///< functional | bound | equality
  std::optional<double> r;
  std::optional<Enclosure> value;
  std::optional<Enclosure> threshold;
  std::optional<std::size_t> index;
  std::optional<double> bound;
  std::optional<double> observed;
  std::optional<double> margin;
  std::string verdict;  ///< pass | fail | inconclusive | error
  std::string note;
  std::size_t order = 0;

  nlohmann::json to_json() const;
};

struct VerificationReport {
  std::string campaign;
  std::vector<ReportRow> rows;
  std::optional<double> worst_margin;
  std::size_t order = 0;
  std::uint64_t seed = 0;
  Mode mode = Mode::Rigorous;
  std::size_t skipped_points = 0;

  std::map<std::string, std::size_t> counts() const;
  nlohmann::json to_json() const;
  /// 0: no fail, error or inconclusive rows; 1: fail or error rows; 2: only inconclusive.
  int exit_status() const;
};

void write_report(const VerificationReport& report, std::ostream& out);

struct VerifyOptions {
  FunctionalId theorem = FunctionalId::T1;
  std::string family = "blaschke:100:6";
  std::size_t order = kDefaultOrder;
  std::string grid = "0:R:20";
  std::uint64_t seed = 42;
  Mode mode = Mode::Rigorous;
  std::size_t max_order = 4096;
};

/// Evaluates the theorem on every (function, r) pair. Rows are ordered by
/// family position, then r; evaluation runs concurrently across functions.
VerificationReport cmd_verify(const VerifyOptions& options);

/// CSV "n,re,im,abs" of the expansion.
void cmd_coeffs(const BoundedFunctionSpec& spec, std::size_t order, std::ostream& out);

struct RadiusOptions {
  FunctionalId theorem = FunctionalId::T3C;
  /// Empty: the theorem's default extremal family (or parameter curve for T2A/T3C).
  std::string family;
  /// Parameter grid for T2A/T3C curves.
  std::string grid;
  double tol = 1e-6;
  std::size_t order = kDefaultOrder;
  std::uint64_t seed = 42;
};

std::vector<RadiusResult> cmd_radius(const RadiusOptions& options);
/// CSV "a,empirical,closed,discrepancy"; a is nan for family-wide rows.
void write_radius_csv(const std::vector<RadiusResult>& rows, std::ostream& out);

nlohmann::json witness_to_json(FunctionalId id, double r, const Witness& w);

struct CarlsonOptions {
  int samples = 1000;
  int degrees = 8;
  std::size_t order = kDefaultOrder;
  std::uint64_t seed = 42;
  std::size_t max_n = 10;
};

/// Odd/even slacks over random Blaschke and Schur corpora plus the constant 1,
/// then the equality suite (Mobius even case and constructed rational extremals).
VerificationReport cmd_carlson(const CarlsonOptions& options);

}  // namespace bohr
