#include "bohr/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "bohr/carlson.hpp"
#include "bohr/errors.hpp"
#include "bohr/spec_json.hpp"
#include "parallel.hpp"

namespace bohr {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (;;) {
    const auto end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
    if (end == std::string_view::npos) return parts;
    begin = end + 1;
  }
}

double parse_double(std::string_view s) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(x)) {
    throw ParseError("expected a number, got \"" + std::string(s) + "\"");
  }
  return x;
}

long parse_int(std::string_view s) {
  long x = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer, got \"" + std::string(s) + "\"");
  }
  return x;
}

int positive(std::string_view s, const char* what) {
  const long v = parse_int(s);
  if (v < 1 || v > 1'000'000) throw ParseError(std::string(what) + " must be a positive integer");
  return static_cast<int>(v);
}

// Per-sample seed and size for the random families.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t i) { return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (i + 1)); }
int sample_size(std::uint64_t s, int max_size) { return 1 + static_cast<int>(splitmix64(s) % static_cast<std::uint64_t>(max_size)); }

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json enclosure_json(const Enclosure& e) { return json::array({e.lower, e.upper}); }

ReportRow functional_row(const FunctionalValue& v, const json& spec, std::size_t order) {
  ReportRow row;
  row.id = std::string(to_string(v.id));
  row.spec = spec;
  row.r = v.r;
  row.value = v.value;
  row.threshold = v.threshold;
  row.margin = v.margin;
  row.verdict = std::string(to_string(classify(v)));
  row.order = order;
  return row;
}

ReportRow error_row(std::string id, const json& spec, std::optional<double> r, const Error& e, std::size_t order) {
  ReportRow row;
  row.id = std::move(id);
  row.spec = spec;
  row.r = r;
  row.verdict = "error";
  row.note = std::string(e.kind()) + ": " + e.what();
  row.order = order;
  return row;
}

ReportRow slack_row(const char* id, const json& spec, const CarlsonSlack& s, std::string kind, bool ok,
                    std::size_t order) {
  ReportRow row;
  row.id = id;
  row.spec = spec;
  row.kind = std::move(kind);
  row.index = s.index;
  row.bound = s.bound;
  row.observed = s.observed;
  row.margin = s.slack;
  row.verdict = ok ? "pass" : "fail";
  row.order = order;
  return row;
}

std::optional<double> worst(const std::vector<ReportRow>& rows) {
  std::optional<double> w;
  for (const auto& row : rows) {
    if (row.margin && (!w || *row.margin < *w)) w = row.margin;
  }
  return w;
}

}  // namespace

std::string version_string() { return std::string("bohrcheck ") + BOHR_VERSION_STRING; }

std::vector<BoundedFunctionSpec> make_family(std::string_view name, std::uint64_t seed) {
  const auto parts = split(name, ':');
  const auto kind = parts.front();
  const auto arg = [&](std::size_t i) -> std::string_view {
    if (i >= parts.size()) throw ParseError("family \"" + std::string(name) + "\" is missing arguments");
    return parts[i];
  };
  const auto max_parts = [&](std::size_t n) {
    if (parts.size() > n) throw ParseError("family \"" + std::string(name) + "\" has too many arguments");
  };

  std::vector<BoundedFunctionSpec> out;
  if (kind == "constant") {
    max_parts(1);
    out.emplace_back(Constant{});
  } else if (kind == "identity") {
    max_parts(1);
    out.emplace_back(Monomial{1});
  } else if (kind == "monomial") {
    max_parts(2);
    const long k = parse_int(arg(1));
    if (k < 0) throw ParseError("monomial degree must be >= 0");
    out.emplace_back(Monomial{static_cast<unsigned>(k)});
  } else if (kind == "mobius") {
    max_parts(2);
    out = mobius_grid(positive(arg(1), "count"));
  } else if (kind == "mobius_edge") {
    max_parts(2);
    out = mobius_edge_grid(positive(arg(1), "count"));
  } else if (kind == "shifted_mobius") {
    if (parts.size() == 2) {
      const int count = positive(arg(1), "count");
      for (int k = 0; k < count; ++k) out.emplace_back(ShiftedMobius{static_cast<double>(k) / count});
    } else {
      max_parts(4);
      const double lo = parse_double(arg(1));
      const double hi = parse_double(arg(2));
      const int count = positive(arg(3), "count");
      for (int k = 0; k < count; ++k) {
        out.emplace_back(ShiftedMobius{count == 1 ? lo : lo + (hi - lo) * k / (count - 1)});
      }
    }
  } else if (kind == "blaschke" || kind == "zblaschke" || kind == "schur" || kind == "zschur") {
    max_parts(3);
    const int samples = positive(arg(1), "sample count");
    const int max_size = parts.size() > 2 ? positive(arg(2), "maximum degree") : 8;
    const bool blaschke = kind.ends_with("blaschke");
    const bool at_origin = kind.front() == 'z';
    for (int i = 0; i < samples; ++i) {
      const auto s = sample_seed(seed, static_cast<std::size_t>(i));
      const int size = sample_size(s, max_size);
      auto spec = blaschke ? random_blaschke(size, s) : random_schur(size, s);
      if (at_origin) {
        if (auto* b = std::get_if<Blaschke>(&spec)) b->zeros.front() = 0.0;
        if (auto* sc = std::get_if<Schur>(&spec)) sc->params.front() = 0.0;
      }
      out.push_back(std::move(spec));
    }
  } else {
    throw ParseError("unknown family \"" + std::string(name) + "\"");
  }
  for (const auto& s : out) validate(s);
  return out;
}

Grid Grid::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ParseError("grid must look like start:stop:count, got \"" + std::string(text) + "\"");
  Grid g;
  g.start = parse_double(parts[0]);
  if (parts[1] != "R" && parts[1] != "r") g.stop = parse_double(parts[1]);
  g.count = positive(parts[2], "grid count");
  if (!(g.start >= 0.0 && g.start <= kMaxRadius)) throw DomainError("grid start must lie in [0, 0.95]");
  if (g.stop && !(*g.stop >= g.start && *g.stop <= kMaxRadius)) {
    throw DomainError("grid stop must lie in [start, 0.95]");
  }
  return g;
}

std::vector<double> Grid::points(double radius) const {
  const double cap = std::min(radius, kMaxRadius);
  const double end = stop.value_or(cap);
  std::vector<double> out;
  if (end < start) return out;
  for (int k = 0; k < count; ++k) {
    const double r = count == 1 ? start : (k == count - 1 ? end : start + (end - start) * k / (count - 1));
    if (r <= cap) out.push_back(r);
  }
  return out;
}

std::vector<double> Grid::points() const {
  if (!stop) throw ParseError("this grid needs a numeric stop");
  return points(*stop);
}

json ReportRow::to_json() const {
  json j;
  j["id"] = id;
  j["kind"] = kind;
  j["spec"] = spec;
  j["verdict"] = verdict;
  j["order"] = order;
  if (r) j["r"] = *r;
  if (value) j["value"] = enclosure_json(*value);
  if (threshold) j["threshold"] = enclosure_json(*threshold);
  if (index) j["index"] = *index;
  if (bound) j["bound"] = *bound;
  if (observed) j["observed"] = *observed;
  if (margin) j["margin"] = *margin;
  if (!note.empty()) j["note"] = note;
  return j;
}

std::map<std::string, std::size_t> VerificationReport::counts() const {
  std::map<std::string, std::size_t> c{{"pass", 0}, {"fail", 0}, {"inconclusive", 0}, {"error", 0}};
  for (const auto& row : rows) ++c[row.verdict];
  return c;
}

json VerificationReport::to_json() const {
  json rows_json = json::array();
  for (const auto& row : rows) rows_json.push_back(row.to_json());
  json summary;
  summary["counts"] = counts();
  summary["rows"] = rows.size();
  summary["worst_margin"] = worst_margin ? json(*worst_margin) : json(nullptr);
  summary["order"] = order;
  summary["seed"] = seed;
  summary["mode"] = mode == Mode::Rigorous ? "rigorous" : "fast";
  summary["rigorous"] = mode == Mode::Rigorous;
  summary["skipped_points"] = skipped_points;
  summary["schema"] = kReportSchema;
  return {{"campaign", campaign}, {"summary", summary}, {"rows", rows_json}, {"version", version_string()}};
}

int VerificationReport::exit_status() const {
  const auto c = counts();
  if (c.at("fail") > 0 || c.at("error") > 0) return 1;
  if (c.at("inconclusive") > 0) return 2;
  return 0;
}

void write_report(const VerificationReport& report, std::ostream& out) { out << report.to_json().dump(2) << '\n'; }

VerificationReport cmd_verify(const VerifyOptions& options) {
  const auto specs = make_family(options.family, options.seed);
  const auto grid = Grid::parse(options.grid);
  const FunctionalId id = options.theorem;

  std::vector<std::vector<ReportRow>> per_spec(specs.size());
  std::vector<std::size_t> skipped(specs.size(), 0);
  detail::parallel_for(specs.size(), [&](std::size_t i) {
    const json spec_json = spec_to_json(specs[i]);
    auto& rows = per_spec[i];
    CoeffSeries f = expand(specs[i], options.order);
    const double radius = sharp_radius_for(id, f);
    const auto points = grid.points(radius);
    const std::size_t requested = static_cast<std::size_t>(grid.count);
    skipped[i] = requested > points.size() ? requested - points.size() : 0;
    for (double r : points) {
      try {
        auto v = eval_functional(id, f, r, options.mode);
        while (options.mode == Mode::Rigorous && classify(v) == Verdict::Inconclusive &&
               f.order() < options.max_order) {
          f = expand(specs[i], std::min(options.max_order, 2 * f.order()));
          v = eval_functional(id, f, r, options.mode);
        }
        rows.push_back(functional_row(v, spec_json, f.order()));
      } catch (const ConstraintViolation& e) {
        rows.push_back(error_row(std::string(to_string(id)), spec_json, r, e, f.order()));
      }
    }
  });

  VerificationReport report;
  report.campaign = "verify " + std::string(to_string(id)) + " " + options.family + " grid=" + options.grid;
  report.order = options.order;
  report.seed = options.seed;
  report.mode = options.mode;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    report.skipped_points += skipped[i];
    for (auto& row : per_spec[i]) report.rows.push_back(std::move(row));
  }
  report.worst_margin = worst(report.rows);
  return report;
}

void cmd_coeffs(const BoundedFunctionSpec& spec, std::size_t order, std::ostream& out) {
  const auto f = expand(spec, order);
  out << "n,re,im,abs\n";
  for (std::size_t n = 0; n <= f.order(); ++n) {
    out << n << ',' << fmt17(f[n].real()) << ',' << fmt17(f[n].imag()) << ',' << fmt17(std::abs(f[n])) << '\n';
  }
}

std::vector<RadiusResult> cmd_radius(const RadiusOptions& options) {
  const FunctionalId id = options.theorem;
  BisectOptions bisect;
  bisect.tol = options.tol;
  bisect.order = options.order;

  if (options.family.empty() && (id == FunctionalId::T2A || id == FunctionalId::T3C)) {
    const std::string text = options.grid.empty() ? (id == FunctionalId::T3C ? "0:0.98:50" : "0:0.9:10") : options.grid;
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ParseError("parameter grid must look like start:stop:count");
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    const int count = positive(parts[2], "grid count");
    std::vector<double> a_grid;
    for (int k = 0; k < count; ++k) a_grid.push_back(count == 1 ? lo : (k == count - 1 ? hi : lo + (hi - lo) * k / (count - 1)));
    return radius_curve(a_grid, bisect, id);
  }

  std::string family = options.family;
  if (family.empty()) {
    switch (id) {
      case FunctionalId::TA: family = "mobius_edge:200"; break;
      case FunctionalId::T2B: family = "mobius:200"; break;
      // Dense around c(3/5) = 1/3, the parameter of the extremal at r = 3/5.
      case FunctionalId::T3A: family = "shifted_mobius:0.28333333333333333:0.38333333333333333:101"; break;
      case FunctionalId::T3B: family = "identity"; break;
      default: throw NoBracket("T1 has no finite radius to recover");
    }
  }
  const auto specs = make_family(family, options.seed);
  return {bisect_radius(id, specs, bisect, family)};
}

void write_radius_csv(const std::vector<RadiusResult>& rows, std::ostream& out) {
  out << "a,empirical,closed,discrepancy\n";
  for (const auto& row : rows) {
    out << (std::isnan(row.parameter) ? std::string("nan") : fmt17(row.parameter)) << ',' << fmt17(row.empirical) << ','
        << fmt17(row.closed_form) << ',' << fmt17(row.discrepancy) << '\n';
  }
}

json witness_to_json(FunctionalId id, double r, const Witness& w) {
  return {{"theorem", std::string(to_string(id))},
          {"r", r},
          {"radius", w.radius},
          {"spec", spec_to_json(w.spec)},
          {"value", w.value},
          {"exceeds", w.value > 1.0},
          {"version", version_string()}};
}

VerificationReport cmd_carlson(const CarlsonOptions& options) {
  std::vector<BoundedFunctionSpec> corpus;
  const std::string samples = std::to_string(options.samples);
  const std::string degrees = std::to_string(options.degrees);
  for (auto& s : make_family("blaschke:" + samples + ":" + degrees, options.seed)) corpus.push_back(std::move(s));
  for (auto& s : make_family("schur:" + samples + ":" + degrees, options.seed)) corpus.push_back(std::move(s));
  corpus.emplace_back(Constant{});

  std::vector<std::vector<ReportRow>> per_spec(corpus.size());
  detail::parallel_for(corpus.size(), [&](std::size_t i) {
    const auto f = expand(corpus[i], options.order);
    const json spec_json = spec_to_json(corpus[i]);
    for (std::size_t n = 0; n <= options.max_n && 2 * n + 1 <= f.order(); ++n) {
      const auto s = odd_slack(f, n);
      per_spec[i].push_back(slack_row("carlson_odd", spec_json, s, "bound", s.holds(), f.order()));
    }
    for (std::size_t n = 1; n <= options.max_n && 2 * n <= f.order(); ++n) {
      const auto s = even_slack(f, n);
      per_spec[i].push_back(slack_row("carlson_even", spec_json, s, "bound", s.holds(), f.order()));
    }
  });

  VerificationReport report;
  report.campaign = "carlson samples=" + samples + " degrees=" + degrees;
  report.order = options.order;
  report.seed = options.seed;
  for (auto& rows : per_spec) {
    for (auto& row : rows) report.rows.push_back(std::move(row));
  }

  // Equality suite.
  for (int k = 0; k < 10; ++k) {
    const BoundedFunctionSpec spec = Mobius{k / 10.0, 0.0};
    const auto s = even_slack(expand(spec, options.order), 1);
    report.rows.push_back(
        slack_row("carlson_even", spec_to_json(spec), s, "equality", std::abs(s.slack) <= kEqualityTolerance, options.order));
  }
  const auto equality_row = [&](const auto& spec, std::size_t target_index, const char* id) {
    try {
      const auto s = verify_equality_case(spec, options.order);
      report.rows.push_back(slack_row(id, spec_to_json(spec), s, "equality", true, options.order));
    } catch (const Error& e) {
      ReportRow row = error_row(id, spec_to_json(spec), std::nullopt, e, options.order);
      row.kind = "equality";
      row.index = target_index;
      if (dynamic_cast<const EqualityNotAttained*>(&e)) row.verdict = "fail";
      report.rows.push_back(std::move(row));
    }
  };
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto seed = sample_seed(options.seed ^ 0xca5150dULL, n);
    equality_row(random_carlson_odd(n, seed), 2 * n + 1, "carlson_odd");
    if (n >= 1) equality_row(random_carlson_even(n, seed), 2 * n, "carlson_even");
  }

  report.worst_margin = worst(report.rows);
  return report;
}

}  // namespace bohr
