#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

namespace pgc::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// ---- configuration -------------------------------------------------------

double number(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError(std::string(key) + " must be a number");
  return v.get<double>();
}

template <class Int>
Int integer(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ConfigError(std::string(key) + " must be an integer");
  }
  if constexpr (std::is_unsigned_v<Int>) {
    if (v.is_number_integer() && v.get<std::int64_t>() < 0) {
      throw ConfigError(std::string(key) + " negative");
    }
  }
  return v.get<Int>();
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const std::string& where) {
  const std::set<std::string> ok(known.begin(), known.end());
  for (const auto& [k, v] : j.items()) {
    if (!ok.contains(k)) throw ConfigError("unknown key '" + where + k + "'");
  }
}

Unit parse_unit(const std::string& s) {
  if (s == "bits") return Unit::Bits;
  if (s == "nats") return Unit::Nats;
  throw ConfigError("unit must be bits or nats");
}

double unit_scale(Unit u) { return u == Unit::Nats ? kLn2 : 1.0; }
const char* unit_name(Unit u) { return u == Unit::Nats ? "nats" : "bits"; }

// ---- serialization -------------------------------------------------------

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const ChannelConfig& c) {
  return {{"eta1", c.eta1}, {"eta2", c.eta2}, {"p0", c.p0}, {"p1", c.p1},
          {"p2", c.p2},     {"q1", c.q1},     {"q2", c.q2}};
}

json to_json(const HelperStrategy& s) {
  return {{"alpha11", num(s.alpha11)}, {"alpha12", num(s.alpha12)}, {"alpha20", num(s.alpha20)},
          {"alpha21", num(s.alpha21)}, {"alpha22", num(s.alpha22)}, {"beta1", num(s.beta1)},
          {"beta2", num(s.beta2)},     {"gamma", num(s.gamma)}};
}

json to_json(const OptimizerBudget& b) {
  return {{"rho_grid", b.rho_grid},
          {"gamma_grid", b.gamma_grid},
          {"max_iterations", b.max_iterations},
          {"restarts", b.restarts}};
}

const char* projection_name(Projection p) {
  switch (p) {
    case Projection::None: return "none";
    case Projection::R1Axis: return "r1_axis";
    case Projection::R2Axis: return "r2_axis";
  }
  return "none";
}

json witness_json(const Witness& w, double scale) {
  json j = {{"rho1", w.rho.rho1},
            {"rho2", w.rho.rho2},
            {"beta1", w.beta1},
            {"beta2", w.beta2},
            {"gamma", w.gamma},
            {"class", std::string(to_string(w.cls))},
            {"evidence",
             {{"f_dpc", num(w.evidence.f_dpc * scale)},
              {"g_dpc", num(w.evidence.g_dpc * scale)},
              {"f_cancel", num(w.evidence.f_cancel * scale)},
              {"g_cancel", num(w.evidence.g_cancel * scale)}}}};
  j["rate"] = w.rate ? num(*w.rate * scale) : json(nullptr);
  return j;
}

json segment_json(const UserSegment& s, double scale) {
  return {{"class", std::string(to_string(s.cls))},
          {"rate", s.rate ? num(*s.rate * scale) : json(nullptr)},
          {"witness", s.witness ? witness_json(*s.witness, scale) : json(nullptr)},
          {"best_a_rate", s.best_a_rate ? num(*s.best_a_rate * scale) : json(nullptr)},
          {"reference", witness_json(s.reference, scale)},
          {"witness_counts", {{"A", s.witnesses_a}, {"B", s.witnesses_b}, {"C", s.witnesses_c}}}};
}

json segments_json(const SegmentReport& r, double scale) {
  return {{"user1", segment_json(r.user1, scale)}, {"user2", segment_json(r.user2, scale)}};
}

json mc_json(const McReport& r) {
  return {{"samples", r.samples},
          {"seed", r.seed},
          {"max_abs_error", r.max_abs_error},
          {"max_rel_error", r.max_rel_error},
          {"tol_rel", r.tol_rel},
          {"pass", r.pass}};
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + p.string());
  f << text;
  if (!f) throw ConfigError("cannot write " + p.string());
}

void write_json(const fs::path& p, const json& j) { write_text(p, j.dump(2) + "\n"); }

template <class Source>
std::string polyline_csv(const RegionBoundary<Source>& b, Unit u) {
  const double scale = unit_scale(u);
  std::string out = std::string("r1_") + unit_name(u) + ",r2_" + unit_name(u) + "\n";
  char buf[64];
  for (const auto& v : b.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v.rate.r1 * scale, v.rate.r2 * scale);
    out += buf;
  }
  return out;
}

void ensure_dir(const fs::path& d) {
  std::error_code ec;
  fs::create_directories(d, ec);
  if (ec || !fs::is_directory(d)) throw ConfigError("cannot create output directory " + d.string());
}

// ---- plot ----------------------------------------------------------------

struct Curve {
  std::vector<RatePair> pts;
  const char* color;
  const char* label;
  const char* dash;
};

template <class Source>
std::vector<RatePair> points_of(const RegionBoundary<Source>& b, double scale) {
  std::vector<RatePair> out;
  out.reserve(b.size());
  for (const auto& v : b.vertices) out.push_back({v.rate.r1 * scale, v.rate.r2 * scale});
  return out;
}

std::string region_svg(const std::vector<Curve>& curves, Unit u) {
  double xmax = 0.0, ymax = 0.0;
  for (const auto& c : curves) {
    for (const auto& p : c.pts) {
      xmax = std::max(xmax, p.r1);
      ymax = std::max(ymax, p.r2);
    }
  }
  const double top = std::max({xmax, ymax, 1e-3}) * 1.05;
  const double x0 = 70, y0 = 430, w = 400, h = 380;
  auto px = [&](double r) { return x0 + w * r / top; };
  auto py = [&](double r) { return y0 - h * r / top; };
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"500\" viewBox=\"0 0 520 500\">\n"
    << "<rect width=\"520\" height=\"500\" fill=\"white\"/>\n"
    << "<g stroke=\"black\" stroke-width=\"1\">"
    << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 + w << "\" y2=\"" << y0 << "\"/>"
    << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y0 - h << "\"/></g>\n"
    << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double r = top * i / 5.0;
    s << "<text x=\"" << px(r) << "\" y=\"" << y0 + 16 << "\" text-anchor=\"middle\">" << r << "</text>"
      << "<text x=\"" << x0 - 6 << "\" y=\"" << py(r) + 4 << "\" text-anchor=\"end\">" << r << "</text>\n";
  }
  s << "<text x=\"" << x0 + w / 2 << "\" y=\"" << y0 + 38 << "\" text-anchor=\"middle\">R1 [" << unit_name(u)
    << "]</text>\n"
    << "<text x=\"18\" y=\"" << y0 - h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
    << y0 - h / 2 << ")\">R2 [" << unit_name(u) << "]</text>\n";
  int row = 0;
  for (const auto& c : curves) {
    const double ly = 30 + 16 * row++;
    s << "<line x1=\"360\" y1=\"" << ly << "\" x2=\"385\" y2=\"" << ly << "\" stroke=\"" << c.color
      << "\" stroke-width=\"2\" stroke-dasharray=\"" << c.dash << "\"/><text x=\"392\" y=\"" << ly + 4
      << "\">" << c.label << "</text>\n";
  }
  s << "</g>\n";
  for (const auto& c : curves) {
    if (c.pts.empty()) continue;
    // close the curve onto both axes
    std::vector<RatePair> pts;
    pts.push_back({0.0, c.pts.front().r2});
    pts.insert(pts.end(), c.pts.begin(), c.pts.end());
    pts.push_back({c.pts.back().r1, 0.0});
    s << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"2\" stroke-dasharray=\"" << c.dash
      << "\" points=\"";
    // thin very dense polylines for display
    const std::size_t stride = std::max<std::size_t>(1, pts.size() / 2000);
    for (std::size_t i = 0; i < pts.size(); i += stride) s << px(pts[i].r1) << "," << py(pts[i].r2) << " ";
    s << px(pts.back().r1) << "," << py(pts.back().r2) << "\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

// ---- verification --------------------------------------------------------

struct Worst {
  double value = 0.0;
  void add(double d) {
    if (std::isnan(d)) d = std::numeric_limits<double>::infinity();
    value = std::max(value, d);
  }
};

double diff(double a, double b) {
  if (a == b) return 0.0;  // equal infinities
  return std::abs(a - b);
}

// ---- mc strategy grid ----------------------------------------------------

struct NamedStrategy {
  std::string label;
  HelperStrategy strategy;
};

std::vector<NamedStrategy> mc_strategy_grid(const ChannelConfig& cfg) {
  std::vector<NamedStrategy> out;
  auto add = [&](std::string label, CorrelationPoint rho, double gamma, bool cancel) {
    if (cfg.p0 <= 0.0) rho = {};
    HelperStrategy s = strategy_from_rho(cfg, rho, gamma);
    s = cancel ? with_cancel_alphas(cfg, s) : with_dpc_alphas(cfg, s);
    out.push_back({std::move(label), s});
  };
  add("rho=(0,0) gamma=1 dpc", {0.0, 0.0}, 1.0, false);
  add("rho=(0,0) gamma=0.5 dpc", {0.0, 0.0}, 0.5, false);
  add("rho=(-0.4,0.3) gamma=0.3 cancel", {-0.4, 0.3}, 0.3, true);
  add("rho=(0.5,-0.5) gamma=0.8 dpc", {0.5, -0.5}, 0.8, false);
  return out;
}

}  // namespace

// ---- public --------------------------------------------------------------

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j, {"eta1", "eta2", "p0", "p1", "p2", "q1", "q2", "directions", "rho_grid", "budget", "unit", "mc"},
                 "");
  RunConfig rc;
  try {
    for (const char* k : {"eta1", "eta2", "p0", "p1", "p2", "q1", "q2"}) {
      if (!j.contains(k)) throw ConfigError(std::string("missing key '") + k + "'");
    }
    rc.channel = validate_config(number(j, "eta1"), number(j, "eta2"), number(j, "p0"), number(j, "p1"),
                                 number(j, "p2"), number(j, "q1"), number(j, "q2"));
    if (j.contains("directions")) rc.directions = integer<int>(j, "directions");
    if (j.contains("rho_grid")) rc.rho_grid = integer<int>(j, "rho_grid");
    if (rc.directions < 8) throw ConfigError("directions must be at least 8");
    if (rc.rho_grid < 8) throw ConfigError("rho_grid must be at least 8");
    if (j.contains("budget")) {
      const auto& b = j["budget"];
      if (!b.is_object()) throw ConfigError("budget must be an object");
      reject_unknown(b, {"rho_grid", "gamma_grid", "max_iterations", "restarts"}, "budget.");
      if (b.contains("rho_grid")) rc.budget.rho_grid = integer<int>(b, "rho_grid");
      if (b.contains("gamma_grid")) rc.budget.gamma_grid = integer<int>(b, "gamma_grid");
      if (b.contains("max_iterations")) rc.budget.max_iterations = integer<int>(b, "max_iterations");
      if (b.contains("restarts")) rc.budget.restarts = integer<int>(b, "restarts");
      validate_budget(rc.budget);
    }
    if (j.contains("unit")) {
      if (!j["unit"].is_string()) throw ConfigError("unit must be bits or nats");
      rc.unit = parse_unit(j["unit"].get<std::string>());
    }
    if (j.contains("mc")) {
      const auto& m = j["mc"];
      if (!m.is_object()) throw ConfigError("mc must be an object");
      reject_unknown(m, {"n", "seed", "tol"}, "mc.");
      if (m.contains("n")) rc.mc.n = integer<std::uint64_t>(m, "n");
      if (m.contains("seed")) rc.mc.seed = integer<std::uint64_t>(m, "seed");
      if (m.contains("tol")) rc.mc.tol = number(m, "tol");
      if (rc.mc.n < 2) throw ConfigError("mc.n must be at least 2");
      if (!(rc.mc.tol > 0.0)) throw ConfigError("mc.tol must be positive");
    }
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return rc;
}

RunConfig load_run_config(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config " + path.string());
  std::ostringstream s;
  s << f.rdbuf();
  return parse_run_config(s.str());
}

std::vector<CheckResult> verify_sweep(std::optional<ChannelConfig> fixed, std::size_t count, std::uint64_t seed,
                                      const Formulas& fm) {
  CaseGenerator gen(seed);
  Worst oracle, reduction, cancellation, tightness, sum_rate, chain_rule;
  for (std::size_t i = 0; i < count; ++i) {
    const ChannelConfig cfg = fixed ? *fixed : gen.config();
    const HelperStrategy s = gen.strategy(cfg);

    const auto t = remark1_terms(build_joint_covariance(cfg, s));
    oracle.add(diff(fm.f(1, cfg, s), t.dpc1));
    oracle.add(diff(fm.g(1, cfg, s), t.dec1));
    oracle.add(diff(fm.f(2, cfg, s), t.dpc2));
    oracle.add(diff(fm.g(2, cfg, s), t.dec2));

    const auto dpc = with_dpc_alphas(cfg, s);
    reduction.add(diff(fm.reduced(1, cfg, s.beta1, s.beta2, s.gamma), fm.f(1, cfg, dpc)));
    reduction.add(diff(fm.reduced(2, cfg, s.beta1, s.beta2, s.gamma), fm.f(2, cfg, dpc)));

    HelperStrategy c1 = s;
    c1.gamma = 1.0;
    c1 = with_cancel_alphas(cfg, c1);
    cancellation.add(diff(fm.g(1, cfg, c1), half_log2(1.0 + cfg.p1)));
    cancellation.add(diff(fm.g(2, cfg, with_cancel_alphas(cfg, s)), half_log2(1.0 + cfg.p2)));

    const auto rho = rho_from_beta(cfg, s.beta1, s.beta2);
    tightness.add(diff(fm.reduced(1, cfg, s.beta1, s.beta2, 1.0), outer_first_term(1, cfg, rho)));
    tightness.add(diff(fm.reduced(2, cfg, s.beta1, s.beta2, 0.0), outer_first_term(2, cfg, rho)));

    const auto p2 = prop2_bounds(cfg, s);
    sum_rate.add(std::max(0.0, std::min(fm.f(1, cfg, s), fm.g(1, cfg, s)) +
                                   std::min(fm.f(2, cfg, s), fm.g(2, cfg, s)) - p2.bsum));

    using enum Var;
    const auto cov = build_joint_covariance(cfg, s);
    chain_rule.add(diff(gaussian_mi(cov, {V}, {U, S1, S2}),
                        gaussian_mi(cov, {V}, {S1, S2}) + gaussian_cmi(cov, {V}, {U}, {S1, S2})));
  }
  return {{"closed_form_vs_oracle", oracle.value, 1e-9, count},
          {"reduced_form", reduction.value, 1e-9, count},
          {"cancellation", cancellation.value, 1e-12, count},
          {"tightness", tightness.value, 1e-9, count},
          {"remark1_within_prop2", sum_rate.value, 1e-9, count},
          {"chain_rule", chain_rule.value, 1e-9, count}};
}

RegionFiles run_region(const RunConfig& rc, const fs::path& out_dir) {
  ensure_dir(out_dir);
  const auto& cfg = rc.channel;
  const double scale = unit_scale(rc.unit);
  const auto outer = outer_region_boundary(cfg, rc.rho_grid);
  const auto inner = inner_region_boundary(cfg, rc.directions, rc.budget);
  const auto ts = time_sharing_boundary(cfg, 4 * rc.rho_grid, rc.budget);
  const auto segments = capacity_segments(cfg, rc.budget);

  RegionFiles files{out_dir / "outer.csv", out_dir / "inner.csv", out_dir / "ts.csv", out_dir / "report.json",
                    out_dir / "region.svg"};
  write_text(files.outer_csv, polyline_csv(outer.frontier, rc.unit));
  write_text(files.inner_csv, polyline_csv(inner, rc.unit));
  write_text(files.ts_csv, polyline_csv(ts, rc.unit));

  const double diag = std::numbers::pi / 4;
  json provenance = json::array();
  for (const auto& v : inner.vertices) {
    provenance.push_back({{"r1", v.rate.r1 * scale},
                          {"r2", v.rate.r2 * scale},
                          {"strategy", to_json(v.source.strategy)},
                          {"helper_power", v.source.helper_power},
                          {"roles_swapped", v.source.swapped},
                          {"projection", projection_name(v.projection)}});
  }
  json hull = json::array();
  for (const auto& v : outer.convex_hull.vertices) hull.push_back({v.rate.r1 * scale, v.rate.r2 * scale});

  const double in45 = scalarized_max(inner, diag), ts45 = scalarized_max(ts, diag);
  const double out45 = scalarized_max(outer.frontier, diag);
  json report = {
      {"config", to_json(cfg)},
      {"unit", unit_name(rc.unit)},
      {"resolution", {{"directions", rc.directions}, {"rho_grid", rc.rho_grid}, {"budget", to_json(rc.budget)}}},
      {"segments", segments_json(segments, scale)},
      {"gaps",
       {{"inner_minus_ts_45", (in45 - ts45) * scale},
        {"outer_minus_inner_45", (out45 - in45) * scale},
        {"inner_outside_outer", max_excess(inner, outer.frontier) * scale},
        {"outer_convexification_gap", outer.convexification_gap * scale},
        {"inner_max", {inner.max_r1() * scale, inner.max_r2() * scale}},
        {"outer_max", {outer.frontier.max_r1() * scale, outer.frontier.max_r2() * scale}}}},
      {"counts",
       {{"outer_vertices", outer.frontier.size()},
        {"outer_samples", outer.samples},
        {"inner_vertices", inner.size()},
        {"ts_vertices", ts.size()}}},
      {"outer_convex_hull", hull},
      {"provenance", provenance}};
  write_json(files.report_json, report);

  write_text(files.region_svg, region_svg({{points_of(outer.frontier, scale), "#c0392b", "outer bound", "none"},
                                           {points_of(inner, scale), "#2471a3", "inner bound", "none"},
                                           {points_of(ts, scale), "#7f8c8d", "time sharing", "6,4"}},
                                          rc.unit));
  return files;
}

fs::path run_classify(const RunConfig& rc, const fs::path& out_dir) {
  ensure_dir(out_dir);
  const auto segments = capacity_segments(rc.channel, rc.budget);
  json report = {{"config", to_json(rc.channel)},
                 {"unit", unit_name(rc.unit)},
                 {"segments", segments_json(segments, unit_scale(rc.unit))}};
  const auto path = out_dir / "report.json";
  write_json(path, report);
  return path;
}

bool run_mc(const RunConfig& rc, const fs::path& out_dir, std::ostream& log) {
  ensure_dir(out_dir);
  json entries = json::array();
  bool all = true;
  for (const auto& [label, s] : mc_strategy_grid(rc.channel)) {
    const auto r = covariance_check(rc.channel, s, rc.mc.n, rc.mc.seed, rc.mc.tol);
    all = all && r.pass;
    log << (r.pass ? "PASS " : "FAIL ") << label << "  max_rel_error=" << r.max_rel_error << "\n";
    entries.push_back({{"label", label}, {"strategy", to_json(s)}, {"report", mc_json(r)}});
  }
  write_json(out_dir / "mc_report.json",
             {{"config", to_json(rc.channel)}, {"strategies", entries}, {"pass", all}});
  return all;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const Formulas& formulas) {
  CLI::App app{"Inner and outer bounds for the helper-assisted parallel Gaussian channel", "pgc"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".", unit;
  std::size_t random_n = 1000;
  std::uint64_t seed = 1;
  auto common = [&](CLI::App* sub, bool config_required) {
    auto* c = sub->add_option("--config", config_path, "JSON run configuration");
    if (config_required) c->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--unit", unit, "rate unit")->check(CLI::IsMember({"bits", "nats"}));
  };
  auto* region = app.add_subcommand("region", "trace inner, outer and time-sharing boundaries");
  common(region, true);
  auto* verify = app.add_subcommand("verify", "closed-form and identity checks");
  common(verify, false);
  verify->add_option("--random", random_n, "number of random cases")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");
  auto* classify = app.add_subcommand("classify", "classify capacity-boundary segments");
  common(classify, true);
  auto* mcsub = app.add_subcommand("mc", "Monte Carlo covariance check");
  common(mcsub, true);
  auto* mc_seed = mcsub->add_option("--seed", seed, "random seed (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    std::optional<RunConfig> rc;
    if (!config_path.empty()) rc = load_run_config(config_path);
    if (rc && !unit.empty()) rc->unit = parse_unit(unit);

    if (region->parsed()) {
      const auto f = run_region(*rc, out_dir);
      out << "wrote " << f.outer_csv.string() << ", " << f.inner_csv.string() << ", " << f.ts_csv.string() << ", "
          << f.report_json.string() << ", " << f.region_svg.string() << "\n";
      return 0;
    }
    if (classify->parsed()) {
      const auto p = run_classify(*rc, out_dir);
      out << "wrote " << p.string() << "\n";
      return 0;
    }
    if (mcsub->parsed()) {
      if (mc_seed->count() > 0) rc->mc.seed = seed;
      const bool ok = run_mc(*rc, out_dir, out);
      out << (ok ? "mc: pass" : "mc: FAIL") << "\n";
      return ok ? 0 : 1;
    }
    // verify
    std::optional<ChannelConfig> fixed;
    if (rc) fixed = rc->channel;
    const auto results = verify_sweep(fixed, random_n, seed, formulas);
    bool ok = true;
    char line[160];
    for (const auto& r : results) {
      std::snprintf(line, sizeof line, "%-4s %-24s worst=%.3e tol=%.0e cases=%zu\n", r.pass() ? "PASS" : "FAIL",
                    r.name.c_str(), r.worst, r.tol, r.cases);
      out << line;
      ok = ok && r.pass();
    }
    out << (ok ? "verify: pass" : "verify: FAIL") << "\n";
    return ok ? 0 : 1;
  } catch (const ConfigError& e) {
    err << "pgc: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "pgc: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pgc::cli
