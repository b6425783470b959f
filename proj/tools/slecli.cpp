// Command-line surface: closed-form evaluation, self-verification suites,
// Monte Carlo simulation reports, and CSV grid export. All machine output is
// JSON with stable key order; every payload carries a run manifest.
//
// Exit codes: 0 ok, 2 usage, 3 domain, 4 quality, 5 verification, 6 I/O.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sletwist/sletwist.hpp"

namespace {

using sletwist::cplx;
using ojson = nlohmann::ordered_json;

// ------------------------------------------------------------ arg parsing --

double parse_real_str(const std::string& key, const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw sletwist::contract_error("parameter '" + key + "': cannot parse '" + s +
                                   "' as a real number");
  }
  return v;
}

// complex forms: "re,im" cartesian, "r@theta" polar, bare real
cplx parse_complex_str(const std::string& key, const std::string& s) {
  const auto at = s.find('@');
  if (at != std::string::npos) {
    const double r = parse_real_str(key, s.substr(0, at));
    const double th = parse_real_str(key, s.substr(at + 1));
    return std::polar(r, th);
  }
  const auto comma = s.find(',');
  if (comma != std::string::npos) {
    return {parse_real_str(key, s.substr(0, comma)), parse_real_str(key, s.substr(comma + 1))};
  }
  return {parse_real_str(key, s), 0.0};
}

ojson cplx_json(cplx z) {
  ojson j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

// key=value positional arguments of `eval` and `grid`
class KvArgs {
 public:
  explicit KvArgs(const std::vector<std::string>& tokens) {
    for (const auto& t : tokens) {
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw sletwist::contract_error("expected key=value parameter, got '" + t + "'");
      }
      kv_[t.substr(0, eq)] = t.substr(eq + 1);
    }
  }

  bool has(const std::string& k) const { return kv_.count(k) != 0; }

  std::string raw(const std::string& k) {
    const auto it = kv_.find(k);
    if (it == kv_.end()) throw sletwist::contract_error("missing required parameter '" + k + "'");
    used_.insert(k);
    return it->second;
  }

  double real(const std::string& k) { return parse_real_str(k, raw(k)); }
  cplx complex_at(const std::string& k) { return parse_complex_str(k, raw(k)); }

  void finish(const std::string& formula) const {
    for (const auto& [k, v] : kv_) {
      if (!used_.count(k)) {
        throw sletwist::contract_error("unknown parameter '" + k + "' for formula '" + formula +
                                       "'");
      }
    }
  }

 private:
  std::map<std::string, std::string> kv_;
  std::set<std::string> used_;
};

// ---------------------------------------------------------------- manifest --

std::string iso_timestamp_utc() {
  const std::time_t tt = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ojson make_manifest(const std::string& command, const ojson& params, const ojson& seed) {
  ojson m;
  m["command"] = command;
  m["parameters"] = params;
  m["seed"] = seed;
  m["version"] = std::string("sletwist ") + sletwist::kVersion;
  m["timestamp"] = iso_timestamp_utc();
  return m;
}

void emit(const ojson& payload) { std::cout << payload.dump(2) << "\n"; }

// ------------------------------------------------------------------- eval --

struct EvalResult {
  ojson inputs;
  ojson payload;  // {"value": ...} or {"values": {...}}
  std::string units;
  std::vector<std::pair<std::string, double>> columns;  // grid CSV columns
};

void set_value(EvalResult& r, double v) {
  r.payload["value"] = v;
  r.columns.emplace_back("value", v);
}

void set_value(EvalResult& r, cplx v) {
  r.payload["value"] = cplx_json(v);
  r.columns.emplace_back("re", v.real());
  r.columns.emplace_back("im", v.imag());
}

EvalResult eval_formula(const std::string& formula, KvArgs& kv) {
  using namespace sletwist;
  EvalResult r;

  if (formula == "bulk-twist-4pt") {
    const cplx z1 = kv.complex_at("z1"), z2 = kv.complex_at("z2");
    const cplx z3 = kv.complex_at("z3"), z4 = kv.complex_at("z4");
    const double kappa = kv.real("kappa");
    r.inputs["z1"] = cplx_json(z1);
    r.inputs["z2"] = cplx_json(z2);
    r.inputs["z3"] = cplx_json(z3);
    r.inputs["z4"] = cplx_json(z4);
    r.inputs["kappa"] = kappa;
    r.units = "correlator";
    set_value(r, bulk_twist_4pt(z1, z2, z3, z4, kappa));
  } else if (formula == "sal-prob") {
    r.units = "probability";
    if (kv.has("config")) {
      const std::string cfg = kv.raw("config");
      if (cfg != "max") {
        throw contract_error("sal-prob: unknown config '" + cfg + "' (expected 'max')");
      }
      r.inputs["config"] = "max";
      set_value(r, sal_separation_prob_from_x(cplx(2.0, 0.0)));
    } else if (kv.has("x")) {
      const cplx x = kv.complex_at("x");
      r.inputs["x"] = cplx_json(x);
      set_value(r, sal_separation_prob_from_x(x));
    } else {
      const cplx z1 = kv.complex_at("z1"), z2 = kv.complex_at("z2");
      const cplx z3 = kv.complex_at("z3"), z4 = kv.complex_at("z4");
      r.inputs["z1"] = cplx_json(z1);
      r.inputs["z2"] = cplx_json(z2);
      r.inputs["z3"] = cplx_json(z3);
      r.inputs["z4"] = cplx_json(z4);
      set_value(r, sal_separation_prob(z1, z2, z3, z4));
    }
  } else if (formula == "mag-4pt") {
    const cplx x = kv.complex_at("x");
    r.inputs["x"] = cplx_json(x);
    r.units = "probability";
    set_value(r, magnetization_same_cluster(x));
  } else if (formula == "single-twist") {
    r.units = "correlator";
    if (kv.has("v")) {
      const double v = kv.real("v");
      r.inputs["v"] = v;
      set_value(r, boundary_single_twist_strip(v));
    } else {
      const cplx x = kv.complex_at("x");
      r.inputs["x"] = cplx_json(x);
      set_value(r, boundary_single_twist(x));
    }
  } else if (formula == "double-twist") {
    const double kappa = kv.real("kappa");
    r.units = "correlator";
    if (kv.has("v")) {
      const double v = kv.real("v");
      r.inputs["v"] = v;
      r.inputs["kappa"] = kappa;
      set_value(r, boundary_double_twist_strip(v, kappa));
    } else {
      const cplx x = kv.complex_at("x");
      r.inputs["x"] = cplx_json(x);
      r.inputs["kappa"] = kappa;
      set_value(r, boundary_double_twist(x, kappa));
    }
  } else if (formula == "schramm") {
    const double v = kv.real("v");
    r.inputs["v"] = v;
    r.units = "probability";
    set_value(r, schramm_left_passage(v));
  } else if (formula == "winding") {
    r.units = "probability";
    WindingDistribution p{};
    if (kv.has("sigma") || kv.has("vA") || kv.has("vB")) {
      const double vA = kv.real("vA"), vB = kv.real("vB"), sigma = kv.real("sigma");
      r.inputs["vA"] = vA;
      r.inputs["vB"] = vB;
      r.inputs["sigma"] = sigma;
      p = winding_probs(vA, vB, sigma);
    } else {
      const cplx zA = kv.complex_at("zA"), zB = kv.complex_at("zB");
      r.inputs["zA"] = cplx_json(zA);
      r.inputs["zB"] = cplx_json(zB);
      p = winding_probs_halfplane(zA, zB);
    }
    ojson vals;
    vals["p_ab"] = p.p_ab;
    vals["p_a"] = p.p_a;
    vals["p_b"] = p.p_b;
    vals["p_o"] = p.p_o;
    r.payload["values"] = vals;
    r.columns = {{"p_ab", p.p_ab}, {"p_a", p.p_a}, {"p_b", p.p_b}, {"p_o", p.p_o}};
  } else if (formula == "pll") {
    const cplx zA = kv.complex_at("zA"), zB = kv.complex_at("zB");
    r.inputs["zA"] = cplx_json(zA);
    r.inputs["zB"] = cplx_json(zB);
    r.units = "probability";
    set_value(r, pll_halfplane(zA, zB));
  } else if (formula == "percolation-6pt") {
    const cplx z = kv.complex_at("z");
    const double x1 = kv.real("x1"), x2 = kv.real("x2"), x3 = kv.real("x3"), x4 = kv.real("x4");
    r.inputs["z"] = cplx_json(z);
    r.inputs["x1"] = x1;
    r.inputs["x2"] = x2;
    r.inputs["x3"] = x3;
    r.inputs["x4"] = x4;
    r.units = "correlator";
    set_value(r, percolation_6pt(z, x1, x2, x3, x4));
  } else if (formula == "kac") {
    const double kappa = kv.real("kappa"), rr = kv.real("r"), ss = kv.real("s");
    r.inputs["kappa"] = kappa;
    r.inputs["r"] = rr;
    r.inputs["s"] = ss;
    r.units = "correlator";
    set_value(r, kac_weight(kappa, rr, ss));
  } else if (formula == "h-general") {
    const double sigma = kv.real("sigma"), rho = kv.real("rho"), rho_tau = kv.real("rho_tau");
    const double c1 = kv.real("c1"), c2 = kv.real("c2");
    r.inputs["sigma"] = sigma;
    r.inputs["rho"] = rho;
    r.inputs["rho_tau"] = rho_tau;
    r.inputs["c1"] = c1;
    r.inputs["c2"] = c2;
    r.units = "correlator";
    set_value(r, h_general(sigma, rho, rho_tau, c1, c2));
  } else {
    throw sletwist::contract_error(
        "unknown formula '" + formula +
        "' (expected one of: bulk-twist-4pt, sal-prob, mag-4pt, single-twist, double-twist, "
        "schramm, winding, pll, percolation-6pt, kac, h-general)");
  }
  kv.finish(formula);
  return r;
}

int cmd_eval(const std::string& formula, const std::vector<std::string>& params) {
  KvArgs kv(params);
  EvalResult r = eval_formula(formula, kv);
  ojson out;
  out["formula"] = formula;
  out["inputs"] = r.inputs;
  for (auto& [k, v] : r.payload.items()) out[k] = v;
  out["units"] = r.units;
  out["manifest"] = make_manifest("eval " + formula, r.inputs, nullptr);
  emit(out);
  return 0;
}

// --------------------------------------------------------------- simulate --

struct SimFlags {
  sletwist::SimConfig cfg;
  std::string z, zA, zB;
  std::string scheme = "tilted";
};

ojson sim_config_json(const sletwist::SimConfig& cfg, const std::string& scheme) {
  ojson j;
  j["kappa"] = cfg.kappa;
  j["n_samples"] = cfg.n_samples;
  j["n_steps"] = cfg.n_steps;
  j["total_time"] = cfg.total_time;
  j["seed"] = cfg.seed;
  j["escape_radius"] = cfg.escape_radius;
  j["angle_tolerance"] = cfg.angle_tolerance;
  j["max_extension_factor"] = cfg.max_extension_factor;
  j["scheme"] = scheme;
  j["schedule_power"] = cfg.schedule_power;
  j["threads"] = cfg.threads;
  return j;
}

int cmd_simulate(const std::string& mode, SimFlags& f) {
  using namespace sletwist;
  f.cfg.scheme = f.scheme == "vertical" ? StepScheme::vertical : StepScheme::tilted;

  if (mode == "left-passage") {
    if (f.z.empty()) throw contract_error("simulate left-passage: --z is required");
    const cplx z = parse_complex_str("z", f.z);
    const LeftPassageEstimate est = estimate_left_passage(z, f.cfg);
    const double pred = schramm_left_passage(std::arg(z));

    ojson inputs;
    inputs["z"] = cplx_json(z);
    const ojson cj = sim_config_json(resolve_total_time(f.cfg, std::abs(z)), f.scheme);
    for (const auto& [k, v] : cj.items()) inputs[k] = v;

    ojson out;
    out["mode"] = "left-passage";
    out["inputs"] = inputs;
    ojson emp;
    emp["p"] = est.p;
    emp["std_err"] = est.std_err;
    emp["n_decided"] = est.n_decided();
    emp["n_left"] = est.n_left;
    emp["n_right"] = est.n_right;
    emp["n_undecided"] = est.n_undecided;
    emp["undecided_fraction"] = est.undecided_fraction;
    emp["swallowed"] = est.swallowed;
    emp["newton_fallbacks"] = est.newton_fallbacks;
    out["empirical"] = emp;
    ojson prj;
    prj["p"] = pred;
    out["prediction"] = prj;
    out["z_score"] = est.std_err > 0.0 ? (est.p - pred) / est.std_err : 0.0;
    ojson wj;
    if (est.n_decided() > 0) {
      const WilsonInterval wi = wilson_interval(est.n_left, est.n_decided());
      wj["lo"] = wi.lo;
      wj["hi"] = wi.hi;
    } else {
      wj["lo"] = nullptr;
      wj["hi"] = nullptr;
    }
    out["wilson_95"] = wj;
    out["quality_ok"] = est.quality_ok();
    out["side_convention"] =
        "arg(w) near 0 after escape = curve passed left of z; empirical p matches cos^2(v/2)";
    out["manifest"] = make_manifest("simulate left-passage", inputs, f.cfg.seed);
    emit(out);
    return est.quality_ok() ? 0 : static_cast<int>(errc::quality);
  }

  if (mode == "winding") {
    if (f.zA.empty() || f.zB.empty())
      throw contract_error("simulate winding: --zA and --zB are required");
    const cplx zA = parse_complex_str("zA", f.zA);
    const cplx zB = parse_complex_str("zB", f.zB);
    const EmpiricalWinding emp = estimate_winding(zA, zB, f.cfg);
    const WindingDistribution pred = winding_probs_halfplane(zA, zB);

    ojson inputs;
    inputs["zA"] = cplx_json(zA);
    inputs["zB"] = cplx_json(zB);
    const double zmax = std::max(std::abs(zA), std::abs(zB));
    const ojson cj = sim_config_json(resolve_total_time(f.cfg, zmax), f.scheme);
    for (const auto& [k, v] : cj.items()) inputs[k] = v;

    static const char* bins[4] = {"ab", "a", "b", "o"};
    const auto fr = emp.fractions();
    const auto se = emp.std_errors();
    const std::vector<double> probs{pred.p_ab, pred.p_a, pred.p_b, pred.p_o};

    ojson out;
    out["mode"] = "winding";
    out["inputs"] = inputs;
    ojson ej;
    for (int k = 0; k < 4; ++k) ej[bins[k]] = emp.counts[std::size_t(k)];
    out["counts"] = ej;
    ojson fj, sj, pj, zj;
    for (int k = 0; k < 4; ++k) fj[bins[k]] = fr[std::size_t(k)];
    for (int k = 0; k < 4; ++k) sj[bins[k]] = se[std::size_t(k)];
    for (int k = 0; k < 4; ++k) pj[bins[k]] = probs[std::size_t(k)];
    out["fractions"] = fj;
    out["std_errors"] = sj;
    out["prediction"] = pj;
    out["n_decided"] = emp.n_decided();
    out["n_undecided"] = emp.undecided;
    out["undecided_fraction"] = emp.undecided_fraction();
    out["swallowed"] = emp.swallowed;
    out["newton_fallbacks"] = emp.newton_fallbacks;

    // a starved run (few decided samples) cannot support the test; report nulls
    ojson gj;
    try {
      const GofReport gof = chi_square_multinomial(
          {emp.counts[0], emp.counts[1], emp.counts[2], emp.counts[3]}, probs, emp.n_decided());
      for (int k = 0; k < 4; ++k) zj[bins[k]] = gof.z_scores[std::size_t(k)];
      gj["chi2"] = gof.chi2;
      gj["dof"] = gof.dof;
      gj["p_value"] = gof.p_value;
    } catch (const error&) {
      for (int k = 0; k < 4; ++k) zj[bins[k]] = nullptr;
      gj["chi2"] = nullptr;
      gj["dof"] = nullptr;
      gj["p_value"] = nullptr;
    }
    out["z_scores"] = zj;
    out["chi_square"] = gj;
    out["quality_ok"] = emp.quality_ok();
    out["side_convention"] =
        "bins: ab = curve left of both points, a = left of A only, b = left of B only, o = "
        "neither";
    out["manifest"] = make_manifest("simulate winding", inputs, f.cfg.seed);
    emit(out);
    return emp.quality_ok() ? 0 : static_cast<int>(errc::quality);
  }

  throw contract_error("simulate: unknown mode '" + mode + "' (left-passage | winding)");
}

// ----------------------------------------------------------------- verify --

int cmd_verify(const std::string& suite) {
  using namespace sletwist;
  std::vector<Check> checks;
  if (suite == "ode") {
    checks = verify_ode();
  } else if (suite == "monodromy") {
    checks = verify_monodromy();
  } else if (suite == "crossing") {
    checks = verify_crossing();
  } else if (suite == "pde") {
    checks = verify_pde();
  } else if (suite == "identities") {
    checks = verify_identities();
  } else if (suite == "all") {
    checks = verify_all();
  } else {
    throw contract_error("verify: unknown suite '" + suite +
                         "' (ode | monodromy | crossing | pde | identities | all)");
  }

  int n_fail = 0;
  ojson arr = ojson::array();
  for (const auto& c : checks) {
    ojson j;
    j["name"] = c.name;
    j["residual"] = c.residual;
    j["bound"] = c.bound;
    j["pass"] = c.pass;
    arr.push_back(j);
    if (!c.pass) ++n_fail;
  }
  ojson inputs;
  inputs["suite"] = suite;
  ojson out;
  out["suite"] = suite;
  out["checks"] = arr;
  out["n_pass"] = int(checks.size()) - n_fail;
  out["n_fail"] = n_fail;
  out["all_pass"] = n_fail == 0;
  out["manifest"] = make_manifest("verify " + suite, inputs, nullptr);
  emit(out);
  return n_fail == 0 ? 0 : static_cast<int>(errc::verification);
}

// ------------------------------------------------------------------- grid --

struct GridAxis {
  std::string label;  // as given: "v", "x.re", ...
  std::string param;  // target parameter
  int comp = -1;      // -1 plain real, 0 re, 1 im
  std::vector<double> values;
};

GridAxis parse_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw sletwist::contract_error("--axis expects name=lo:hi:count, got '" + spec + "'");
  }
  GridAxis ax;
  ax.label = spec.substr(0, eq);
  ax.param = ax.label;
  const auto dot = ax.label.rfind('.');
  if (dot != std::string::npos) {
    const std::string comp = ax.label.substr(dot + 1);
    if (comp == "re") {
      ax.comp = 0;
    } else if (comp == "im") {
      ax.comp = 1;
    } else {
      throw sletwist::contract_error("--axis component must be .re or .im, got '" + ax.label +
                                     "'");
    }
    ax.param = ax.label.substr(0, dot);
  }
  const std::string rest = spec.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw sletwist::contract_error("--axis expects name=lo:hi:count, got '" + spec + "'");
  }
  const double lo = parse_real_str(ax.label, rest.substr(0, c1));
  const double hi = parse_real_str(ax.label, rest.substr(c1 + 1, c2 - c1 - 1));
  const long count = std::strtol(rest.c_str() + c2 + 1, nullptr, 10);
  if (count < 1) throw sletwist::contract_error("--axis count must be >= 1");
  ax.values.resize(std::size_t(count));
  for (long i = 0; i < count; ++i) {
    ax.values[std::size_t(i)] =
        count == 1 ? lo : lo + (hi - lo) * double(i) / double(count - 1);
  }
  return ax;
}

int cmd_grid(const std::string& formula, const std::vector<std::string>& fixed,
             const std::vector<std::string>& axis_specs, const std::string& out_path) {
  if (axis_specs.empty()) throw sletwist::contract_error("grid: at least one --axis is required");
  std::vector<GridAxis> axes;
  axes.reserve(axis_specs.size());
  for (const auto& s : axis_specs) axes.push_back(parse_axis(s));

  // fixed params; complex components of axis targets may live here too
  std::map<std::string, std::string> base;
  for (const auto& t : fixed) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw sletwist::contract_error("expected key=value parameter, got '" + t + "'");
    }
    base[t.substr(0, eq)] = t.substr(eq + 1);
  }

  std::ofstream csv(out_path);
  if (!csv) throw sletwist::io_error("grid: cannot open '" + out_path + "' for writing");

  char buf[64];
  std::vector<std::size_t> idx(axes.size(), 0);
  std::vector<std::pair<std::string, double>> columns;
  bool header_done = false;
  long long rows = 0;

  for (;;) {
    // assemble parameter tokens for this grid point
    std::map<std::string, std::string> kv = base;
    std::map<std::string, std::pair<std::optional<double>, std::optional<double>>> comps;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      const GridAxis& ax = axes[a];
      const double v = ax.values[idx[a]];
      if (ax.comp < 0) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        kv[ax.param] = buf;
      } else if (ax.comp == 0) {
        comps[ax.param].first = v;
      } else {
        comps[ax.param].second = v;
      }
    }
    for (const auto& [param, reim] : comps) {
      cplx cur(0.0, 0.0);
      const auto it = kv.find(param);
      if (it != kv.end()) cur = parse_complex_str(param, it->second);
      const double re = reim.first.value_or(cur.real());
      const double im = reim.second.value_or(cur.imag());
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", re, im);
      kv[param] = buf;
    }
    std::vector<std::string> tokens;
    tokens.reserve(kv.size());
    for (const auto& [k, v] : kv) tokens.push_back(k + "=" + v);

    KvArgs args(tokens);
    const EvalResult r = eval_formula(formula, args);

    if (!header_done) {
      for (std::size_t a = 0; a < axes.size(); ++a) csv << axes[a].label << ",";
      for (std::size_t c = 0; c < r.columns.size(); ++c) {
        csv << r.columns[c].first << (c + 1 < r.columns.size() ? "," : "");
      }
      csv << "\n";
      header_done = true;
      columns = r.columns;
    }
    for (std::size_t a = 0; a < axes.size(); ++a) {
      std::snprintf(buf, sizeof buf, "%.17g", axes[a].values[idx[a]]);
      csv << buf << ",";
    }
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", r.columns[c].second);
      csv << buf << (c + 1 < r.columns.size() ? "," : "");
    }
    csv << "\n";
    ++rows;

    // odometer, last axis fastest
    std::size_t a = axes.size();
    while (a > 0) {
      --a;
      if (++idx[a] < axes[a].values.size()) break;
      idx[a] = 0;
      if (a == 0) goto done;
    }
  }
done:
  csv.flush();
  if (!csv) throw sletwist::io_error("grid: write to '" + out_path + "' failed");

  ojson params;
  params["formula"] = formula;
  ojson axj = ojson::array();
  for (const auto& s : axis_specs) axj.push_back(s);
  params["axes"] = axj;
  ojson fj;
  for (const auto& [k, v] : base) fj[k] = v;
  params["fixed"] = fj;
  params["rows"] = rows;
  params["output"] = out_path;

  ojson manifest = make_manifest("grid " + formula, params, nullptr);
  std::ofstream mf(out_path + ".manifest.json");
  if (!mf) throw sletwist::io_error("grid: cannot open '" + out_path + ".manifest.json'");
  mf << manifest.dump(2) << "\n";
  if (!mf) throw sletwist::io_error("grid: manifest write failed");

  ojson out;
  out["written"] = out_path;
  out["rows"] = rows;
  out["manifest"] = manifest;
  emit(out);
  return 0;
}

}  // namespace

// ------------------------------------------------------------------- main --

int main(int argc, char** argv) {
  CLI::App app{"closed-form O(n)-loop / SLE twist correlators, verification and Monte Carlo"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a closed-form formula");
  std::string eval_formula_name;
  std::vector<std::string> eval_params;
  eval->add_option("formula", eval_formula_name, "formula name")->required();
  eval->add_option("params", eval_params, "key=value parameters");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo SLE estimate vs closed form");
  std::string sim_mode;
  SimFlags sf;
  sim->add_option("mode", sim_mode, "left-passage | winding")->required();
  sim->add_option("--z", sf.z, "tracked point (left-passage), re,im or r@theta");
  sim->add_option("--zA", sf.zA, "first tracked point (winding)");
  sim->add_option("--zB", sf.zB, "second tracked point (winding)");
  sim->add_option("--kappa", sf.cfg.kappa, "SLE parameter");
  sim->add_option("-N,--samples", sf.cfg.n_samples, "number of samples");
  sim->add_option("--steps", sf.cfg.n_steps, "Loewner steps per sample");
  sim->add_option("--total-time", sf.cfg.total_time, "driving horizon (default 400 max|z|^2)");
  sim->add_option("--seed", sf.cfg.seed, "master RNG seed");
  sim->add_option("--escape-radius", sf.cfg.escape_radius, "classification radius");
  sim->add_option("--angle-tolerance", sf.cfg.angle_tolerance, "classification angle (rad)");
  sim->add_option("--max-extension", sf.cfg.max_extension_factor,
                  "extension budget as multiple of total time");
  sim->add_option("--scheme", sf.scheme, "tilted | vertical")
      ->check(CLI::IsMember({"tilted", "vertical"}));
  sim->add_option("--schedule-power", sf.cfg.schedule_power, "t_k = T (k/n)^p");
  sim->add_option("--threads", sf.cfg.threads, "worker threads (counts are thread-invariant)");

  // verify
  auto* ver = app.add_subcommand("verify", "run a self-verification suite");
  std::string suite;
  ver->add_option("suite", suite, "ode | monodromy | crossing | pde | identities | all")
      ->required();

  // grid
  auto* grid = app.add_subcommand("grid", "evaluate a formula over a grid, write CSV");
  std::string grid_formula, grid_out;
  std::vector<std::string> grid_params, grid_axes;
  grid->add_option("formula", grid_formula, "formula name")->required();
  grid->add_option("params", grid_params, "fixed key=value parameters");
  grid->add_option("--axis", grid_axes, "axis spec name=lo:hi:count (name may be param.re/.im)")
      ->required();
  grid->add_option("--out", grid_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    ojson err;
    err["error"]["category"] = "usage";
    err["error"]["message"] = e.what();
    emit(err);
    return static_cast<int>(sletwist::errc::usage);
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_formula_name, eval_params);
    if (sim->parsed()) return cmd_simulate(sim_mode, sf);
    if (ver->parsed()) return cmd_verify(suite);
    if (grid->parsed()) return cmd_grid(grid_formula, grid_params, grid_axes, grid_out);
  } catch (const sletwist::error& e) {
    static const std::map<sletwist::errc, const char*> names = {
        {sletwist::errc::usage, "usage"},
        {sletwist::errc::domain, "domain"},
        {sletwist::errc::quality, "quality"},
        {sletwist::errc::verification, "verification"},
        {sletwist::errc::io, "io"},
    };
    ojson err;
    err["error"]["category"] = names.at(e.code());
    err["error"]["message"] = e.what();
    emit(err);
    return e.exit_code();
  } catch (const std::exception& e) {
    ojson err;
    err["error"]["category"] = "internal";
    err["error"]["message"] = e.what();
    emit(err);
    return 1;
  }
  return 0;
}
