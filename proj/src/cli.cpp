// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include "rosenthal/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <sstream>

#include "rosenthal/asymptotics.hpp"
#include "rosenthal/errors.hpp"
#include "rosenthal/extrema.hpp"
#include "rosenthal/mc_oracle.hpp"
#include "rosenthal/reference_tables.hpp"

namespace rosenthal::cli {

using json = nlohmann::ordered_json;

namespace {

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_integer(double p) { return std::floor(p) == p; }

ConstantValue from_exact(double p, ConstantKind kind, const BigInt& v) {
  ConstantValue c;
  c.p = p;
  c.kind = kind;
  c.route = Route::combinatorial;
  c.value = to_double(v);
  c.rel_error = 0.0;
  c.exact = v;
  return c;
}

ConstantValue from_series(double p, ConstantKind kind, const SeriesValue& s) {
  ConstantValue c;
  c.p = p;
  c.kind = kind;
  c.route = Route::series;
  c.value = s.value();
  c.rel_error = s.rel_tail_bound;
  return c;
}

std::string render_value(const ConstantValue& c) {
  return c.exact ? to_string(*c.exact) : format_double(c.value);
}

json value_json(const ConstantValue& c) {
  if (c.exact && *c.exact <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    return json(c.exact->convert_to<std::int64_t>());
  }
  return json(c.value);
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json row_json(const TableRow& r) {
  json j;
  j["p"] = r.p;
  j["K"] = value_json(r.K);
  j["K_route"] = std::string(to_string(r.K.route));
  j["L"] = value_json(r.L);
  j["L_route"] = std::string(to_string(r.L.route));
  j["S"] = r.S;
  j["G"] = r.G;
  j["paper_K"] = optional_json(r.paper_K);
  j["paper_L"] = optional_json(r.paper_L);
  j["dev_K"] = optional_json(r.dev_K);
  j["dev_L"] = optional_json(r.dev_L);
  return j;
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::string text_row(const TableRow& r) {
  std::ostringstream s;
  s << "p = " << format_double(r.p) << '\n';
  auto line = [&](const char* name, const ConstantValue& c) {
    s << "  " << name << " = " << render_value(c) << "  [" << to_string(c.route) << ", "
      << (c.exact ? std::string("exact") : "rel_err <= " + fixed(c.rel_error, 3)) << "]\n";
  };
  line("K", r.K);
  line("L", r.L);
  const double s_err = r.K.rel_error / r.p;
  const double g_err = r.L.rel_error / r.p;
  s << "  S = " << fixed(r.S, 15) << "  [K^(1/p), rel_err <= " << fixed(s_err, 3) << "]\n";
  s << "  G = " << fixed(r.G, 15) << "  [L^(1/p), rel_err <= " << fixed(g_err, 3) << "]\n";
  if (r.paper_K) s << "  published K = " << fixed(*r.paper_K, 9) << "  rel_dev = " << fixed(*r.dev_K, 3) << '\n';
  if (r.paper_L) s << "  published L = " << fixed(*r.paper_L, 9) << "  rel_dev = " << fixed(*r.dev_L, 3) << '\n';
  return s.str();
}

void write_output(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (!cfg.output_path) {
    out << body;
    return;
  }
  std::ofstream f(*cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open output file " + *cfg.output_path);
  f << body;
  f.close();
  if (!f) throw IoError("failed writing output file " + *cfg.output_path);
}

void write_errata(const RunConfig& cfg, const std::vector<std::string>& lines, std::ostream& err) {
  std::optional<std::string> path = cfg.errata_path;
  if (!path && cfg.output_path) path = *cfg.output_path + ".errata.txt";
  if (!path) {
    for (const auto& l : lines) err << "erratum: " << l << '\n';
    return;
  }
  std::ofstream f(*path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open errata file " + *path);
  for (const auto& l : lines) f << l << '\n';
  f.close();
  if (!f) throw IoError("failed writing errata file " + *path);
}

double tolerance_of(const RunConfig& cfg) { return cfg.tolerance.value_or(0.0); }

// ---------------------------------------------------------------------------
// Subcommands

int cmd_eval(double p, const RunConfig& cfg, std::ostream& out) {
  if (!(p >= 2.0)) throw UsageError("eval: p must be >= 2");
  const TableRow row = compute_row(p, tolerance_of(cfg));
  std::string body;
  switch (cfg.output_format) {
    case OutputFormat::csv: body = csv_header() + "\n" + csv_line(row) + "\n"; break;
    case OutputFormat::json: body = row_json(row).dump(2) + "\n"; break;
    case OutputFormat::text: body = text_row(row); break;
  }
  write_output(cfg, body, out);
  return kOk;
}

int cmd_table(double p_min, double p_max, double step, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  if (!(p_min >= 2.0) || !(p_min < p_max) || !(step > 0.0)) {
    throw UsageError("table: need 2 <= p-min < p-max and step > 0");
  }
  const auto grid = table_grid(p_min, p_max, step);
  std::vector<TableRow> rows;
  rows.reserve(grid.size());
  for (double p : grid) rows.push_back(compute_row(p, tolerance_of(cfg)));

  std::vector<std::string> errata;
  for (const auto& r : rows) {
    for (auto& l : errata_lines(r)) errata.push_back(std::move(l));
  }

  std::string body;
  switch (cfg.output_format) {
    case OutputFormat::csv: {
      body = csv_header() + "\n";
      for (const auto& r : rows) body += csv_line(r) + "\n";
      break;
    }
    case OutputFormat::json: {
      json j = json::array();
      for (const auto& r : rows) j.push_back(row_json(r));
      body = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::text: {
      std::ostringstream s;
      s << std::left << std::setw(7) << "p" << std::setw(26) << "K" << std::setw(14) << "K_route" << std::setw(26)
        << "L" << std::setw(14) << "L_route" << std::setw(12) << "dev_K" << "dev_L\n";
      for (const auto& r : rows) {
        s << std::setw(7) << format_double(r.p) << std::setw(26) << fixed(r.K.value, 12) << std::setw(14)
          << to_string(r.K.route) << std::setw(26) << fixed(r.L.value, 12) << std::setw(14) << to_string(r.L.route)
          << std::setw(12) << (r.dev_K ? fixed(*r.dev_K, 3) : "-") << (r.dev_L ? fixed(*r.dev_L, 3) : "-") << '\n';
      }
      body = s.str();
      break;
    }
  }
  write_output(cfg, body, out);
  write_errata(cfg, errata, err);
  return kOk;
}

int cmd_extrema(bool even, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rep = reproduce_theorem1(cfg.threads);
  std::vector<const Theorem1Entry*> shown;
  for (const auto& e : rep.entries) {
    if (!even || e.report.restricted_to_even) shown.push_back(&e);
  }
  bool ok = true;
  for (const auto* e : shown) ok = ok && e->passes();

  std::string body;
  switch (cfg.output_format) {
    case OutputFormat::csv: {
      body = "name,computed,published,deviation,tolerance,argmax,published_argmax,bracket_halfwidth,passes\n";
      for (const auto* e : shown) {
        body += e->name + "," + format_double(e->computed) + "," + format_double(e->published) + "," +
                format_double(e->deviation()) + "," + format_double(e->tolerance) + "," + format_double(e->argmax) +
                "," + format_double(e->published_argmax) + "," + format_double(e->report.bracket_halfwidth) + "," +
                (e->passes() ? "true" : "false") + "\n";
      }
      break;
    }
    case OutputFormat::json: {
      json j;
      j["constants"] = json::array();
      for (const auto* e : shown) {
        json c;
        c["name"] = e->name;
        c["computed"] = e->computed;
        c["published"] = e->published;
        c["deviation"] = e->deviation();
        c["tolerance"] = e->tolerance;
        c["argmax"] = e->argmax;
        c["published_argmax"] = e->published_argmax;
        c["bracket_halfwidth"] = e->report.bracket_halfwidth;
        c["restricted_to_even"] = e->report.restricted_to_even;
        c["warnings"] = e->warnings;
        c["passes"] = e->passes();
        j["constants"].push_back(c);
      }
      j["min_G_over_g"] = rep.min_G_over_g;
      j["S_over_g_envelope_at_1e4"] = rep.S_over_g_envelope_at_1e4;
      j["all_pass"] = ok;
      body = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::text: {
      std::ostringstream s;
      for (const auto* e : shown) {
        s << std::left << std::setw(6) << e->name << " computed=" << fixed(e->computed, 9)
          << " published=" << fixed(e->published, 9) << " deviation=" << fixed(e->deviation(), 3)
          << " argmax=" << fixed(e->argmax, 8) << " (published " << format_double(e->published_argmax)
          << ") bracket=+-" << fixed(e->report.bracket_halfwidth, 3) << (e->passes() ? "  ok" : "  FAIL") << '\n';
      }
      if (!even) {
        s << "min G/g on [4, 700] = " << fixed(rep.min_G_over_g, 9) << '\n';
        s << "S/g envelope at 1e4 = " << fixed(rep.S_over_g_envelope_at_1e4, 9) << '\n';
      }
      body = s.str();
      break;
    }
  }
  for (const auto* e : shown) {
    for (const auto& w : e->warnings) err << "warning: " << e->name << ": " << w << '\n';
  }
  write_output(cfg, body, out);
  return ok ? kOk : kNumericFailure;
}

void bounds_text(std::ostringstream& s, const char* name, const std::optional<LogBounds>& b, double threshold,
                 const char* threshold_name) {
  if (!b) {
    s << name << " bounds: not available at this p\n";
    return;
  }
  s << name << " bounds: log_lower=" << fixed(b->log_lower, 15) << " log_series=" << fixed(b->log_series, 15)
    << " log_upper=" << fixed(b->log_upper, 15) << '\n';
  s << "  psi_lower=" << fixed(b->psi_lower, 12) << " psi_upper=" << fixed(b->psi_upper, 12) << '\n';
  s << "  verdict: ";
  if (!b->asserted) {
    s << "not asserted (below " << threshold_name << " = " << format_double(threshold) << "), sandwich "
      << (b->holds ? "holds" : "fails") << '\n';
  } else {
    s << (b->holds ? "holds" : "VIOLATED") << '\n';
  }
}

json bounds_json(const std::optional<LogBounds>& b) {
  if (!b) return json(nullptr);
  json j;
  j["log_lower"] = b->log_lower;
  j["log_series"] = b->log_series;
  j["log_upper"] = b->log_upper;
  j["psi_lower"] = b->psi_lower;
  j["psi_upper"] = b->psi_upper;
  j["asserted"] = b->asserted;
  j["holds"] = b->holds;
  return j;
}

int cmd_bounds(double p, const RunConfig& cfg, std::ostream& out) {
  if (!(p >= 16.0) || p > 1e6) throw UsageError("bounds: p must lie in [16, 1e6]");
  AsymptoticBundle b;
  b.p = p;
  const auto f = elementary_factors(p);
  b.g = f.g;
  b.h = f.h;
  b.delta = f.delta;
  b.Delta = f.Delta;
  b.M = solve_M(p);
  b.N = solve_N(p);
  const auto sx = saddle_exponents(p);
  b.X = sx.X;
  b.Y = sx.Y;
  const auto env = envelope_values(p);
  b.eps = env.eps;
  b.eps_plus = env.eps_plus;
  b.eps_minus = env.eps_minus;
  b.M_plus = env.M_plus;
  b.M_minus = env.M_minus;
  b.N_plus = env.N_plus;
  b.N_minus = env.N_minus;
  // Diagnostic evaluation so both sides can be shown on a violation; the
  // verdict is asserted above the strict thresholds.
  b.L = L_bounds(p, BoundMode::diagnostic);
  b.L->asserted = p >= kEnvelopeThresholdL;
  if (p >= kDiagnosticThresholdK) {
    b.K = K_bounds(p, BoundMode::diagnostic);
    b.K->asserted = p >= kEnvelopeThresholdK;
  }
  const bool envelopes_ok =
      p < kEnvelopeThresholdL || (b.M_minus <= b.M && b.M <= b.M_plus && b.N_minus <= b.N && b.N <= b.N_plus);
  const bool ok = envelopes_ok && (!b.L->asserted || b.L->holds) && (!b.K || !b.K->asserted || b.K->holds);
  const double G_over_g = std::exp(b.L->log_series / p) / b.g;
  const double S_over_g = S_value(p) / b.g;

  std::string body;
  if (cfg.output_format == OutputFormat::json) {
    json j;
    j["p"] = p;
    j["g"] = b.g;
    j["h"] = b.h;
    j["delta"] = b.delta;
    j["Delta"] = b.Delta;
    j["M"] = b.M;
    j["N"] = b.N;
    j["X"] = b.X;
    j["Y"] = b.Y;
    j["eps"] = b.eps;
    j["eps_plus"] = b.eps_plus;
    j["eps_minus"] = b.eps_minus;
    j["M_minus"] = b.M_minus;
    j["M_plus"] = b.M_plus;
    j["N_minus"] = b.N_minus;
    j["N_plus"] = b.N_plus;
    j["G_over_g"] = G_over_g;
    j["S_over_g"] = S_over_g;
    j["L_bounds"] = bounds_json(b.L);
    j["K_bounds"] = bounds_json(b.K);
    j["ok"] = ok;
    body = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "p = " << format_double(p) << '\n';
    s << "g = " << fixed(b.g, 15) << "  h = " << fixed(b.h, 15) << '\n';
    s << "delta = " << fixed(b.delta, 15) << "  Delta = " << fixed(b.Delta, 15) << '\n';
    s << "M = " << fixed(b.M, 15) << "  in [" << fixed(b.M_minus, 12) << ", " << fixed(b.M_plus, 12) << "]\n";
    s << "N = " << fixed(b.N, 15) << "  in [" << fixed(b.N_minus, 12) << ", " << fixed(b.N_plus, 12) << "]\n";
    s << "eps = " << fixed(b.eps, 15) << "  in [" << fixed(b.eps_minus, 12) << ", " << fixed(b.eps_plus, 12) << "]";
    if (p < kEnvelopeThresholdL) s << "  (not asserted below P_0)";
    s << '\n';
    s << "X = " << fixed(b.X, 15) << "  Y = " << fixed(b.Y, 15) << '\n';
    s << "G(p)/g(p) = " << fixed(G_over_g, 12) << '\n';
    s << "S(p)/g(p) = " << fixed(S_over_g, 12) << '\n';
    bounds_text(s, "L", b.L, kEnvelopeThresholdL, "P_0");
    bounds_text(s, "K", b.K, kEnvelopeThresholdK, "P_1");
    s << "overall: " << (ok ? "ok" : "VIOLATED") << '\n';
    body = s.str();
  }
  write_output(cfg, body, out);
  return ok ? kOk : kNumericFailure;
}

int cmd_mc(const std::string& kind, double p, std::int64_t n, const std::string& family, std::int64_t terms,
           const RunConfig& cfg, std::ostream& out) {
  if (kind != "L" && kind != "K" && kind != "ratio") throw UsageError("mc: kind must be L, K or ratio");
  if (!(p >= 2.0 && p <= 12.0)) throw UsageError("mc: p must lie in [2, 12]");
  if (n < 10000) throw UsageError("mc: need at least 1e4 samples");

  McEstimate est;
  double reference = 0.0;
  std::string reference_name;
  if (kind == "L") {
    est = mc_L(p, n, cfg.seed, cfg.threads);
    reference = L_series(p).value();
    reference_name = "L_series";
  } else if (kind == "K") {
    est = mc_K(p, n, cfg.seed, cfg.threads);
    reference = K_series(p).value();
    reference_name = "K_series";
  } else {
    Family fam;
    try {
      fam = Family::parse(family);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    est = mc_rosenthal_ratio(fam, terms, p, n, cfg.seed, cfg.threads);
    reference = p >= 4.0 ? G_value(p) : std::pow(L_series(p).value(), 1.0 / p);
    reference_name = "G";
  }
  const double z = est.std_error > 0.0 ? (est.mean - reference) / est.std_error : 0.0;

  std::string body;
  if (cfg.output_format == OutputFormat::json) {
    json j;
    j["kind"] = kind;
    j["p"] = p;
    if (kind == "ratio") {
      j["family"] = family;
      j["n_terms"] = terms;
    }
    j["mean"] = est.mean;
    j["stderr"] = est.std_error;
    j["n_samples"] = est.n_samples;
    j["seed"] = est.seed;
    j["generator"] = est.generator;
    j["reference"] = reference_name;
    j["reference_value"] = reference;
    j["z"] = z;
    body = j.dump(2) + "\n";
  } else if (cfg.output_format == OutputFormat::csv) {
    body = "kind,p,mean,stderr,n_samples,seed,generator,reference,reference_value,z\n" + kind + "," +
           format_double(p) + "," + format_double(est.mean) + "," + format_double(est.std_error) + "," +
           std::to_string(est.n_samples) + "," + std::to_string(est.seed) + "," + est.generator + "," +
           reference_name + "," + format_double(reference) + "," + format_double(z) + "\n";
  } else {
    std::ostringstream s;
    s << "kind = " << kind << "  p = " << format_double(p);
    if (kind == "ratio") s << "  family = " << family << "  n_terms = " << terms;
    s << '\n';
    s << "mean = " << fixed(est.mean, 12) << "  stderr = " << fixed(est.std_error, 6) << '\n';
    s << "n_samples = " << est.n_samples << "  seed = " << est.seed << "  generator = " << est.generator << '\n';
    s << reference_name << " = " << fixed(reference, 12) << "  z = " << fixed(z, 4) << '\n';
    body = s.str();
  }
  write_output(cfg, body, out);
  return kOk;
}

void add_common(CLI::App* app, RunConfig& cfg, std::string& format, double& tol) {
  app->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app->add_option("--out", cfg.output_path, "Output file");
  app->add_option("--errata", cfg.errata_path, "Errata report file");
  app->add_option("--tol", tol, "Relative tolerance")->check(CLI::Range(1e-15, 1e-3));
  app->add_option("--seed", cfg.seed, "Random seed");
  app->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::vector<double> table_grid(double p_min, double p_max, double step) {
  std::vector<double> out;
  const auto count = static_cast<std::int64_t>(std::floor((p_max - p_min) / step + 1e-9)) + 1;
  if (count > 100000) throw UsageError("table: more than 1e5 rows requested");
  for (std::int64_t i = 0; i < count; ++i) out.push_back(p_min + static_cast<double>(i) * step);
  return out;
}

TableRow compute_row(double p, double tol) {
  if (!(p >= 2.0)) throw DomainError("compute_row: p must be >= 2");
  TableRow r;
  r.p = p;
  if (is_integer(p) && static_cast<long>(p) % 2 == 0 && p <= 40.0) {
    const auto m = static_cast<unsigned>(p / 2.0);
    r.K = from_exact(p, ConstantKind::K, K_even_exact(m));
    r.L = from_exact(p, ConstantKind::L, L_even_exact(m));
  } else {
    if (p < 4.0) {
      r.K.p = p;
      r.K.kind = ConstantKind::K;
      r.K.route = Route::closed_form;
      r.K.value = std::pow(S_closed_form(p), p);
      r.K.rel_error = 1e-14;
    } else {
      r.K = from_series(p, ConstantKind::K, K_series(p, tol));
    }
    if (is_integer(p) && p >= 5.0 && p <= 199.0) {
      const auto odd = L_odd_exact(static_cast<unsigned>(p));
      r.L.p = p;
      r.L.kind = ConstantKind::L;
      r.L.route = Route::closed_form;
      r.L.value = odd.value;
      r.L.rel_error = 1e-15;
    } else {
      r.L = from_series(p, ConstantKind::L, L_series(p, tol));
    }
  }
  r.S = std::pow(r.K.value, 1.0 / p);
  r.G = std::pow(r.L.value, 1.0 / p);
  if (const auto e = reference_entry(p)) {
    r.paper_K = e->K;
    r.paper_L = e->L;
    r.dev_K = (r.K.value - e->K) / e->K;
    r.dev_L = (r.L.value - e->L) / e->L;
  }
  return r;
}

std::string csv_header() { return "p,K,K_route,L,L_route,S,G,paper_K,paper_L,dev_K,dev_L"; }

std::string csv_line(const TableRow& r) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  return format_double(r.p) + "," + render_value(r.K) + "," + std::string(to_string(r.K.route)) + "," +
         render_value(r.L) + "," + std::string(to_string(r.L.route)) + "," + format_double(r.S) + "," +
         format_double(r.G) + "," + opt(r.paper_K) + "," + opt(r.paper_L) + "," + opt(r.dev_K) + "," + opt(r.dev_L);
}

std::vector<std::string> errata_lines(const TableRow& r) {
  std::vector<std::string> out;
  auto check = [&](const char* q, const std::optional<double>& published, double computed,
                   const std::optional<double>& dev) {
    if (!dev || std::abs(*dev) <= kErrataThreshold) return;
    out.push_back("p=" + format_double(r.p) + " quantity=" + q + " paper=" + fixed(*published, 9) +
                  " computed=" + fixed(computed, 9) + " rel_dev=" + fixed(*dev, 3));
  };
  check("K", r.paper_K, r.K.value, r.dev_K);
  check("L", r.paper_L, r.L.value, r.dev_L);
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constants of the Rosenthal inequalities", "rosenthal"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  double tol = 0.0;
  double p = 0.0, p_min = 2.0, p_max = 21.0, step = 0.5;
  bool even = false;
  std::string kind = "L";
  std::string family = "rademacher";
  std::int64_t n_samples = 1000000;
  std::int64_t terms = 1;

  auto* eval = app.add_subcommand("eval", "K, L, S, G at one p");
  eval->add_option("--p", p, "Exponent")->required();
  auto* table = app.add_subcommand("table", "Table of K, L against the published values");
  table->add_option("--p-min", p_min, "First p");
  table->add_option("--p-max", p_max, "Last p");
  table->add_option("--step", step, "Step in p");
  auto* extrema = app.add_subcommand("extrema", "Reproduce the extremal constants");
  extrema->add_flag("--even", even, "Only the even-integer searches");
  auto* bounds = app.add_subcommand("bounds", "Saddle-point bounds at one p");
  bounds->add_option("--p", p, "Exponent")->required();
  auto* mc = app.add_subcommand("mc", "Monte Carlo check");
  mc->add_option("--kind", kind, "L, K or ratio");
  mc->add_option("--p", p, "Exponent")->required();
  mc->add_option("--n", n_samples, "Samples");
  mc->add_option("--family", family, "Summand family for --kind ratio");
  mc->add_option("--terms", terms, "Number of summands for --kind ratio");
  for (auto* sub : {eval, table, extrema, bounds, mc}) add_common(sub, cfg, format, tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  cfg.output_format = format == "csv" ? OutputFormat::csv : format == "json" ? OutputFormat::json : OutputFormat::text;
  if (tol > 0.0) cfg.tolerance = tol;

  try {
    if (*eval) return cmd_eval(p, cfg, out);
    if (*table) return cmd_table(p_min, p_max, step, cfg, out, err);
    if (*extrema) return cmd_extrema(even, cfg, out, err);
    if (*bounds) return cmd_bounds(p, cfg, out);
    if (*mc) return cmd_mc(kind, p, n_samples, family, terms, cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kUsageError;
}

}  // namespace rosenthal::cli
