// Command-line interface: tabulated exact data, kernel and correlation
// evaluations, asymptotic comparisons, figure data, sampling, verification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpf/acceptance.hpp"
#include "qpf/asymptotics.hpp"
#include "qpf/kernel.hpp"
#include "qpf/moments.hpp"
#include "qpf/polynomials.hpp"
#include "qpf/sampler.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Output {
  std::string format = "csv";
  std::string path;

  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open() {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
      stream = &file;
    }
  }

  void add_format_flags(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", path, "write to file instead of stdout");
  }
};

json make_meta(const std::string& command, const json& parameters, const json& seed = nullptr) {
  return json{{"command", command}, {"version", kVersion}, {"seed", seed},
              {"parameters", parameters}};
}

void emit_json(Output& out, const json& meta, const json& data) {
  json doc{{"meta", meta}, {"data", data}};
  *out.stream << doc.dump(2) << '\n';
}

void emit_csv(Output& out, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  std::ostream& os = *out.stream;
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_quote(row[i]);
    os << '\n';
  }
}

std::string big_str(const qpf::BigInt& v) { return v.str(); }

// ---------------------------------------------------------------- tables ----

int cmd_tables(int nmax, Output& out) {
  std::vector<std::vector<std::string>> rows;
  const int dets_max = std::min(nmax, 30);
  for (int m = 0; m <= nmax; ++m)
    for (int n = 0; n <= nmax; ++n)
      rows.push_back({"scalar", std::to_string(n), std::to_string(m),
                      big_str(qpf::monomial_inner(m, n)), "", "", ""});
  for (int n = 0; n <= nmax; ++n) {
    rows.push_back({"p", std::to_string(n), "", "", qpf::poly_to_string(qpf::p_poly(n), "z"),
                    big_str(qpf::h_norm(n)), n >= 1 ? big_str(qpf::beta_coeff(n)) : ""});
    rows.push_back({"q", std::to_string(n), "", "", qpf::poly_to_string(qpf::q_poly(n), "x"),
                    "", ""});
  }
  for (int n = 0; n <= dets_max; ++n)
    rows.push_back({"dets", std::to_string(n), "", big_str(qpf::det_D(n)), "", "", ""});

  if (out.format == "csv") {
    emit_csv(out, {"table", "n", "m", "value", "polynomial", "h_n", "beta_n"}, rows);
    return 0;
  }
  json scalar = json::array(), polys = json::array(), qpolys = json::array(),
       dets = json::array();
  for (int m = 0; m <= nmax; ++m) {
    json row = json::array();
    for (int n = 0; n <= nmax; ++n) row.push_back(big_str(qpf::monomial_inner(m, n)));
    scalar.push_back(row);
  }
  for (int n = 0; n <= nmax; ++n) {
    json pc = json::array(), qc = json::array();
    for (const auto& c : qpf::p_poly(n)) pc.push_back(big_str(c));
    for (const auto& c : qpf::q_poly(n)) qc.push_back(big_str(c));
    polys.push_back({{"n", n},
                     {"coefficients", pc},
                     {"text", qpf::poly_to_string(qpf::p_poly(n), "z")},
                     {"h", big_str(qpf::h_norm(n))},
                     {"beta", n >= 1 ? json(big_str(qpf::beta_coeff(n))) : json(nullptr)}});
    qpolys.push_back({{"n", n},
                      {"coefficients", qc},
                      {"text", qpf::poly_to_string(qpf::q_poly(n), "x")}});
  }
  for (int n = 0; n <= dets_max; ++n) dets.push_back(big_str(qpf::det_D(n)));
  emit_json(out, make_meta("tables", {{"nmax", nmax}}),
            {{"scalar_products", scalar},
             {"polynomials", polys},
             {"q_polynomials", qpolys},
             {"dets", dets}});
  return 0;
}

// ------------------------------------------------------------------ poly ----

int cmd_poly(int nmax, Output& out) {
  if (out.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n <= nmax; ++n)
      rows.push_back({std::to_string(n), qpf::poly_to_string(qpf::p_poly(n), "z"),
                      qpf::poly_to_string(qpf::q_poly(n), "x"), big_str(qpf::h_norm(n)),
                      n >= 1 ? big_str(qpf::beta_coeff(n)) : ""});
    emit_csv(out, {"n", "polynomial_p", "polynomial_q", "h_n", "beta_n"}, rows);
    return 0;
  }
  json data = json::array();
  for (int n = 0; n <= nmax; ++n) {
    json pc = json::array(), qc = json::array();
    for (const auto& c : qpf::p_poly(n)) pc.push_back(big_str(c));
    for (const auto& c : qpf::q_poly(n)) qc.push_back(big_str(c));
    data.push_back({{"n", n},
                    {"p", pc},
                    {"q", qc},
                    {"h", big_str(qpf::h_norm(n))},
                    {"beta", n >= 1 ? json(big_str(qpf::beta_coeff(n))) : json(nullptr)}});
  }
  emit_json(out, make_meta("poly", {{"nmax", nmax}}), data);
  return 0;
}

// ---------------------------------------------------------------- kernel ----

int cmd_kernel(int n, int grid, Output& out) {
  struct DirPair {
    qpf::Quat u, v;
  };
  const DirPair pairs[3] = {{qpf::Quat::pure(1, 0, 0), qpf::Quat::pure(1, 0, 0)},
                            {qpf::Quat::pure(1, 0, 0), qpf::Quat::pure(0, 1, 0)},
                            {qpf::Quat::pure(1, 0, 0), qpf::Quat::pure(-1, 0, 0)}};
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (const DirPair& d : pairs) {
    for (int i = 0; i < grid; ++i) {
      const double s = grid == 1 ? 0.1 : 0.1 + (6.0 - 0.1) * i / (grid - 1);
      for (int j = 0; j < grid; ++j) {
        const double t = grid == 1 ? 0.1 : 0.1 + (6.0 - 0.1) * j / (grid - 1);
        const qpf::KernelValue k = qpf::kernel_closed(n, d.u, s, d.v, t);
        if (out.format == "csv") {
          rows.push_back({std::to_string(n), num(s), num(t), num(k.u_dot_v), num(k.rho),
                          num(k.delta), num(k.value.w), num(k.value.x), num(k.value.y),
                          num(k.value.z)});
        } else {
          jrows.push_back({n, s, t, k.u_dot_v, k.rho, k.delta, k.value.w, k.value.x,
                           k.value.y, k.value.z});
        }
      }
    }
  }
  if (out.format == "csv") {
    emit_csv(out, {"n", "s", "t", "u_dot_v", "rho", "delta", "K_real", "K_i", "K_j", "K_k"},
             rows);
    return 0;
  }
  emit_json(out, make_meta("kernel", {{"n", n}, {"grid", grid}}),
            {{"columns",
              {"n", "s", "t", "u_dot_v", "rho", "delta", "K_real", "K_i", "K_j", "K_k"}},
             {"rows", jrows}});
  return 0;
}

// ------------------------------------------------------- density / radial ----

int cmd_density(const std::string& name, int n, int grid, Output& out) {
  const double rmax = 2.0 * std::sqrt(n + 1.5) + 2.0;
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (int i = 0; i < grid; ++i) {
    const double r = grid == 1 ? 0.0 : rmax * i / (grid - 1);
    const double value = name == "density" ? qpf::intensity_lebesgue_radial(n, r)
                                           : qpf::radial_density(n, r);
    if (out.format == "csv")
      rows.push_back({std::to_string(n), num(r), num(value)});
    else
      jrows.push_back({n, r, value});
  }
  if (out.format == "csv") {
    emit_csv(out, {"n", "r", "density"}, rows);
    return 0;
  }
  emit_json(out, make_meta(name, {{"n", n}, {"grid", grid}}),
            {{"columns", {"n", "r", "density"}}, {"rows", jrows}});
  return 0;
}

// ----------------------------------------------------------- asymptotics ----

int cmd_asymptotics(int n, int grid, Output& out) {
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  auto push = [&](const std::string& regime, double p1, double p2, double p3, double exact,
                  double approx, double rel_scale) {
    const double abs_err = std::abs(exact - approx);
    const double rel_err = abs_err / rel_scale;
    if (out.format == "csv")
      rows.push_back({std::to_string(n), regime, num(p1), num(p2), num(p3), num(exact),
                      num(approx), num(abs_err), num(rel_err)});
    else
      jrows.push_back({n, regime, p1, p2, p3, exact, approx, abs_err, rel_err});
  };

  for (int i = 0; i < grid; ++i) {
    const double s = grid == 1 ? 0.5 : 0.2 + 0.6 * i / (grid - 1);
    const qpf::DensityCheck dc = qpf::density_limit_check(n, s);
    push("bulk_density", s, 0, 0, dc.scaled, dc.limit, dc.limit);
  }

  const qpf::Quat iu = qpf::Quat::pure(1, 0, 0), jv = qpf::Quat::pure(0, 1, 0);
  for (int i = 0; i < grid; ++i) {
    const double sigma = grid == 1 ? 0.0 : -2.0 + 4.0 * i / (grid - 1);
    const qpf::Quat kk = qpf::bulk_kernel_scaled(n, iu, sigma, jv, 0.0, 0.5);
    const qpf::Quat lim = (qpf::Quat::real(1.0) - iu * jv) * (0.5 * qpf::sinc(-sigma));
    push("bulk_kernel", sigma, 0.0, 0.5, norm(kk), norm(lim), std::max(norm(lim), 0.1));
  }

  for (int i = 0; i < grid; ++i) {
    const double s = grid == 1 ? 1.0 : 0.5 + 2.5 * i / (grid - 1);
    const double t = 0.8 * s + 0.4;
    const qpf::Quat exact = qpf::kernel_closed_weighted(n, iu, s, jv, t);
    const qpf::Quat approx = qpf::center_kernel_approx(n, iu, s, jv, t);
    const double amp = 0.7978845608028654 / (s * t);
    push("center", s, t, 0, norm(exact), norm(approx), amp);
  }

  for (int i = 0; i < grid; ++i) {
    const double phi = grid == 1 ? M_PI / 2 : M_PI / 3 + (M_PI / 3) * i / (grid - 1);
    const double x = 2.0 * std::sqrt(n + 0.5) * std::cos(phi);
    push("pr_hermite", phi, 0, 0, qpf::weighted_hermite(n, x),
         qpf::pr_weighted_hermite(n, phi), qpf::pr_amplitude(n, phi));
  }

  for (int i = 0; i < grid; ++i) {
    const double s = grid == 1 ? 1.0 : 0.5 + 2.5 * i / (grid - 1);
    push("center_hermite", s, 0, 0, qpf::center_hermite_exact_normalized(n, s),
         qpf::center_hermite_approx_normalized(n, s), 1.0);
  }

  if (out.format == "csv") {
    emit_csv(out,
             {"n", "regime", "param1", "param2", "param3", "exact", "approx", "abs_err",
              "rel_err"},
             rows);
    return 0;
  }
  emit_json(out, make_meta("asymptotics", {{"n", n}, {"grid", grid}}),
            {{"columns",
              {"n", "regime", "param1", "param2", "param3", "exact", "approx", "abs_err",
               "rel_err"}},
             {"rows", jrows}});
  return 0;
}

// --------------------------------------------------------------- figures ----

int cmd_figures(int which, int n, int nmax, int grid, Output& out) {
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  auto push = [&](double x, double value, int label) {
    if (out.format == "csv")
      rows.push_back({num(x), num(value), std::to_string(label)});
    else
      jrows.push_back({x, value, label});
  };

  if (which == 1) {
    // Rescaled polynomial profiles: h_n^{-3/4} Q_n(sqrt(3 n) x) on [-1, 1].
    for (int k = 1; k <= std::min(nmax, 9); ++k) {
      const std::vector<qpf::BigInt> q = qpf::q_poly(k);
      const double hn = qpf::h_norm(k).convert_to<double>();
      const double scale = std::pow(hn, -0.75);
      for (int i = 0; i < grid; ++i) {
        const double x = grid == 1 ? 0.0 : -1.0 + 2.0 * i / (grid - 1);
        push(x, scale * qpf::eval_poly(q, std::sqrt(3.0 * k) * x), k);
      }
    }
  } else if (which == 2) {
    // Weighted one-point intensity profiles per point: rho_n(s) e^{-s^2/2} / (n+1).
    const double smax = 2.0 * std::sqrt(nmax + 1.5) + 2.0;
    for (int k = 2; k <= nmax; k += 2) {
      for (int i = 0; i < grid; ++i) {
        const double s = grid == 1 ? 0.0 : smax * i / (grid - 1);
        push(s, qpf::weighted_rho_diag(k, s) / (k + 1), k);
      }
    }
  } else {
    // Rescaled bulk kernel section (u = v, sigma = 0) against the sinc limit
    // (limit rows are labeled n = -1).
    const qpf::Quat iu = qpf::Quat::pure(1, 0, 0);
    for (int i = 0; i < grid; ++i) {
      const double tau = grid == 1 ? 0.0 : -2.0 + 4.0 * i / (grid - 1);
      const qpf::Quat kk = qpf::bulk_kernel_scaled(n, iu, 0.0, iu, tau, 0.5);
      push(tau, kk.w, n);
    }
    for (int i = 0; i < grid; ++i) {
      const double tau = grid == 1 ? 0.0 : -2.0 + 4.0 * i / (grid - 1);
      push(tau, qpf::sinc(tau), -1);
    }
  }

  if (out.format == "csv") {
    emit_csv(out, {"x", "value", "n"}, rows);
    return 0;
  }
  emit_json(out,
            make_meta("figures", {{"which", which}, {"n", n}, {"nmax", nmax}, {"grid", grid}}),
            {{"columns", {"x", "value", "n"}}, {"rows", jrows}});
  return 0;
}

// ---------------------------------------------------------------- sample ----

int cmd_sample(int n, long long count, std::uint64_t seed, int workers, Output& out) {
  qpf::SamplerConfig cfg;
  cfg.n = n;
  cfg.count = count;
  cfg.seed = seed;
  cfg.workers = workers;
  const qpf::SampleResult res = qpf::rejection_sample(cfg);
  const int size = n + 1;

  if (out.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(res.points.size());
    for (size_t i = 0; i < res.points.size(); ++i) {
      const qpf::Quat& p = res.points[i];
      rows.push_back({std::to_string(i / size), std::to_string(i % size), num(p.x), num(p.y),
                      num(p.z)});
    }
    emit_csv(out, {"config_index", "point_index", "x", "y", "z"}, rows);
    return 0;
  }

  const qpf::RadialCheck radial = qpf::estimate_radial(n, res.points);
  json data{{"acceptance_rate",
             res.stats.proposals > 0
                 ? static_cast<double>(res.stats.accepted) / res.stats.proposals
                 : 0.0},
            {"max_ratio", res.stats.max_ratio},
            {"proposals", res.stats.proposals},
            {"accepted", res.stats.accepted},
            {"radial_histogram",
             {{"lo", radial.hist.lo}, {"hi", radial.hist.hi}, {"counts", radial.hist.counts}}},
            {"ks_radial", radial.ks}};
  if (n == 1) {
    const qpf::AngularCheck ang = qpf::estimate_angular(res.points);
    data["angular_histogram"] = {
        {"lo", ang.hist.lo}, {"hi", ang.hist.hi}, {"counts", ang.hist.counts}};
    data["angular_max_z"] = ang.max_z;
    data["mean_cos"] = ang.mean_cos;
  }
  emit_json(out,
            make_meta("sample",
                      {{"n", n}, {"count", count}, {"seed", seed}, {"workers", workers}},
                      json(seed)),
            data);
  return 0;
}

// ---------------------------------------------------------------- verify ----

int cmd_verify(const std::string& suite, Output& out) {
  const std::vector<qpf::CriterionResult> results = qpf::run_suite(suite == "all");
  bool all_passed = true;
  double total = 0.0;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    total += r.seconds;
  }
  if (out.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : results)
      rows.push_back({std::to_string(r.id), r.name, r.passed ? "pass" : "fail",
                      num(r.measured), num(r.bound), num(r.seconds), r.note});
    emit_csv(out, {"id", "name", "status", "measured", "bound", "seconds", "note"}, rows);
  } else {
    json jres = json::array();
    for (const auto& r : results)
      jres.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"measured", r.measured},
                      {"bound", r.bound},
                      {"seconds", r.seconds},
                      {"note", r.note}});
    json meta = make_meta("verify", {{"suite", suite}});
    meta["total_seconds"] = total;
    meta["all_passed"] = all_passed;
    emit_json(out, meta, jres);
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion point field toolkit"};
  app.require_subcommand(1);

  Output out;

  int tables_nmax = 9;
  CLI::App* tables = app.add_subcommand("tables", "exact scalar products, polynomials, dets");
  tables->add_option("--nmax", tables_nmax, "largest index")->check(CLI::Range(0, 60));
  out.add_format_flags(tables);

  int poly_nmax = 9;
  CLI::App* poly = app.add_subcommand("poly", "orthogonal polynomial table");
  poly->add_option("--nmax", poly_nmax, "largest index")->check(CLI::Range(0, 60));
  out.add_format_flags(poly);

  int kernel_n = 5, kernel_grid = 16;
  CLI::App* kernel = app.add_subcommand("kernel", "kernel values on a radius grid");
  kernel->add_option("--n", kernel_n, "field index")->check(CLI::Range(0, 100000));
  kernel->add_option("--grid", kernel_grid, "points per radius axis")->check(CLI::Range(1, 2000));
  out.add_format_flags(kernel);

  int density_n = 4, density_grid = 64;
  CLI::App* density = app.add_subcommand("density", "Lebesgue intensity profile");
  density->add_option("--n", density_n, "field index")->check(CLI::Range(0, 100000));
  density->add_option("--grid", density_grid, "radial points")->check(CLI::Range(1, 100000));
  out.add_format_flags(density);

  int radial_n = 4, radial_grid = 64;
  CLI::App* radial = app.add_subcommand("radial", "radial density 4 pi r^2 intensity");
  radial->add_option("--n", radial_n, "field index")->check(CLI::Range(0, 100000));
  radial->add_option("--grid", radial_grid, "radial points")->check(CLI::Range(1, 100000));
  out.add_format_flags(radial);

  int asym_n = 400, asym_grid = 9;
  CLI::App* asym = app.add_subcommand("asymptotics", "finite-n values against their limits");
  asym->add_option("--n", asym_n, "field index")->check(CLI::Range(2, 100000));
  asym->add_option("--grid", asym_grid, "points per regime")->check(CLI::Range(1, 10000));
  out.add_format_flags(asym);

  int fig_which = 1, fig_n = 1000, fig_nmax = 9, fig_grid = 64;
  CLI::App* figures = app.add_subcommand("figures", "plot data series");
  figures->add_option("which", fig_which, "series: 1 polynomials, 2 intensities, 3 bulk kernel")
      ->required()
      ->check(CLI::Range(1, 3));
  figures->add_option("--n", fig_n, "field index for series 3")->check(CLI::Range(2, 100000));
  figures->add_option("--nmax", fig_nmax, "largest index for series 1-2")
      ->check(CLI::Range(1, 2000));
  figures->add_option("--grid", fig_grid, "points per curve")->check(CLI::Range(1, 100000));
  out.add_format_flags(figures);

  int sample_n = 1, sample_workers = 1;
  long long sample_count = 10000;
  std::uint64_t sample_seed = 1;
  CLI::App* sample = app.add_subcommand("sample", "draw configurations of the point field");
  sample->add_option("--n", sample_n, "field index (n + 1 points)")->check(CLI::Range(0, 2));
  sample->add_option("--count", sample_count, "accepted configurations")
      ->check(CLI::Range(0LL, 100000000LL));
  sample->add_option("--seed", sample_seed, "RNG seed");
  sample->add_option("--workers", sample_workers, "parallel streams")->check(CLI::Range(1, 256));
  out.add_format_flags(sample);

  std::string verify_suite = "fast";
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--suite", verify_suite, "fast (criteria 1-9) or all (1-14)")
      ->check(CLI::IsMember({"fast", "all"}))
      ->capture_default_str();
  out.add_format_flags(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    out.open();
    if (tables->parsed()) return cmd_tables(tables_nmax, out);
    if (poly->parsed()) return cmd_poly(poly_nmax, out);
    if (kernel->parsed()) return cmd_kernel(kernel_n, kernel_grid, out);
    if (density->parsed()) return cmd_density("density", density_n, density_grid, out);
    if (radial->parsed()) return cmd_density("radial", radial_n, radial_grid, out);
    if (asym->parsed()) return cmd_asymptotics(asym_n, asym_grid, out);
    if (figures->parsed()) return cmd_figures(fig_which, fig_n, fig_nmax, fig_grid, out);
    if (sample->parsed())
      return cmd_sample(sample_n, sample_count, sample_seed, sample_workers, out);
    if (verify->parsed()) return cmd_verify(verify_suite, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
