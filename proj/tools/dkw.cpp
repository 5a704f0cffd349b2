// Command-line front end: matrix dumps, verification suites, radial solves,
// and the aggregate sweep.  All reports are deterministic JSON; exit status is
// 0 when every check passes, 1 on a failing check (named on stderr), 2 on
// usage errors.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dkw/suites.hpp"

using namespace dkw;

namespace {

std::string output_path(const std::string& name) {
  const char* dir = std::getenv("DKW_OUTPUT_DIR");
  if (!dir || !*dir) return name;
  return std::string(dir) + "/" + name;
}

int emit(const Report& rep, const std::string& out) {
  const std::string js = rep.to_json();
  if (out.empty()) {
    std::fputs(js.c_str(), stdout);
  } else {
    std::ofstream f(output_path(out), std::ios::binary);
    f << js;
  }
  if (!rep.all_pass()) {
    for (const auto& c : rep.checks)
      if (!c.pass)
        std::fprintf(stderr, "failing check: %s (residual %s, tolerance %s)\n",
                     c.name.c_str(), json_float(c.residual).c_str(),
                     json_float(c.tolerance).c_str());
    return 1;
  }
  return 0;
}

void dump_matrix(std::string& out, const DKMatrix& mat, const std::string& fmt,
                 bool first) {
  if (fmt == "csv") {
    out += "# " + mat.label + "\n";
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        if (j) out += ",";
        out += json_float(mat.m(i, j).real()) + "," +
               json_float(mat.m(i, j).imag());
      }
      out += "\n";
    }
    return;
  }
  if (!first) out += ",\n";
  out += "  {\"basis\": " +
         json_string(mat.basis == Basis::Cartesian ? "cartesian" : "cyclic") +
         ", \"name\": " + json_string(mat.label) + ", \"rows\": [";
  for (int i = 0; i < 10; ++i) {
    out += (i ? ", [" : "[");
    for (int j = 0; j < 10; ++j) {
      if (j) out += ", ";
      out += "{\"re\": " + json_float(mat.m(i, j).real()) +
             ", \"im\": " + json_float(mat.m(i, j).imag()) + "}";
    }
    out += "]";
  }
  out += "]}";
}

int run_show(const std::string& basis_name, const std::string& fmt,
             const std::string& out) {
  const Basis basis =
      basis_name == "cartesian" ? Basis::Cartesian : Basis::Cyclic;
  std::string text = fmt == "json" ? "[\n" : "";
  bool first = true;
  for (int a = 0; a < 4; ++a) {
    dump_matrix(text, build_beta(a, basis), fmt, first);
    first = false;
  }
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) dump_matrix(text, build_j(a, b, basis), fmt, false);
  if (fmt == "json") text += "\n]\n";
  if (out.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream f(output_path(out), std::ios::binary);
    f << text;
  }
  return 0;
}

int run_solve_minimal(double kappa, double eps, double mass) {
  const double jmin = (std::fabs(std::fabs(kappa) - 0.5) < 1e-9)
                          ? std::fabs(kappa)
                          : std::fabs(kappa) - 1.0;
  const QuantumNumbers qn{eps, jmin, std::fmod(jmin, 1.0), kappa};
  const FieldAnsatz a = build_ansatz(qn);
  int n_active = 0;
  for (bool b : a.active) n_active += b;
  if (n_active != 3) {
    std::fprintf(stderr,
                 "no closed form: minimal j for |kappa| = 1/2 is not scalar\n");
    return 2;
  }
  std::vector<double> grid;
  for (int k = 0; k <= 4096; ++k) grid.push_back(0.1 + k * 9.9 / 4096);
  const RadialProfile prof = minimal_j_solution(qn, mass, grid);
  const RadialSystem sys = radial_system(qn, mass);
  const double k2 = eps * eps - mass * mass;
  std::printf("j = %s, main slot f%d = F(r)/r\n", json_float(jmin).c_str(),
              kappa > 0 ? 2 : 4);
  if (prof.degenerate_branch)
    std::printf("degenerate branch: F = r (eps = mass)\n");
  else if (k2 > 0)
    std::printf("oscillatory branch: wavenumber %s\n",
                json_float(std::sqrt(k2)).c_str());
  else
    std::printf("decaying branch: decay rate %s\n",
                json_float(std::sqrt(-k2)).c_str());
  const double res = residual(sys, prof);
  std::printf("system residual %s\n", json_float(res).c_str());
  return res < 1e-10 ? 0 : 1;
}

int run_solve_radial(double kappa, double j, double eps, double mass,
                     double r0, double r1, int steps, long seed,
                     const std::string& out) {
  const QuantumNumbers qn{eps, j, std::fmod(j, 1.0), kappa};
  if (!admissible(qn)) {
    std::fprintf(stderr, "inadmissible (kappa, j)\n");
    return 2;
  }
  const RadialSystem sys = radial_system(qn, mass);
  std::mt19937_64 rng(seed);
  RadialProfile prof;
  if (sys.active_slots.size() == 10) {
    std::array<cplx, 4> f0, fp0;
    for (int t = 0; t < 4; ++t) {
      f0[t] = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
      fp0[t] = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    }
    prof = integrate(sys, f0, fp0, r0, r1, steps);
  } else if (sys.active_slots.size() == 3) {
    std::vector<double> grid;
    for (int k = 0; k <= steps; ++k)
      grid.push_back(r0 + k * (r1 - r0) / steps);
    prof = minimal_j_solution(qn, mass, grid);
  } else {
    detail::DaeSplit dae;
    dae.build(sys);
    Eigen::VectorXcd y0(dae.diff_slots.size());
    for (int t = 0; t < y0.size(); ++t)
      y0[t] = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    prof = integrate_core(sys, y0, r0, r1, steps);
  }
  std::string csv = "r";
  for (int s = 1; s <= 10; ++s)
    csv += ",Re f" + std::to_string(s) + ",Im f" + std::to_string(s);
  csv += "\n";
  for (std::size_t k = 0; k < prof.grid.size(); ++k) {
    csv += json_float(prof.grid[k]);
    for (int s = 0; s < 10; ++s) {
      const cplx v = prof.values[s].empty() ? cplx{} : prof.values[s][k];
      csv += "," + json_float(v.real()) + "," + json_float(v.imag());
    }
    csv += "\n";
  }
  if (out.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    std::ofstream f(output_path(out), std::ios::binary);
    f << csv;
  }
  const double res = residual(sys, prof);
  std::fprintf(stderr, "system residual %s\n", json_float(res).c_str());
  return res < 1e-6 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification workbench for the 10-component vector formalism "
               "in a monopole background"};
  app.require_subcommand(1);

  // show matrices
  auto* show = app.add_subcommand("show", "dump constructed objects");
  show->require_subcommand(1);
  auto* show_m = show->add_subcommand("matrices", "all beta and j matrices");
  std::string basis = "cyclic", format = "json", out;
  show_m->add_option("--basis", basis)->check(CLI::IsMember({"cartesian", "cyclic"}));
  show_m->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  show_m->add_option("--out", out);

  // verify suites
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  int trials = 100;
  long seed = 1;
  double kappa = 1.0, j = 2.0, m = 0.0, eps = 1.3, mass = 1.0;
  std::string pcase = "b";
  auto* v_alg = verify->add_subcommand("algebra", "matrix identities");
  v_alg->add_option("--out", out);
  auto* v_gauge = verify->add_subcommand("gauge", "covariance checks");
  v_gauge->add_option("--trials", trials);
  v_gauge->add_option("--seed", seed);
  v_gauge->add_option("--out", out);
  auto* v_sep = verify->add_subcommand("separation", "angular reduction");
  v_sep->add_option("--kappa", kappa);
  v_sep->add_option("--j", j);
  v_sep->add_option("--m", m);
  v_sep->add_option("--trials", trials);
  v_sep->add_option("--seed", seed);
  v_sep->add_option("--out", out);
  auto* v_lor = verify->add_subcommand("lorentz", "transversality and tensor form");
  v_lor->add_option("--kappa", kappa);
  v_lor->add_option("--j", j);
  v_lor->add_option("--epsilon", eps);
  v_lor->add_option("--mass", mass);
  v_lor->add_option("--seed", seed);
  v_lor->add_option("--out", out);
  auto* v_par = verify->add_subcommand("parity", "constraint elimination");
  v_par->add_option("--kappa", kappa);
  v_par->add_option("--j", j);
  v_par->add_option("--epsilon", eps);
  v_par->add_option("--mass", mass);
  v_par->add_option("--case", pcase)->check(CLI::IsMember({"b", "c"}));
  v_par->add_option("--seed", seed);
  v_par->add_option("--out", out);

  // solve
  auto* solve = app.add_subcommand("solve", "radial solutions");
  solve->require_subcommand(1);
  double r0 = 0.5, r1 = 4.0;
  int steps = 4096;
  auto* s_min = solve->add_subcommand("minimal", "closed-form minimal-j state");
  s_min->add_option("--kappa", kappa);
  s_min->add_option("--epsilon", eps);
  s_min->add_option("--mass", mass);
  auto* s_rad = solve->add_subcommand("radial", "integrate and dump CSV");
  s_rad->add_option("--kappa", kappa);
  s_rad->add_option("--j", j);
  s_rad->add_option("--epsilon", eps);
  s_rad->add_option("--mass", mass);
  s_rad->add_option("--r0", r0);
  s_rad->add_option("--r1", r1);
  s_rad->add_option("--steps", steps);
  s_rad->add_option("--seed", seed);
  s_rad->add_option("--out", out);

  auto* sweep = app.add_subcommand("sweep", "aggregate verification over a grid");
  sweep->add_option("--seed", seed);
  sweep->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*show_m) return run_show(basis, format, out);
    if (*v_alg) return emit(suite_algebra(), out);
    if (*v_gauge) return emit(suite_gauge(trials, seed), out);
    if (*v_sep) return emit(suite_separation(kappa, j, m, trials, seed), out);
    if (*v_lor) return emit(suite_lorentz(kappa, j, eps, mass, seed), out);
    if (*v_par)
      return emit(suite_parity(kappa, j, eps, mass, pcase[0], seed), out);
    if (*s_min) return run_solve_minimal(kappa, eps, mass);
    if (*s_rad)
      return run_solve_radial(kappa, j, eps, mass, r0, r1, steps, seed, out);
    if (*sweep) return emit(suite_sweep(seed), out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
