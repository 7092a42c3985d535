#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "bcqho/format.hpp"
#include "bcqho/json_io.hpp"
#include "bcqho/verify.hpp"
#include "bcqho/wavefn.hpp"

// Exit codes: 0 success, 1 verification failure, 2 usage/config error.

namespace {

using namespace bcqho;

struct RunConfig {
  OscillatorParams params;
  std::size_t trunc = 32;
  Tolerance tol;
  std::string format = "json";
  std::string out_path;
};

void add_shared_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--m", cfg.params.mass, "mass")->capture_default_str();
  cmd->add_option("--omega", cfg.params.omega, "angular frequency")
      ->capture_default_str();
  cmd->add_option("--hbar", cfg.params.hbar, "action scale")
      ->capture_default_str();
  cmd->add_option("--xi1", cfg.params.xi.x1, "first component of xi")
      ->capture_default_str();
  cmd->add_option("--xi2", cfg.params.xi.x2, "second component of xi")
      ->capture_default_str();
  cmd->add_option("--trunc", cfg.trunc, "truncation level N (dimension N+1)")
      ->capture_default_str();
  cmd->add_option("--tol", cfg.tol.rel_eps, "relative tolerance")
      ->capture_default_str();
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", cfg.out_path, "output path (default: stdout)");
}

int check_config(const RunConfig& cfg) {
  if (!(cfg.params.mass > 0.0) || !(cfg.params.omega > 0.0) ||
      !(cfg.params.hbar > 0.0)) {
    std::cerr << "error: invalid params: m, omega, hbar must be positive\n";
    return 2;
  }
  if (!in_d_plus(cfg.params.xi, /*strict=*/true)) {
    std::cerr << "error: invalid params: xi1 and xi2 must be positive\n";
    return 2;
  }
  if (cfg.trunc < 1) {
    std::cerr << "error: invalid config: --trunc must be >= 1\n";
    return 2;
  }
  if (cfg.tol.rel_eps < 0.0 || cfg.tol.abs_eps < 0.0) {
    std::cerr << "error: invalid config: tolerance must be >= 0\n";
    return 2;
  }
  return 0;
}

int emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path " << cfg.out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int cmd_spectrum(const RunConfig& cfg, int max_l, int max_lprime) {
  if (max_l < 0 || max_lprime < 0 ||
      static_cast<std::size_t>(max_l) > cfg.trunc ||
      static_cast<std::size_t>(max_lprime) > cfg.trunc) {
    std::cerr << "error: max level indices must lie in [0, trunc]\n";
    return 2;
  }
  const auto entries =
      enumerate_spectrum(max_l, max_lprime, cfg.trunc, cfg.params);
  if (cfg.format == "csv") return emit(cfg, spectrum_csv(entries));
  const Json doc{{"records", spectrum_json(entries)}};
  return emit(cfg, doc.dump(2) + "\n");
}

int cmd_wavefunction(const RunConfig& cfg, int l, int lprime, Complex w1,
                     Complex w2, double xmin, double xmax, int samples,
                     bool jbasis) {
  if (samples < 2 || !(xmin < xmax)) {
    std::cerr << "error: need samples >= 2 and xmin < xmax\n";
    return 2;
  }
  MsFunction u;
  try {
    u = phi_mixed(l, lprime, w1, w2, cfg.params);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.format == "csv") {
    std::string text = "x,u1_re,u1_im,u2_re,u2_im";
    if (jbasis) text += ",real_re,real_im,j_re,j_im";
    text += "\n";
    for (int i = 0; i < samples; ++i) {
      const double x = xmin + (xmax - xmin) * i / (samples - 1);
      const Complex u1 = u.eval_component(1, x);
      const Complex u2 = u.eval_component(2, x);
      text += format_double(x) + "," + format_double(u1.real()) + "," +
              format_double(u1.imag()) + "," + format_double(u2.real()) + "," +
              format_double(u2.imag());
      if (jbasis) {
        const auto [re, jp] = to_unit_j_form(u, x);
        text += "," + format_double(re.real()) + "," + format_double(re.imag()) +
                "," + format_double(jp.real()) + "," + format_double(jp.imag());
      }
      text += "\n";
    }
    return emit(cfg, text);
  }

  Json records = Json::array();
  for (int i = 0; i < samples; ++i) {
    const double x = xmin + (xmax - xmin) * i / (samples - 1);
    const Complex u1 = u.eval_component(1, x);
    const Complex u2 = u.eval_component(2, x);
    Json rec{{"x", x},
             {"u1_re", u1.real()},
             {"u1_im", u1.imag()},
             {"u2_re", u2.real()},
             {"u2_im", u2.imag()}};
    if (jbasis) {
      const auto [re, jp] = to_unit_j_form(u, x);
      rec["real_re"] = re.real();
      rec["real_im"] = re.imag();
      rec["j_re"] = jp.real();
      rec["j_im"] = jp.imag();
    }
    records.push_back(std::move(rec));
  }
  const Json doc{{"records", std::move(records)}};
  return emit(cfg, doc.dump(2) + "\n");
}

int cmd_hermite(const RunConfig& cfg, int l, double theta1, double theta2) {
  HermitePoly hp;
  try {
    hp = hermite_coeffs(l);
  } catch (const OrderTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const Hyperbolic value = hermite_hyperbolic_eval(l, {theta1, theta2});

  if (cfg.format == "csv") {
    std::string text = "l,power,coeff,theta1,theta2,eval1,eval2\n";
    for (std::size_t pw = 0; pw < hp.coeffs.size(); ++pw)
      text += std::to_string(l) + "," + std::to_string(pw) + "," +
              hp.coeffs[pw].str() + "," + format_double(theta1) + "," +
              format_double(theta2) + "," + format_double(value.x1) + "," +
              format_double(value.x2) + "\n";
    return emit(cfg, text);
  }

  Json coeffs = Json::array();
  Json records = Json::array();
  for (std::size_t pw = 0; pw < hp.coeffs.size(); ++pw) {
    coeffs.push_back(hp.coeffs[pw].str());
    records.push_back(Json{{"power", pw}, {"coeff", hp.coeffs[pw].str()}});
  }
  const Json doc{{"l", l},
                 {"coeffs", std::move(coeffs)},
                 {"records", std::move(records)},
                 {"theta", {{"x1", theta1}, {"x2", theta2}}},
                 {"eval", {{"x1", value.x1}, {"x2", value.x2}}}};
  return emit(cfg, doc.dump(2) + "\n");
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  VerifyConfig vc{cfg.params, cfg.trunc, cfg.tol};
  const auto results = verify_suite(suite, vc);
  const int rc = emit(cfg, format_report(results));
  if (rc != 0) return rc;
  return all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicomplex quantum harmonic oscillator toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;

  int max_l = 4, max_lprime = 4;
  auto* spectrum = app.add_subcommand(
      "spectrum", "enumerate eigenvalues/eigenkets over (l, l') pairs");
  add_shared_options(spectrum, cfg);
  spectrum->add_option("--max-l", max_l, "largest l")->capture_default_str();
  spectrum->add_option("--max-lprime", max_lprime, "largest l'")
      ->capture_default_str();

  int wf_l = 0, wf_lprime = 0, wf_samples = 201;
  double w1_re = 1.0, w1_im = 0.0, w2_re = 1.0, w2_im = 0.0;
  double xmin = -5.0, xmax = 5.0;
  bool jbasis = false;
  auto* wavefunction = app.add_subcommand(
      "wavefunction", "sample a (possibly mixed) eigenfunction on a grid");
  add_shared_options(wavefunction, cfg);
  wavefunction->add_option("--l", wf_l, "level in the e1 sector")
      ->capture_default_str();
  wavefunction->add_option("--lprime", wf_lprime, "level in the e2 sector")
      ->capture_default_str();
  wavefunction->add_option("--w1-re", w1_re, "Re w1")->capture_default_str();
  wavefunction->add_option("--w1-im", w1_im, "Im w1")->capture_default_str();
  wavefunction->add_option("--w2-re", w2_re, "Re w2")->capture_default_str();
  wavefunction->add_option("--w2-im", w2_im, "Im w2")->capture_default_str();
  wavefunction->add_option("--xmin", xmin, "grid start")->capture_default_str();
  wavefunction->add_option("--xmax", xmax, "grid end")->capture_default_str();
  wavefunction->add_option("--samples", wf_samples, "grid points (>= 2)")
      ->capture_default_str();
  wavefunction->add_flag("--jbasis", jbasis,
                         "also emit the 1/j-basis columns");

  int h_l = 0;
  double theta1 = 0.0, theta2 = 0.0;
  auto* hermite = app.add_subcommand(
      "hermite", "hyperbolic Hermite polynomial coefficients and value");
  add_shared_options(hermite, cfg);
  hermite->add_option("--l", h_l, "order (<= 60)")->capture_default_str();
  hermite->add_option("--theta1", theta1, "first component of theta")
      ->capture_default_str();
  hermite->add_option("--theta2", theta2, "second component of theta")
      ->capture_default_str();

  std::string suite = "all";
  auto* verify = app.add_subcommand(
      "verify", "run a module invariant suite and report residuals");
  add_shared_options(verify, cfg);
  verify->add_option("--suite", suite, "core|fock|oscillator|wavefn|all")
      ->check(CLI::IsMember({"core", "fock", "oscillator", "wavefn", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (const int rc = check_config(cfg); rc != 0) return rc;

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg, max_l, max_lprime);
    if (wavefunction->parsed())
      return cmd_wavefunction(cfg, wf_l, wf_lprime, Complex{w1_re, w1_im},
                              Complex{w2_re, w2_im}, xmin, xmax, wf_samples,
                              jbasis);
    if (hermite->parsed()) return cmd_hermite(cfg, h_l, theta1, theta2);
    if (verify->parsed()) return cmd_verify(cfg, suite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
