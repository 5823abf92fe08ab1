// bnzero: explicit zero-free discs for the Riemann zeta function and
// Dirichlet L-functions via weighted-L2 approximation distances.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bnzero/discs.hpp"
#include "bnzero/report_format.hpp"

using nlohmann::json;
using namespace bnzero;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad alpha entry: " + item);
    out.push_back(v);
  }
  return out;
}

DirichletCharacter load_character(const std::string& source) {
  // builtin shorthand qN: the real quadratic character mod N (Kronecker
  // symbol of the fundamental discriminant -N, falling back to +N)
  if (source.size() >= 2 && source[0] == 'q' &&
      source.find_first_not_of("0123456789", 1) == std::string::npos) {
    const std::int64_t q = std::stoll(source.substr(1));
    if (is_fundamental_discriminant(-q)) return kronecker_character(-q);
    if (is_fundamental_discriminant(q)) return kronecker_character(q);
    throw std::invalid_argument("no builtin quadratic character mod " + source.substr(1));
  }
  std::ifstream in(source);
  if (!in) throw std::runtime_error("io: cannot open character file " + source);
  json j;
  in >> j;
  const std::int64_t q = j.at("q").get<std::int64_t>();
  std::vector<Complex> values;
  for (const auto& pair : j.at("values")) {
    values.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return DirichletCharacter::validate(q, std::move(values));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ----- zeta-disc ------------------------------------------------------------

struct ZetaDiscArgs {
  std::string lambda;
  double r = 0.5;
  double sigma1 = 0.0;
  double alpha = 0.25;
  std::string norm_mode = "bound";
};

int run_zeta_disc(const ZetaDiscArgs& args) {
  const Complex lambda = parse_complex(args.lambda);
  if (args.norm_mode != "bound" && args.norm_mode != "computed") {
    throw std::domain_error("zeta-disc: --norm-mode must be 'bound' or 'computed'");
  }
  const NormMode mode = args.norm_mode == "bound" ? NormMode::Bound : NormMode::Computed;
  const ZetaDiscReport rep = zeta_explicit_disc(lambda, args.r, args.sigma1, args.alpha, mode);

  json out;
  out["command"] = "zeta-disc";
  out["config"] = {{"lambda", complex_json(lambda)}, {"r", args.r},      {"sigma1", args.sigma1},
                   {"alpha", args.alpha},            {"norm_mode", args.norm_mode}};
  out["result"] = {{"center_re", rep.disc.center.real()},
                   {"center_im", rep.disc.center.imag()},
                   {"radius", rep.disc.radius},
                   {"R_pseudo", rep.pseudo.R},
                   {"F_value", rep.F},
                   {"psi_norm_used", rep.psi_norm_used},
                   {"is_half_plane", rep.disc.is_half_plane}};
  emit(out);
  return kExitOk;
}

// ----- scan -----------------------------------------------------------------

struct ScanArgs {
  double t_min = 0.0, t_max = 0.0, step = 0.0;
  double re_lambda = 0.01;
  double r = 0.49;
  double sigma1 = 0.0;
  double alpha = 0.25;
  std::string norm_mode = "bound";
  std::string out_path;
  std::string svg_path;
};

int run_scan(const ScanArgs& args) {
  if (!(args.step > 0.0)) throw std::domain_error("scan: --step must be > 0");
  if (args.t_max < args.t_min) throw std::domain_error("scan: need t-max >= t-min");
  if (args.norm_mode != "bound" && args.norm_mode != "computed") {
    throw std::domain_error("scan: --norm-mode must be 'bound' or 'computed'");
  }
  const NormMode mode = args.norm_mode == "bound" ? NormMode::Bound : NormMode::Computed;
  const double psi_l2 = zeta_disc_psi_l2(args.r, args.sigma1, mode);

  const std::int64_t rows =
      static_cast<std::int64_t>(std::floor((args.t_max - args.t_min) / args.step + 1e-9)) + 1;
  std::vector<ZetaDiscReport> reports(static_cast<size_t>(rows));
  std::vector<double> ts(static_cast<size_t>(rows));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (std::int64_t i = 0; i < rows; ++i) {
    const double t = args.t_min + static_cast<double>(i) * args.step;
    ts[static_cast<size_t>(i)] = t;
    reports[static_cast<size_t>(i)] = zeta_explicit_disc_given_norm(
        Complex(args.re_lambda, t), args.r, args.sigma1, args.alpha, psi_l2);
  }

  std::ofstream csv(args.out_path);
  if (!csv) throw std::runtime_error("io: cannot open output file " + args.out_path);
  csv << "t,re_center,im_center,radius,R_pseudo\n";
  for (std::int64_t i = 0; i < rows; ++i) {
    const auto& rep = reports[static_cast<size_t>(i)];
    csv << format_double(ts[static_cast<size_t>(i)]) << "," << format_double(rep.disc.center.real())
        << "," << format_double(rep.disc.center.imag()) << "," << format_double(rep.disc.radius)
        << "," << format_double(rep.pseudo.R) << "\n";
  }
  csv.close();
  if (!csv) throw std::runtime_error("io: failed writing " + args.out_path);

  if (!args.svg_path.empty()) {
    SvgSeries series;
    for (std::int64_t i = 0; i < rows; ++i) {
      series.x.push_back(ts[static_cast<size_t>(i)]);
      series.y.push_back(reports[static_cast<size_t>(i)].disc.radius);
    }
    std::ofstream svg(args.svg_path);
    if (!svg) throw std::runtime_error("io: cannot open svg file " + args.svg_path);
    svg << render_radius_svg(series, "t", "radius (log10)");
    svg.close();
    if (!svg) throw std::runtime_error("io: failed writing " + args.svg_path);
  }

  json out;
  out["command"] = "scan";
  out["rows"] = rows;
  out["out"] = args.out_path;
  if (!args.svg_path.empty()) out["svg"] = args.svg_path;
  emit(out);
  return kExitOk;
}

// ----- distance -------------------------------------------------------------

struct DistanceArgs {
  std::string series = "zeta";
  double r = 0.5;
  std::string lambda;
  std::string alphas;
  std::string char_source;
  std::string m = "auto";
  double sigma1 = 0.0;
  double siegel_c = 0.0;
  bool siegel_given = false;
};

int run_distance(const DistanceArgs& args) {
  const Complex lambda = parse_complex(args.lambda);
  std::vector<double> alphas = parse_alpha_list(args.alphas);
  std::sort(alphas.begin(), alphas.end());

  SeriesSpec spec = SeriesSpec::zeta();
  PhiProfile profile = PhiProfile::indicator();
  std::optional<DirichletCharacter> chi;
  if (args.series == "zeta") {
    profile = args.sigma1 == 0.0 ? PhiProfile::indicator() : PhiProfile::power(args.sigma1);
    if (!zeta_integrable(args.r, args.sigma1)) {
      throw std::domain_error(
          "distance: psi is not square-integrable here; the zeta rule requires "
          "r > max(0, sigma1) and r != 1");
    }
  } else if (args.series == "dirichlet") {
    if (args.char_source.empty()) throw std::domain_error("distance: dirichlet needs --char-file");
    if (args.sigma1 != 0.0) {
      throw std::domain_error("distance: the Dirichlet route is defined for the indicator profile");
    }
    chi = load_character(args.char_source);
    spec = SeriesSpec::dirichlet(*chi);  // rejects principal characters
  } else {
    throw std::domain_error("distance: --series must be zeta or dirichlet");
  }

  int m = spec.pole_order();
  if (args.m != "auto") {
    m = std::stoi(args.m);
    if (m < spec.pole_order()) {
      throw std::domain_error("distance: --m must be at least the pole order of the series");
    }
  }

  // family: sliding (m+1)-point windows over the sorted alphas
  std::vector<AdmissibleSequence> gens;
  if (!alphas.empty()) {
    if (static_cast<int>(alphas.size()) < m + 1) {
      throw std::domain_error("distance: need at least m+1 alphas");
    }
    for (size_t k = 0; k + m < alphas.size(); ++k) {
      std::vector<double> window(alphas.begin() + k, alphas.begin() + k + m + 1);
      gens.push_back(AdmissibleSequence::construct(window, m));
    }
  }
  GeneratorFamily fam(spec, profile, args.r, gens);
  const DistanceResult res = distance(fam, lambda);

  json out;
  out["command"] = "distance";
  out["config"] = {{"series", args.series},   {"r", args.r},
                   {"lambda", complex_json(lambda)}, {"alphas", alphas},
                   {"m", m},                  {"sigma1", args.sigma1}};
  if (!args.char_source.empty()) out["config"]["char"] = args.char_source;
  json coeffs = json::array();
  for (const Complex& c : res.coefficients) coeffs.push_back(complex_json(c));
  out["result"] = {{"d_sq", res.d_sq},
                   {"coefficients", coeffs},
                   {"gram_condition", res.gram_condition},
                   {"residual_check", res.residual_check}};
  if (args.series == "dirichlet" && args.r >= 0.5 && args.r < 1.0 &&
      std::abs(lambda - Complex(1.0 - args.r, 0.0)) < 1e-12) {
    out["result"]["real_interval"] = dirichlet_real_interval(args.r, res.d_sq);
  }
  if (args.siegel_given) {
    if (!chi) throw std::domain_error("distance: --siegel-C needs a Dirichlet character");
    const SiegelResult sg =
        siegel_criterion(res.d_sq, args.r, static_cast<double>(chi->modulus()), args.siegel_c);
    out["result"]["siegel"] = {
        {"C", args.siegel_c}, {"holds", sg.holds}, {"threshold", sg.threshold}, {"slack", sg.slack}};
  }
  emit(out);
  return kExitOk;
}

// ----- psi-norm -------------------------------------------------------------

struct PsiNormArgs {
  std::string series = "zeta";
  std::string char_source;
  double r = 0.5;
  double sigma1 = 0.0;
  std::int64_t k_max = 10000;
};

int run_psi_norm(const PsiNormArgs& args) {
  SeriesSpec spec = SeriesSpec::zeta();
  PhiProfile profile = PhiProfile::indicator();
  if (args.series == "zeta") {
    profile = args.sigma1 == 0.0 ? PhiProfile::indicator() : PhiProfile::power(args.sigma1);
    if (!zeta_integrable(args.r, args.sigma1)) {
      throw std::domain_error(
          "psi-norm: not integrable; the zeta rule requires r > max(0, sigma1) and r != 1");
    }
  } else if (args.series == "dirichlet") {
    if (args.char_source.empty()) throw std::domain_error("psi-norm: dirichlet needs --char");
    if (args.sigma1 != 0.0) {
      throw std::domain_error("psi-norm: the Dirichlet route uses the indicator profile");
    }
    spec = SeriesSpec::dirichlet(load_character(args.char_source));
    if (!(args.r > 0.0)) throw std::domain_error("psi-norm: needs r > 0");
  } else {
    throw std::domain_error("psi-norm: --series must be zeta or dirichlet");
  }
  PsiNormSettings settings;
  settings.k_max = args.k_max;
  const PsiNormResult res = psi_norm(spec, profile, args.r, settings);

  json out;
  out["command"] = "psi-norm";
  out["config"] = {{"series", args.series}, {"r", args.r}, {"sigma1", args.sigma1},
                   {"k_max", args.k_max}};
  if (!args.char_source.empty()) out["config"]["char"] = args.char_source;
  out["result"] = {{"norm_sq", res.norm_sq},
                   {"truncation_error_bound", res.truncation_error_bound},
                   {"intervals_used", res.intervals_used}};
  emit(out);
  return kExitOk;
}

// ----- admissible -----------------------------------------------------------

struct AdmissibleArgs {
  int m = 1;
  std::string alphas;
};

int run_admissible(const AdmissibleArgs& args) {
  std::vector<double> alphas = parse_alpha_list(args.alphas);
  const AdmissibleSequence seq = AdmissibleSequence::construct(alphas, args.m);
  json coeffs = json::array();
  for (const Complex& c : seq.coeffs()) coeffs.push_back(complex_json(c));
  json out;
  out["command"] = "admissible";
  out["config"] = {{"m", args.m}, {"alphas", alphas}};
  out["result"] = {{"coefficients", coeffs}, {"length", seq.length()}};
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-free discs for zeta and Dirichlet L-functions"};
  app.require_subcommand(1);

  ZetaDiscArgs zd;
  CLI::App* zeta_disc = app.add_subcommand("zeta-disc", "explicit zero-free disc for zeta");
  zeta_disc->add_option("--lambda", zd.lambda, "complex a+bi, re > 0")->required();
  zeta_disc->add_option("--r", zd.r, "exponent, max(0,sigma1) < r < 1")->required();
  zeta_disc->add_option("--sigma1", zd.sigma1, "profile singularity exponent, < 1/2")->required();
  zeta_disc->add_option("--alpha", zd.alpha, "generator point (default 1/4)");
  zeta_disc->add_option("--norm-mode", zd.norm_mode, "bound|computed (default bound)");

  ScanArgs sc;
  CLI::App* scan = app.add_subcommand("scan", "sweep the zeta disc along t, write CSV/SVG");
  scan->add_option("--t-min", sc.t_min)->required();
  scan->add_option("--t-max", sc.t_max)->required();
  scan->add_option("--step", sc.step)->required();
  scan->add_option("--re-lambda", sc.re_lambda)->required();
  scan->add_option("--r", sc.r)->required();
  scan->add_option("--sigma1", sc.sigma1)->required();
  scan->add_option("--alpha", sc.alpha);
  scan->add_option("--norm-mode", sc.norm_mode);
  scan->add_option("--out", sc.out_path, "CSV output path")->required();
  scan->add_option("--svg", sc.svg_path, "optional SVG plot path");

  DistanceArgs di;
  CLI::App* dist = app.add_subcommand("distance", "weighted-L2 distance over a generator family");
  dist->add_option("--series", di.series, "zeta|dirichlet")->required();
  dist->add_option("--r", di.r)->required();
  dist->add_option("--lambda", di.lambda)->required();
  dist->add_option("--alphas", di.alphas, "comma list in (0,1]");
  dist->add_option("--char-file,--char", di.char_source, "character JSON path or builtin qN");
  dist->add_option("--m", di.m, "admissibility order or 'auto'");
  dist->add_option("--sigma1", di.sigma1);
  dist->add_option("--siegel-C", di.siegel_c);

  PsiNormArgs pn;
  CLI::App* psi = app.add_subcommand("psi-norm", "weighted L2 norm of the psi kernel");
  psi->add_option("--series", pn.series, "zeta|dirichlet")->required();
  psi->add_option("--char", pn.char_source, "character JSON path or builtin qN");
  psi->add_option("--r", pn.r)->required();
  psi->add_option("--sigma1", pn.sigma1);
  psi->add_option("--k-max", pn.k_max);

  AdmissibleArgs ad;
  CLI::App* adm = app.add_subcommand("admissible", "construct an m-admissible sequence");
  adm->add_option("--m", ad.m)->required();
  adm->add_option("--alphas", ad.alphas, "comma list, strictly increasing in (0,1]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  }
  di.siegel_given = dist->count("--siegel-C") > 0;

  try {
    if (zeta_disc->parsed()) return run_zeta_disc(zd);
    if (scan->parsed()) return run_scan(sc);
    if (dist->parsed()) return run_distance(di);
    if (psi->parsed()) return run_psi_norm(pn);
    if (adm->parsed()) return run_admissible(ad);
  } catch (const std::runtime_error& e) {
    // io failures and non-integrability
    const std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    if (what.rfind("io:", 0) == 0) return kExitIo;
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
