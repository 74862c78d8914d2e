#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "matrixless/builtin.hpp"
#include "matrixless/errors.hpp"
#include "matrixless/expansion.hpp"
#include "matrixless/io.hpp"
#include "matrixless/oracles.hpp"
#include "matrixless/predict.hpp"
#include "matrixless/recovery.hpp"
#include "matrixless/toeplitz.hpp"

namespace matrixless::cli {

namespace fs = std::filesystem;

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all{
      {"example1", "tridiagonal", "tridiagonal", 31, 4, 128, 1000, "tridiagonal (-1, 2, -2); 53-bit vs 128-bit spectra of T_1000"},
      {"example2", "bilaplacian", "bilaplacian", 31, 4, 128, 5, "bi-Laplacian; exact spectrum and perfect grid of T_5"},
      {"example3", "shifted-bilaplacian", "shifted-bilaplacian", 31, 4, 128, 1000,
       "shifted bi-Laplacian; closed-form g, spectra of T_1000"},
      {"example4", "seven-band", "", 31, 4, 256, 1000, "seven-band symbol without closed-form g; spectra of T_1000"},
      {"example5", "tridiagonal", "tridiagonal", 31, 4, 128, 1000, "expansion of the tridiagonal symbol, n0 = 31"},
      {"example6", "bilaplacian", "bilaplacian", 100, 4, 53, 1000, "bi-Laplacian expansion at 53 bits, n0 = 100"},
      {"example7", "shifted-bilaplacian", "shifted-bilaplacian", 100, 4, 256, 1000,
       "shifted bi-Laplacian expansion at 256 bits, n0 = 100"},
      {"example8", "seven-band", "", 100, 4, 512, 1000, "seven-band expansion at 512 bits, n0 = 100"},
  };
  return all;
}

std::optional<Preset> find_preset(const std::string& name) {
  for (const Preset& p : presets())
    if (p.name == name) return p;
  return std::nullopt;
}

namespace {

Symbol builtin_symbol(const std::string& name, int bits) {
  if (name == "tridiagonal") return builtin::tridiagonal(bits);
  if (name == "bilaplacian") return builtin::bilaplacian(bits);
  if (name == "shifted-bilaplacian") return builtin::shifted_bilaplacian(bits);
  if (name == "seven-band") return builtin::seven_band(bits);
  throw InputError("unknown built-in symbol " + name);
}

struct Context {
  RunConfig cfg;
  std::string preset_symbol;
  std::ostream& out;
  std::ostream& err;

  fs::path path(const std::string& file) const { return fs::path(cfg.out_dir) / file; }
};

bool has_symbol(const Context& c) { return !c.cfg.symbol_path.empty() || !c.preset_symbol.empty(); }

Symbol load_symbol(const Context& c) {
  if (!c.cfg.symbol_path.empty()) return io::read_symbol(c.cfg.symbol_path, c.cfg.bits);
  if (!c.preset_symbol.empty()) return builtin_symbol(c.preset_symbol, c.cfg.bits);
  throw InputError("no symbol: pass --symbol PATH or --preset NAME");
}

std::optional<Real> threshold_of(const Context& c, int bits) {
  if (c.cfg.threshold.empty()) return std::nullopt;
  const Real t = Real::parse(c.cfg.threshold, bits);
  if (!(t > 0)) throw InputError("--threshold must be positive");
  return t;
}

RealFunction require_g(const Context& c) {
  if (c.cfg.g_name.empty()) throw InputError("this command needs --g NAME (or a preset with a closed-form g)");
  auto g = builtin::g_by_name(c.cfg.g_name);
  if (!g) throw InputError("unknown --g " + c.cfg.g_name);
  return *g;
}

ExpansionTable cmd_expand(const Context& c) {
  if (c.cfg.n0 < 4) throw InputError("--n0 must be at least 4");
  const Symbol s = load_symbol(c);
  const PrecisionContext ctx(c.cfg.bits);
  ExtractOptions opts;
  opts.threads = c.cfg.threads;
  opts.progress = [&](const LevelProgress& p) {
    c.err << "level " << p.level + 1 << " of " << p.levels << ": n = " << p.order << ", " << p.seconds << " s\n";
  };
  c.err << "extracting n0 = " << c.cfg.n0 << ", alpha = " << c.cfg.alpha << " at " << c.cfg.bits << " bits\n";
  ExpansionTable t = extract(s, c.cfg.n0, c.cfg.alpha, ctx, c.cfg.order, opts);
  for (const std::string& w : t.warnings) c.err << "warning: " << w << "\n";
  const fs::path csv = c.path("table.csv");
  io::write_table(t, csv);
  c.out << "table: " << csv.string() << " (sidecar " << io::sidecar_path(csv).string() << ")\n";
  for (int k = 0; k <= t.alpha; ++k) {
    Real m = Real::zero(t.bits);
    for (std::size_t j = 0; j < t.n0; ++j) m = max(m, abs(t.c(static_cast<std::size_t>(k), j)));
    c.out << "max |c" << k << "| = " << to_string(m, 6) << "\n";
  }
  return t;
}

ExpansionTable obtain_table(const Context& c) {
  if (!c.cfg.table_path.empty()) return io::read_table(c.cfg.table_path);
  if (has_symbol(c)) return cmd_expand(c);
  throw InputError("pass --table PATH, or a symbol/preset to extract one");
}

RecoveredSymbol cmd_recover(const Context& c) {
  const ExpansionTable t = obtain_table(c);
  const RecoveredSymbol rs = recover(t, threshold_of(c, t.bits));
  io::write_recovered(rs, c.path("recovered.json"));
  io::write_ghat_magnitudes(rs, c.path("ghat_abs.csv"));
  c.out << "recovered: " << c.path("recovered.json").string() << "\n";
  if (rs.rctp_degree)
    c.out << "RCTP of degree " << *rs.rctp_degree << " (threshold " << to_string(rs.threshold, 3) << ")\n";
  else
    c.out << "not an RCTP at threshold " << to_string(rs.threshold, 3) << "\n";
  const std::size_t shown = std::min(c.cfg.terms, rs.ghat.size());
  for (std::size_t k = 0; k < shown; ++k) c.out << "ghat" << k << " = " << to_string(rs.ghat[k], 16) << "\n";
  return rs;
}

void cmd_predict(const Context& c) {
  if (c.cfg.n_target < 1) throw InputError("--n must be positive");
  const ExpansionTable t = obtain_table(c);
  PredictOptions opts;
  opts.interp_degree = c.cfg.interp_degree;
  RecoveredSymbol rs;
  if (c.cfg.series_row0) {
    rs = recover(t, threshold_of(c, t.bits));
    if (rs.rctp_degree) {
      opts.recovered = &rs;
      c.err << "row 0 from the recovered cosine series (RCTP of degree " << *rs.rctp_degree << ")\n";
    }
  }
  const PredictedSpectrum p = predict(t, c.cfg.n_target, opts);
  for (const std::string& w : p.warnings) c.err << "warning: " << w << "\n";
  io::write_predicted(p, c.path("predicted.csv"));
  const auto [lo, hi] = std::minmax_element(p.values.begin(), p.values.end());
  c.out << "predicted: " << c.path("predicted.csv").string() << "\n";
  c.out << "n = " << p.n << ", range [" << to_string(*lo, 8) << ", " << to_string(*hi, 8) << "]\n";
}

void cmd_exact(const Context& c) {
  if (c.cfg.n_target < 1) throw InputError("--n must be positive");
  const Symbol s = load_symbol(c);
  SpectrumSample spectrum;
  if (is_symmetrizable_tridiagonal(s)) {
    spectrum = tridiag_exact_eigenvalues(s, c.cfg.n_target);
    c.err << "closed-form tridiagonal spectrum\n";
  } else {
    c.err << "no closed form for this band; eigensolve of T_" << c.cfg.n_target << " at " << c.cfg.bits << " bits\n";
    const PrecisionContext ctx(c.cfg.bits);
    spectrum = project_real_sorted(eigenvalues(build_toeplitz(s, c.cfg.n_target), ctx), ctx, c.cfg.order);
  }
  io::write_spectrum(spectrum, c.path("exact.csv"));
  c.out << "spectrum: " << c.path("exact.csv").string() << "\n";
  c.out << "range [" << to_string(spectrum.values.front(), 8) << ", " << to_string(spectrum.values.back(), 8) << "]\n";
  if (!c.cfg.g_name.empty()) {
    const RealFunction g = require_g(c);
    PrecisionScope scope(c.cfg.bits);
    const Real tol = pow(Real(10), -(Real(c.cfg.bits) / Real(4)));
    const PerfectGrid pg = perfect_grid(g, spectrum, tol);
    io::write_perfect_grid(spectrum, pg, c.path("perfect_grid.csv"));
    Real worst = Real::zero(c.cfg.bits);
    for (const Real& r : pg.residuals) worst = max(worst, r);
    c.out << "perfect grid: " << c.path("perfect_grid.csv").string() << ", max residual " << to_string(worst, 3)
          << (pg.all_converged() ? "" : " (some entries did not converge)") << "\n";
  }
}

void cmd_compare(const Context& c) {
  if (c.cfg.n_target < 1) throw InputError("--n must be positive");
  const Symbol s = load_symbol(c);
  const std::size_t n = c.cfg.n_target;

  const PrecisionContext low_ctx(53);
  std::vector<Complex> low = eigenvalues(build_toeplitz(s.with_bits(53), n), low_ctx);
  std::sort(low.begin(), low.end(), [](const Complex& a, const Complex& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  });
  io::write_complex_spectrum(low, c.path("spectrum_53.csv"));

  c.err << "eigensolve of T_" << n << " at " << c.cfg.bits << " bits\n";
  const PrecisionContext high_ctx(c.cfg.bits);
  const SpectrumSample high = project_real_sorted(eigenvalues(build_toeplitz(s, n), high_ctx), high_ctx);
  io::write_spectrum(high, c.path("spectrum_" + std::to_string(c.cfg.bits) + ".csv"));

  std::ostringstream dev;
  dev << "j,reference,low_re,low_im,abs_error\n";
  PrecisionScope scope(c.cfg.bits);
  Real max_err = Real::zero(c.cfg.bits), max_im = Real::zero(c.cfg.bits);
  for (std::size_t j = 0; j < n; ++j) {
    const Real dre = low[j].re - high.values[j];
    const Real e = abs(Complex{dre, low[j].im});
    max_err = max(max_err, e);
    max_im = max(max_im, abs(low[j].im));
    dev << j + 1 << "," << to_string(high.values[j]) << "," << to_string(low[j].re) << "," << to_string(low[j].im) << ","
        << to_string(e) << "\n";
  }
  io::write_file(c.path("deviation.csv"), dev.str());
  bool low_real = true;
  try {
    project_real_sorted(low, low_ctx);
  } catch (const RealnessError&) {
    low_real = false;
  }
  c.out << "53-bit spectrum: " << (low_real ? "passes" : "fails") << " the realness check, max |Im| "
        << to_string(max_im, 3) << "\n";
  c.out << "max deviation from the " << c.cfg.bits << "-bit spectrum: " << to_string(max_err, 3) << "\n";
  c.out << "files: " << c.path("spectrum_53.csv").string() << ", "
        << c.path("spectrum_" + std::to_string(c.cfg.bits) + ".csv").string() << ", " << c.path("deviation.csv").string()
        << "\n";
}

void cmd_quadrature(const Context& c, std::size_t quad_points) {
  const RealFunction g = require_g(c);
  if (c.cfg.terms < 1) throw InputError("--terms must be positive");
  QuadratureOptions opts;
  if (quad_points) opts.initial_points = quad_points;
  opts.max_points = std::max(opts.initial_points, opts.max_points);
  const QuadratureResult r = fourier_coefficients_by_quadrature(g, c.cfg.terms, c.cfg.bits, opts);
  io::write_coefficients(r.coeffs, c.path("quadrature.csv"));
  c.out << "quadrature: " << c.path("quadrature.csv").string() << ", " << r.points << " points, "
        << (r.converged ? "converged" : "stopped at the point cap") << ", last change " << to_string(r.last_change, 3)
        << "\n";
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) c.out << "ghat" << k << " = " << to_string(r.coeffs[k], 16) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string order = "asc";
  std::size_t quad_points = 0;
  bool no_series = false;
  bool list_presets = false;

  CLI::App app{"Matrix-less spectra of non-normal banded Toeplitz matrices"};
  app.name("matrixless");
  app.add_option("command", cfg.command, "expand | recover | predict | exact | compare | quadrature")
      ->check(CLI::IsMember({"expand", "recover", "predict", "exact", "compare", "quadrature"}));
  app.add_option("--symbol", cfg.symbol_path, "symbol JSON {\"min_k\": int, \"coeffs\": [decimal strings]}");
  app.add_option("--preset", cfg.preset, "example1 .. example8");
  auto* o_n0 = app.add_option("--n0", cfg.n0, "base grid size");
  auto* o_alpha = app.add_option("--alpha", cfg.alpha, "highest expansion order");
  auto* o_bits = app.add_option("--bits", cfg.bits, "working precision in bits (53, or 64..4096)");
  app.add_option("--order", order, "asc | desc")->check(CLI::IsMember({"asc", "desc", "ascending", "descending"}));
  auto* o_n = app.add_option("--n", cfg.n_target, "target matrix order");
  app.add_option("--threshold", cfg.threshold, "RCTP threshold (decimal)");
  app.add_option("--interp-degree", cfg.interp_degree, "local interpolation degree for predict");
  app.add_option("--out", cfg.out_dir, "output directory");
  app.add_option("--table", cfg.table_path, "table CSV written by expand (sidecar next to it)");
  app.add_option("--g", cfg.g_name, "built-in g: tridiagonal | bilaplacian | shifted-bilaplacian");
  auto* o_terms = app.add_option("--terms", cfg.terms, "coefficients to print (recover) or compute (quadrature)");
  app.add_option("--quad-points", quad_points, "initial midpoints on [0, pi] for quadrature");
  app.add_option("--threads", cfg.threads, "levels solved concurrently by expand");
  app.add_flag("--no-series", no_series, "predict: always interpolate row 0");
  app.add_flag("--list-presets", list_presets, "print the presets and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  if (list_presets) {
    for (const Preset& p : presets())
      out << p.name << ": n0 = " << p.n0 << ", alpha = " << p.alpha << ", bits = " << p.bits << ", n = " << p.n << "  "
          << p.summary << "\n";
    return ok;
  }
  if (cfg.command.empty()) {
    err << "missing command; see --help\n";
    return input_error;
  }

  try {
    Context c{cfg, {}, out, err};
    c.cfg.order = io::parse_order(order);
    c.cfg.series_row0 = !no_series;
    if (!cfg.preset.empty()) {
      const auto p = find_preset(cfg.preset);
      if (!p) throw InputError("unknown preset " + cfg.preset);
      if (o_n0->count() == 0) c.cfg.n0 = p->n0;
      if (o_alpha->count() == 0) c.cfg.alpha = p->alpha;
      if (o_bits->count() == 0) c.cfg.bits = p->bits;
      if (o_n->count() == 0) c.cfg.n_target = p->n;
      if (c.cfg.g_name.empty()) c.cfg.g_name = p->g;
      if (o_terms->count() == 0 && cfg.command == "quadrature") c.cfg.terms = 10;
      if (c.cfg.symbol_path.empty()) c.preset_symbol = p->symbol;
    }
    if (c.cfg.bits != 53 && (c.cfg.bits < 64 || c.cfg.bits > 4096))
      throw InputError("--bits must be 53 or within 64..4096");
    if (c.cfg.alpha < 0) throw InputError("--alpha must be non-negative");
    if (c.cfg.interp_degree < 0) throw InputError("--interp-degree must be non-negative");
    fs::create_directories(c.cfg.out_dir);

    const std::string& cmd = c.cfg.command;
    if (cmd == "expand") cmd_expand(c);
    else if (cmd == "recover") cmd_recover(c);
    else if (cmd == "predict") cmd_predict(c);
    else if (cmd == "exact") cmd_exact(c);
    else if (cmd == "compare") cmd_compare(c);
    else cmd_quadrature(c, quad_points);
    return ok;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return numeric_failure;
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return numeric_failure;
  }
}

}  // namespace matrixless::cli
