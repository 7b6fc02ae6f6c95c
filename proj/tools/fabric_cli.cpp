// Command-line front end: build curvature tables, run the verification and
// integrality suites, classify symmetry, render SVG, and check the sangaku
// identities. Exit codes: 0 success, 1 verification failure, 2 bad flags.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fabric/engine.hpp"
#include "fabric/format.hpp"
#include "fabric/sangaku.hpp"
#include "fabric/svg.hpp"
#include "fabric/table.hpp"
#include "fabric/verify.hpp"

namespace {

struct SpecFlags {
  double d = 1.0;
  double ax = 0.0;
  double ay = 0.0;
  double r = 1.0;
  int window = 6;

  fabric::GridSpec spec() const { return fabric::GridSpec::make(d, ax, ay, r); }
  fabric::Window span() const { return fabric::Window{-window, window}; }
};

// The spec flags live on the main app so a single flat key=value --config
// file can feed every subcommand; subcommands fall through to them.
void add_spec_flags(CLI::App& app, SpecFlags& flags) {
  app.add_option("--d", flags.d, "grid spacing")->check(CLI::PositiveNumber);
  app.add_option("--ax", flags.ax, "carrier x offset within a cell");
  app.add_option("--ay", flags.ay, "carrier y offset within a cell");
  app.add_option("--r", flags.r, "reference-circle radius")->check(CLI::PositiveNumber);
  app.add_option("--window", flags.window, "index window half-width N, realized as [-N, N]")
      ->check(CLI::NonNegativeNumber);
  app.set_config("--config", "", "flat key=value file with the flags above");
}

int write_or_print(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 1;
  }
  out << content;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fabric of kissing circles: construction, verification, rendering"};
  app.require_subcommand(1);

  SpecFlags flags;
  add_spec_flags(app, flags);
  std::string out_path;
  double verify_tol = 1e-8;
  double integral_tol = 1e-6;

  auto* build = app.add_subcommand("build", "construct a fabric and export its curvature table");
  build->add_option("--out", out_path, "output CSV path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "run the full invariant suite on a fabric");
  verify->add_option("--tol", verify_tol, "geometric-predicate tolerance");

  auto* integral = app.add_subcommand("integral", "report curvature distances to integers");
  integral->add_option("--tol", integral_tol, "integrality tolerance");

  auto* symmetry = app.add_subcommand("symmetry", "print the symmetry group of the fabric");

  auto* render = app.add_subcommand("render", "render the fabric as SVG");
  int width_px = 800;
  int height_px = 800;
  std::vector<double> viewport;
  render->add_option("--out", out_path, "output SVG path")->required();
  render->add_option("--width", width_px, "pixel width")->check(CLI::PositiveNumber);
  render->add_option("--height", height_px, "pixel height")->check(CLI::PositiveNumber);
  render->add_option("--viewport", viewport, "plane-unit rectangle x0,y0,x1,y1")
      ->delimiter(',')
      ->expected(4);

  auto* sangaku = app.add_subcommand("sangaku", "run a sangaku verifier");
  int problem = 0;
  double sangaku_r = 1.0;
  double kappa0 = 2.0;
  double delta = 2.0;
  double kappa1 = -1.0;
  sangaku->add_option("--problem", problem, "1 (Gumma chain) or 2 (Menuma seventh circle)")
      ->required()
      ->check(CLI::Range(1, 2));
  sangaku->add_option("--r", sangaku_r, "largest chain radius (problem 2)")
      ->check(CLI::PositiveNumber);
  sangaku->add_option("--kappa0", kappa0, "anchor curvature (problem 1)");
  sangaku->add_option("--delta", delta, "frame curvature difference (problem 1)");
  sangaku->add_option("--kappa1", kappa1,
                      "second anchor curvature (problem 1; defaults to kappa0)");

  for (CLI::App* sub : {build, verify, integral, symmetry, render, sangaku})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly, bad flags are 2
  }

  try {
    if (build->parsed()) {
      const fabric::Fabric f = fabric::build_fabric(flags.spec(), flags.span());
      return write_or_print(fabric::curvature_table_csv(f), out_path);
    }

    if (verify->parsed()) {
      const fabric::Fabric f = fabric::build_fabric(flags.spec(), flags.span());
      fabric::VerifyTolerances tol;
      tol.geometry = verify_tol;
      const fabric::VerificationReport report = fabric::verify_fabric(f, tol);
      std::cout << report.to_text();
      std::cout << (report.all_pass() ? "all checks passed" : "verification FAILED") << "\n";
      return report.all_pass() ? 0 : 1;
    }

    if (integral->parsed()) {
      const fabric::Fabric f = fabric::build_fabric(flags.spec(), flags.span());
      const fabric::IntegralityReport report = fabric::verify_integral(f, integral_tol);
      for (const fabric::IntegralityEntry& e : report.entries) {
        std::cout << e.family << " " << fabric::to_string(e.orientation) << " strip "
                  << e.strip << " index " << e.index << ": kappa "
                  << fabric::format_double(e.kappa, 12) << ", off by "
                  << fabric::format_double(e.deviation, 3) << "\n";
      }
      std::cout << "max deviation " << fabric::format_double(report.max_deviation, 6)
                << " (tolerance " << fabric::format_double(report.tol, 3) << "): "
                << (report.integral ? "integral" : "NOT integral") << "\n";
      return report.integral ? 0 : 1;
    }

    if (symmetry->parsed()) {
      std::cout << fabric::to_string(fabric::classify_symmetry(flags.spec())) << "\n";
      return 0;
    }

    if (render->parsed()) {
      const fabric::GridSpec spec = flags.spec();
      const fabric::Fabric f = fabric::build_fabric(spec, flags.span());
      fabric::RenderStyle style = fabric::RenderStyle::for_spec(spec);
      style.width_px = width_px;
      style.height_px = height_px;
      if (!viewport.empty())
        style.viewport = fabric::Viewport{viewport[0], viewport[1], viewport[2], viewport[3]};
      return write_or_print(fabric::render_svg(f, style), out_path);
    }

    if (sangaku->parsed()) {
      fabric::SangakuReport report;
      if (problem == 1) {
        if (kappa1 < 0.0) kappa1 = kappa0;
        report = fabric::verify_gumma(kappa0, kappa1, delta);
      } else {
        report = fabric::verify_menuma(sangaku_r);
        const fabric::Chain chain = fabric::construct_menuma_geometry(sangaku_r, 8);
        std::cout << "measured kappa7 = " << fabric::format_double(chain.kappa(7), 12)
                  << " (constructed by inversion)\n";
      }
      std::cout << report.to_text();
      return report.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
