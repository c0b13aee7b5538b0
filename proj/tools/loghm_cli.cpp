#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "loghm/cli.hpp"

int main(int argc, char** argv) {
  using loghm::cli::RunConfig;
  CLI::App app{"Logharmonic mappings: pre-Schwarzian norms, growth, starlikeness and image rendering"};
  app.require_subcommand(1, 1);

  RunConfig cfg;
  int radii = cfg.grid.radii_count;
  int angles = cfg.grid.angles_count;
  double r_max = cfg.grid.r_max;
  int refine = cfg.grid.refine_iters;
  std::string grid_str;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--manifest", cfg.manifest, "mapping manifest (JSON)");
    sub->add_option("--grid-radii", radii, "number of radii in the search grid");
    sub->add_option("--grid-angles", angles, "number of angles in the search grid");
    sub->add_option("--r-max", r_max, "outermost grid radius");
    sub->add_option("--refine-iters", refine, "golden-section refinement iterations");
    sub->add_option("--grid", grid_str, "grid as RADIIxANGLES, e.g. 96x384");
    sub->add_option("--order", cfg.order, "series truncation order");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--count", cfg.count, "number of random instances");
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
    sub->add_option("--format", cfg.format, "json | csv | svg");
  };

  const char* names[][2] = {
      {"norm", "sup (1-|z|^2)|P_f| of a logharmonic map"},
      {"bloch", "logharmonic Bloch seminorm"},
      {"harmonic-norm", "pre-Schwarzian norm of log f"},
      {"verify-sharpness", "scan E(r,t) toward the sharp bound 11"},
      {"verify-growth", "growth bounds vs quadrature oracle"},
      {"starlike", "coefficient criterion and Re(Df/f) scan"},
      {"render", "SVG/CSV of image curves"},
      {"random-suite", "random L_R instances against the bounds 11, 8, 3"},
  };
  for (const auto& [name, desc] : names) {
    auto* sub = app.add_subcommand(name, desc);
    common(sub);
    if (std::string(name) == "render") {
      sub->add_option_function<double>("--alpha", [&](double a) { cfg.alpha = a; }, "f_alpha parameter");
    }
    if (std::string(name) == "starlike") {
      sub->add_option("--oracle-radius", cfg.oracle_radius, "radius of the argument-monotonicity oracle");
    }
    if (std::string(name) == "random-suite") {
      sub->add_option("--instances", cfg.instances, "explicit instance list (JSON)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : loghm::cli::kExitInputError;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  const auto* sub = app.get_subcommands().front();
  cfg.grid_set = sub->count("--grid-radii") + sub->count("--grid-angles") + sub->count("--r-max") +
                     sub->count("--refine-iters") + sub->count("--grid") > 0;
  if (!grid_str.empty()) {
    const auto x = grid_str.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument(grid_str);
      radii = std::stoi(grid_str.substr(0, x));
      angles = std::stoi(grid_str.substr(x + 1));
    } catch (const std::exception&) {
      std::cerr << "error: --grid expects RADIIxANGLES\n";
      return loghm::cli::kExitInputError;
    }
  }
  cfg.grid = loghm::GridSpec{radii, angles, r_max, refine};
  return loghm::cli::run(cfg);
}
