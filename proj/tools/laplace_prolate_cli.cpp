// laplace-prolate: spectra of the weighted finite Laplace transform from the command line.

#include <CLI11.hpp>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "laplace_prolate/commands.hpp"
#include "laplace_prolate/io.hpp"

namespace lp = laplace_prolate;
namespace cli = laplace_prolate::cli;

namespace {

struct BadValue {
  std::string message;
};

double real_arg(const std::string& flag, const std::string& text) {
  const auto v = lp::io::parse_real(text);
  if (!v) throw BadValue{flag + ": cannot read '" + text + "' as a real number"};
  return *v;
}

std::optional<std::string> maybe(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalues and eigenfunctions of the weighted finite Laplace transform"};
  app.require_subcommand(1);

  std::string c_text, alpha_text = "0", a_text, beta_text, out, cache_out;
  std::vector<std::string> c_list = {"pi", "2pi", "3pi", "4pi", "5pi"};
  int n_max = 0, n_sum = 80, demo_n = 16, grid_points = 1001, quad_points = 400;
  std::optional<int> comparator;
  bool check = false, use_cache = false;

  auto* spectrum = app.add_subcommand("spectrum", "write n, chi, nu, log10_nu as CSV");
  spectrum->add_option("--c", c_text, "bandwidth parameter c > 0 (accepts pi, 5pi, 5*pi)")->required();
  spectrum->add_option("--alpha", alpha_text, "weight exponent alpha > -1 (accepts -3/4)");
  spectrum->add_option("--nmax", n_max, "largest index n")->required();
  spectrum->add_option("--out", out, "CSV path (default: stdout)");
  spectrum->add_option("--cache", cache_out, "also save the spectrum cache to this path");

  auto* table1 = app.add_subcommand("table1", "nu_0 for c = pi..5pi, alpha = -3/4 and 1");
  table1->add_flag("--check", check, "compare with the reference values to 5 digits");
  table1->add_flag("--use-cache", use_cache, "reuse or fill the spectrum cache directory");

  auto* decay = app.add_subcommand("decay", "log nu_n and its upper bound for several c");
  decay->add_option("--c", c_list, "values of c")->delimiter(',');
  decay->add_option("--alpha", alpha_text, "weight exponent alpha > -1");
  decay->add_option("--nmax", n_max, "largest index n")->default_val(60);
  decay->add_option("--out", out, "CSV path (default: stdout)");

  auto* trace = app.add_subcommand("trace", "exact trace against the partial eigenvalue sum");
  trace->add_option("--c", c_text, "bandwidth parameter c > 0")->required();
  trace->add_option("--alpha", alpha_text, "weight exponent alpha > -1");
  trace->add_option("--nmax", n_sum, "sum nu_0..nu_nmax")->default_val(80);

  auto* approx = app.add_subcommand("approx-demo", "errors of S_n(g) and of the Jacobi projection");
  auto* invert = app.add_subcommand("invert-demo", "error of the truncated spectral inverse");
  for (auto* sub : {approx, invert}) {
    sub->add_option("--c", c_text, "bandwidth parameter c > 0")->required();
    sub->add_option("--a", a_text, "frequency a of f(t) = e^{beta t} sin(a t)")->required();
    sub->add_option("--beta", beta_text, "growth beta of f")->required();
    sub->add_option("--nmax", demo_n, "truncation index")->default_val(16);
    sub->add_option("--grid-points", grid_points, "uniform grid size for sup errors")
        ->default_val(1001);
    sub->add_option("--quad-points", quad_points, "Gauss rule size for L2 errors")
        ->default_val(400);
    sub->add_option("--out", out, "pointwise CSV path");
  }
  approx->add_option("--jacobi-degree", comparator, "degree of the Jacobi comparator");

  auto* cache = app.add_subcommand("cache", "save or load a spectrum cache file");
  cache->require_subcommand(1);
  auto* save = cache->add_subcommand("save", "compute a spectrum and store it");
  auto* load = cache->add_subcommand("load", "read a cache file and print it as CSV");
  for (auto* sub : {save, load}) {
    sub->add_option("--c", c_text, "bandwidth parameter c > 0");
    sub->add_option("--alpha", alpha_text, "weight exponent alpha > -1");
    sub->add_option("--out", out, "cache file (default: the cache directory's file for c, alpha)");
  }
  save->add_option("--nmax", n_max, "largest index n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInvalidParams;
  }

  try {
    std::ostream& o = std::cout;
    std::ostream& e = std::cerr;
    if (*spectrum) {
      return cli::cmd_spectrum({real_arg("--c", c_text), real_arg("--alpha", alpha_text), n_max,
                                maybe(out), maybe(cache_out)},
                               o, e);
    }
    if (*table1) return cli::cmd_table1({check, use_cache}, o, e);
    if (*decay) {
      cli::DecayOptions d;
      for (const auto& s : c_list) d.c_list.push_back(real_arg("--c", s));
      d.alpha = real_arg("--alpha", alpha_text);
      d.n_max = n_max;
      d.out_path = maybe(out);
      return cli::cmd_decay(d, o, e);
    }
    if (*trace) {
      return cli::cmd_trace({real_arg("--c", c_text), real_arg("--alpha", alpha_text), n_sum}, o,
                            e);
    }
    if (*approx || *invert) {
      cli::DemoOptions d;
      d.c = real_arg("--c", c_text);
      d.a = real_arg("--a", a_text);
      d.beta = real_arg("--beta", beta_text);
      d.n = demo_n;
      d.comparator_n = comparator;
      d.grid_points = grid_points;
      d.quad_points = quad_points;
      d.out_path = maybe(out);
      return *approx ? cli::cmd_approx_demo(d, o, e) : cli::cmd_invert_demo(d, o, e);
    }
    if (*cache) {
      cli::CacheOptions d;
      d.path = maybe(out);
      if (!d.path || *save) {
        d.c = real_arg("--c", c_text);
        d.alpha = real_arg("--alpha", alpha_text);
      }
      d.n_max = n_max;
      return *save ? cli::cmd_cache_save(d, o, e) : cli::cmd_cache_load(d, o, e);
    }
  } catch (const BadValue& bad) {
    std::cerr << "invalid parameters: " << bad.message << '\n';
    return cli::kInvalidParams;
  }
  return cli::kInvalidParams;
}
