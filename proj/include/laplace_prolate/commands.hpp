#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace laplace_prolate::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidParams = 2,
  kNumericFailure = 3,
  kIoFailure = 4,
};

struct SpectrumOptions {
  double c = 0.0;
  double alpha = 0.0;
  int n_max = 0;
  std::optional<std::string> out_path;    // CSV; stdout when absent
  std::optional<std::string> cache_path;  // also write a cache file
};

struct DecayOptions {
  std::vector<double> c_list;
  double alpha = 0.0;
  int n_max = 60;
  std::optional<std::string> out_path;
};

struct TraceOptions {
  double c = 0.0;
  double alpha = 0.0;
  int n_sum = 80;
};

struct DemoOptions {
  double c = 0.0;
  double a = 0.0;
  double beta = 0.0;
  int n = 16;
  std::optional<int> comparator_n;  // Jacobi projection degree; n when absent
  int grid_points = 1001;
  int quad_points = 400;
  std::optional<std::string> out_path;  // pointwise CSV
};

struct Table1Options {
  bool check = false;
  bool use_cache = false;
};

struct CacheOptions {
  double c = 0.0;
  double alpha = 0.0;
  int n_max = 0;
  std::optional<std::string> path;  // default: the cache directory's file for (c, alpha)
};

// Every command reports results on `out`, diagnostics on `err`, and returns
// an ExitCode. Library exceptions are mapped to exit codes here.
int cmd_spectrum(const SpectrumOptions& opt, std::ostream& out, std::ostream& err);
int cmd_table1(const Table1Options& opt, std::ostream& out, std::ostream& err);
int cmd_decay(const DecayOptions& opt, std::ostream& out, std::ostream& err);
int cmd_trace(const TraceOptions& opt, std::ostream& out, std::ostream& err);
int cmd_approx_demo(const DemoOptions& opt, std::ostream& out, std::ostream& err);
int cmd_invert_demo(const DemoOptions& opt, std::ostream& out, std::ostream& err);
int cmd_cache_save(const CacheOptions& opt, std::ostream& out, std::ostream& err);
int cmd_cache_load(const CacheOptions& opt, std::ostream& out, std::ostream& err);

/// Published leading eigenvalues nu_0(k pi) for alpha = -3/4 and alpha = 1, k = 1..5.
struct Table1Entry {
  int k;
  double alpha;
  double nu0;
};
const std::vector<Table1Entry>& table1_reference();

/// True when a and b agree to `digits` significant digits after rounding.
bool same_significant_digits(double a, double b, int digits);

}  // namespace laplace_prolate::cli
