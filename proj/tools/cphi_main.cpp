// Command-line front end: compute single coefficients, enumerate colored
// Frobenius symbols, and run the identity/congruence verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qseries/cache.hpp"
#include "qseries/cphi.hpp"
#include "qseries/frobenius.hpp"
#include "qseries/registry.hpp"
#include "qseries/report.hpp"

namespace {

using namespace qseries;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SeriesError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_compute(long k, long n, const std::string& method) {
  if (k < 1) {
    std::cerr << "compute: --k must be >= 1\n";
    return 2;
  }
  if (n < 0 || n > 500000) {
    std::cerr << "compute: --n must be in [0, 500000]\n";
    return 2;
  }
  if (method == "ct") {
    std::cout << cphi(k, n, ThetaMethod::ConstantTerm) << "\n";
    return 0;
  }
  if (method == "lattice") {
    std::cout << cphi(k, n, ThetaMethod::Lattice) << "\n";
    return 0;
  }
  // method == "enumerate": walk every symbol.  The walk visits one node per
  // symbol, so refuse when the final count (cheap to obtain by constant
  // term) is out of reach.
  Int expected = cphi(k, n, ThetaMethod::ConstantTerm);
  if (expected > 20000000) {
    std::cerr << "compute: cphi_" << k << "(" << n << ") = " << expected
              << " symbols; explicit enumeration of that many objects is infeasible.\n"
              << "Use --method ct or --method lattice instead.\n";
    return 2;
  }
  std::cout << enumerate_symbols(k, n).size() << "\n";
  return 0;
}

int cmd_enumerate(long k, long n, bool refined) {
  if (k < 1) {
    std::cerr << "enumerate: --k must be >= 1\n";
    return 2;
  }
  if (n < 0) {
    std::cerr << "enumerate: --n must be >= 0\n";
    return 2;
  }
  Int expected = cphi(k, n, ThetaMethod::ConstantTerm);
  Int limit = refined ? Int(20000000) : Int(1000000);
  if (expected > limit) {
    std::cerr << "enumerate: cphi_" << k << "(" << n << ") = " << expected
              << " symbols, beyond the " << (refined ? "tabulation" : "listing")
              << " limit of " << limit << ".\n"
              << "Use 'compute --method ct' for the count alone.\n";
    return 2;
  }
  if (refined) {
    RefinedCounts rc = refined_counts(k, n);
    std::cout << "cphi_" << k << "(" << n << ") = " << rc.total << "\n";
    std::cout << "by color difference m (top colors minus bottom colors):\n";
    for (const auto& [m, c] : rc.by_color_difference)
      std::cout << "  m = " << m << ": " << c << "\n";
    std::cout << "by order under cyclic color shift:\n";
    for (const auto& [d, c] : rc.by_order) std::cout << "  order " << d << ": " << c << "\n";
    if (!rc.full_order_by_residue.empty()) {
      std::cout << "order-" << k << " symbols by residue of m mod " << k << ":\n";
      for (const auto& [j, c] : rc.full_order_by_residue)
        std::cout << "  m mod " << k << " = " << j << ": " << c << "\n";
    }
    return 0;
  }
  auto symbols = enumerate_symbols(k, n);
  for (const auto& s : symbols) std::cout << render_symbol(s) << "\n";
  std::cout << "total " << symbols.size() << "\n";
  return 0;
}

int cmd_verify(bool run_all, const std::string& filter, long prec, long nmax, int jobs,
               const std::string& format, const std::string& registry_file, bool print_reg,
               std::string cache_dir, bool quiet) {
  std::string text = registry_file.empty() ? registry_default_text() : slurp(registry_file);
  if (print_reg) {
    std::cout << text;
    return 0;
  }
  if (!run_all && filter.empty()) {
    std::cerr << "verify: pass --all or --id <filter>\n";
    return 2;
  }
  std::vector<CheckSpec> specs = select_checks(parse_registry(text), run_all ? "" : filter);
  if (specs.empty()) {
    std::cerr << "verify: no checks match --id '" << filter << "'\n";
    return 2;
  }
  if (cache_dir.empty()) {
    if (const char* env = std::getenv("CPHI_CACHE_DIR")) cache_dir = env;
  }
  EvalMemo memo;
  if (!cache_dir.empty()) {
    size_t loaded = load_exact_cache(memo, cache_dir);
    if (loaded && !quiet) std::cerr << "cache: loaded " << loaded << " series\n";
  }
  RunOptions opt;
  opt.prec = prec;
  opt.nmax = nmax;
  opt.jobs = jobs;
  std::function<void(const CheckResult&)> progress;
  if (!quiet) {
    progress = [](const CheckResult& r) {
      std::cerr << (r.passed() ? "pass  " : (r.status == "fail" ? "FAIL  " : "ERROR "))
                << r.id << "  (" << static_cast<long>(r.wall_ms) << " ms)\n";
    };
  }
  std::vector<CheckResult> results = run_suite(specs, opt, progress, &memo);
  if (!cache_dir.empty()) {
    size_t saved = save_exact_cache(memo, cache_dir);
    if (saved && !quiet) std::cerr << "cache: stored " << saved << " series\n";
  }
  std::cout << render_report(results, format);
  ReportTotals t = report_totals(results);
  return (t.failed + t.errors) > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cphi: exact q-series engine for k-colored generalized Frobenius partitions.\n"
      "Computes the generating functions by independent methods (constant term,\n"
      "lattice enumeration, symbol enumeration) and re-verifies a catalogue of\n"
      "identities and congruences to configurable series precision."};
  app.require_subcommand(1);

  long k = 0, n = -1;
  std::string method = "ct";
  auto* compute = app.add_subcommand("compute", "Print the single coefficient cphi_k(n)");
  compute->add_option("--k", k, "number of colors")->required();
  compute->add_option("--n", n, "exponent of q")->required();
  compute->add_option("--method", method, "ct | lattice | enumerate")
      ->check(CLI::IsMember({"ct", "lattice", "enumerate"}));

  long ek = 0, en = -1;
  bool refined = false;
  auto* enumerate =
      app.add_subcommand("enumerate", "List the k-colored Frobenius symbols of weight n");
  enumerate->add_option("--k", ek, "number of colors")->required();
  enumerate->add_option("--n", en, "symbol weight")->required();
  enumerate->add_flag("--refined", refined,
                      "print counts by color difference and by cyclic order instead of a list");

  bool run_all = false, print_reg = false, quiet = false;
  std::string filter, format = "text", registry_file, cache_dir;
  long prec = -1, nmax = -1;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run checks from the identity registry");
  verify->add_flag("--all", run_all, "run every check");
  verify->add_option("--id", filter,
                     "check id, dash-separated prefix (CPHI5 matches CPHI5-*), or glob");
  verify->add_option("--prec", prec, "series-identity comparison exponent (default 120)");
  verify->add_option("--nmax", nmax, "congruence comparison depth (default 400)");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--registry", registry_file, "read checks from a file instead of built-ins");
  verify->add_flag("--print-registry", print_reg, "print the registry text and exit");
  verify->add_option("--cache-dir", cache_dir,
                     "directory for the exact-series cache (or env CPHI_CACHE_DIR)");
  verify->add_flag("--quiet", quiet, "suppress per-check progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(k, n, method);
    if (enumerate->parsed()) return cmd_enumerate(ek, en, refined);
    return cmd_verify(run_all, filter, prec, nmax, jobs, format, registry_file, print_reg,
                      cache_dir, quiet);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
