// Runs the acceptance criteria and prints one line per criterion. Exits 0
// when every failure sits at a documented point (see README).

#include <iostream>

#include "CLI11.hpp"
#include "ssb/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  ssb::SuiteOptions opts;
  std::vector<std::uint32_t> chars;
  std::vector<int> only;
  bool verbose = false;
  app.add_option("--max", opts.max, "grid bound for p, q, r, s, t")->check(CLI::Range(1, 4));
  app.add_option("--chars", chars, "characteristics for the grid criteria")->delimiter(',');
  app.add_option("--only", only, "criteria to run")->delimiter(',')->check(CLI::Range(1, 9));
  app.add_option("--threads", opts.threads);
  app.add_flag("-v,--verbose", verbose, "list every mismatch and report progress");
  CLI11_PARSE(app, argc, argv);
  if (!chars.empty()) opts.chars = chars;
  opts.only.insert(only.begin(), only.end());
  if (verbose) opts.progress = &std::cerr;

  const auto results = ssb::run_suite(opts);
  for (const auto& r : results) {
    std::cout << r.line() << '\n';
    for (const auto& m : r.mismatches) {
      if (!verbose && !m.known.empty()) continue;
      std::cout << "    " << m.point << ": " << m.detail;
      if (!m.known.empty()) std::cout << "  [documented: " << m.known << "]";
      std::cout << '\n';
    }
  }
  const int code = ssb::suite_exit_code(results);
  std::cout << (code == 0 ? "acceptance: OK (red lines, if any, fail only at documented points)"
                          : "acceptance: FAILED")
            << std::endl;
  return code;
}
