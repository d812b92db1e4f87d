// Acceptance run: every criterion at its pinned parameters, one line each.
#include <CLI11.hpp>

#include <cstdio>

#include "hk/suites.hpp"

namespace {

  // All comparisons in the suites are exact; these are the search budgets.
  hk::RunConfig pinned() {
    hk::RunConfig c;
    c.min_n                  = 3;
    c.max_n                  = 12;
    c.seed                   = 20190501;
    c.enumeration_cap_factor = 4;       // reduced words up to length 4n, regrown to 5n
    c.ideal_cap_factor       = 2;       // |u|, |v| <= 2n
    c.step_cap               = 200000;  // expansions per equality query
    c.length_slack           = 2;
    c.random_orders          = 50;
    c.confluence_length      = 8;
    return c;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App         app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "Run only these criteria")
      ->check(CLI::Range(1, hk::criterion_count));
  CLI11_PARSE(app, argc, argv);
  if (only.empty()) {
    for (int k = 1; k <= hk::criterion_count; ++k) {
      only.push_back(k);
    }
  }

  auto const config = pinned();
  config.validate();
  int failed = 0;
  for (int k : only) {
    auto const r = hk::run_criterion(k, config);
    std::printf("%s criterion %2d  %-45s %zu/%zu checks  %.2f s\n",
                r.passed ? "PASS" : "FAIL", r.criterion, r.name.c_str(),
                r.checks - r.failures, r.checks, r.seconds);
    if (!r.detail.empty()) {
      std::printf("    %s\n", r.detail.c_str());
    }
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
