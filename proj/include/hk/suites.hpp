#ifndef HK_SUITES_HPP_
#define HK_SUITES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hk {

  //! Parameters shared by the verification suites. Each suite intersects its
  //! own range of cycle lengths with [min_n, max_n].
  struct RunConfig {
    std::size_t   min_n = 3;
    std::size_t   max_n = 12;
    std::uint64_t seed  = 20190501;
    // Enumeration length cap is enumeration_cap_factor * n.
    std::size_t enumeration_cap_factor = 4;
    // Ideal searches use |u|, |v| <= ideal_cap_factor * n.
    std::size_t ideal_cap_factor = 2;
    // equal_in_hk: expansions per query, and how far intermediate words may
    // exceed the longer of the two words compared.
    std::size_t step_cap     = 200000;
    std::size_t length_slack = 2;
    std::size_t random_orders     = 50;
    std::size_t confluence_length = 8;

    //! Throws std::invalid_argument on a zero cap or a range outside
    //! [3, 12].
    void validate() const;

    //! Sets every cap to `cap`.
    void set_all_caps(std::size_t cap);
  };

  struct CheckResult {
    int         criterion;
    std::string name;
    bool        passed;
    std::size_t checks;
    std::size_t failures;
    std::string detail;
    double      seconds;
  };

  // One function per acceptance criterion, numbered as in the README.
  CheckResult check_counting(RunConfig const& config);             // 1
  CheckResult check_quotient_shape(RunConfig const& config);       // 2
  CheckResult check_sandwich_invertibility(RunConfig const& config);  // 3
  CheckResult check_confluence(RunConfig const& config);           // 4
  CheckResult check_finite_complement(RunConfig const& config);    // 5
  CheckResult check_product_law(RunConfig const& config);          // 6
  CheckResult check_right_ideal(RunConfig const& config);          // 7
  CheckResult check_radical(RunConfig const& config);              // 8
  CheckResult check_binomial_identity(RunConfig const& config);    // 9
  CheckResult check_sigma(RunConfig const& config);                // 10

  inline constexpr int criterion_count = 10;

  //! Runs criterion k (1-based). Exceptions escaping a suite are reported
  //! as a failed check.
  CheckResult run_criterion(int k, RunConfig const& config);

  std::vector<CheckResult> run_all(RunConfig const& config);

}  // namespace hk

#endif  // HK_SUITES_HPP_
