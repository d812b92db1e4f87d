#include "hk/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hk/cycle_structure.hpp"
#include "hk/graph.hpp"
#include "hk/hecke_kiselman.hpp"
#include "hk/poly.hpp"
#include "hk/radical.hpp"
#include "hk/rewrite.hpp"

namespace hk {

  namespace {
    // Accumulates check outcomes, keeping the first few failure messages.
    class Tally {
     public:
      void check(bool ok, std::string const& what) {
        ++_checks;
        if (!ok) {
          ++_failures;
          if (_messages.size() < 5) {
            _messages.push_back(what);
          }
        }
      }

      void note(std::string const& text) {
        _notes.push_back(text);
      }

      CheckResult finish(int criterion, std::string name) const {
        std::string detail;
        for (auto const& m : _messages) {
          detail += (detail.empty() ? "" : "; ") + m;
        }
        if (_failures > _messages.size()) {
          detail += "; ...";
        }
        for (auto const& n : _notes) {
          detail += (detail.empty() ? "" : "; ") + n;
        }
        bool const passed = _failures == 0 && _checks > 0;
        if (_checks == 0) {
          detail += (detail.empty() ? "" : "; ")
                    + std::string("no checks ran in the configured range");
        }
        return {criterion, std::move(name), passed, _checks, _failures, detail, 0.0};
      }

     private:
      std::size_t              _checks   = 0;
      std::size_t              _failures = 0;
      std::vector<std::string> _messages;
      std::vector<std::string> _notes;
    };

    std::vector<std::size_t> cycle_range(RunConfig const& config,
                                         std::size_t      low,
                                         std::size_t      high) {
      std::vector<std::size_t> out;
      for (std::size_t n = std::max(low, config.min_n);
           n <= std::min(high, config.max_n);
           ++n) {
        out.push_back(n);
      }
      return out;
    }

    std::string layer_tag(std::size_t n, std::size_t i) {
      return "n=" + std::to_string(n) + " i=" + std::to_string(i);
    }

    std::vector<std::vector<Word>> first_levels(
        std::vector<std::vector<Word>> const& words,
        std::size_t                           max_length) {
      return {words.begin(),
              words.begin()
                  + static_cast<std::ptrdiff_t>(std::min(words.size(), max_length + 1))};
    }

    bool in_mtilde(std::size_t n, Word const& w) {
      return !mtilde_layers(n, w).empty();
    }

    std::string join(std::vector<std::uint64_t> const& v) {
      std::string out = "[";
      for (std::size_t k = 0; k < v.size(); ++k) {
        out += (k == 0 ? "" : ",") + std::to_string(v[k]);
      }
      return out + "]";
    }
  }  // namespace

  void RunConfig::validate() const {
    if (min_n < 3 || max_n > 12 || min_n > max_n) {
      throw std::invalid_argument("cycle-size range must lie within [3, 12]");
    }
    if (enumeration_cap_factor == 0 || ideal_cap_factor == 0 || step_cap == 0
        || length_slack == 0 || random_orders == 0 || confluence_length == 0) {
      throw std::invalid_argument("all caps must be positive");
    }
  }

  void RunConfig::set_all_caps(std::size_t cap) {
    enumeration_cap_factor = ideal_cap_factor = step_cap = length_slack = cap;
  }

  CheckResult check_counting(RunConfig const& config) {
    Tally t;
    for (std::size_t n : cycle_range(config, 3, 7)) {
      std::size_t const cap = config.enumeration_cap_factor * n;
      if (cap < 3 * n) {
        t.check(false, "n=" + std::to_string(n) + ": enumeration cap "
                           + std::to_string(cap) + " below 3n");
        continue;
      }
      CycleSystem const sys(n);
      auto const        words    = reduced_words(sys, cap + n);
      auto const        at_cap   = first_levels(words, cap);
      for (std::size_t i = 0; i + 2 <= n; ++i) {
        auto const        brute  = collect_AB(sys, at_cap, i);
        auto const        grown  = collect_AB(sys, words, i);
        std::size_t const expect = binomial(static_cast<long>(n),
                                            static_cast<long>(i + 1))
                                       .get_ui();
        std::string const tag = layer_tag(n, i);
        t.check(brute.a == grown.a && brute.b == grown.b,
                tag + ": A_i/B_i grew when the cap was raised by n");
        t.check(brute.a.size() == expect,
                tag + ": brute-force |A_i| = " + std::to_string(brute.a.size())
                    + ", expected " + std::to_string(expect));
        t.check(brute.b.size() == brute.a.size(),
                tag + ": |B_i| = " + std::to_string(brute.b.size())
                    + " differs from |A_i|");
        if (i + 3 <= n) {
          auto const closed = enumerate_A(n, i);
          t.check(closed == brute.a,
                  tag + ": closed-form A_i differs from the brute-force set");
        }
      }
    }
    return t.finish(1, "counting |A_i| = |B_i| = C(n, i+1)");
  }

  CheckResult check_quotient_shape(RunConfig const& config) {
    Tally t;
    for (std::size_t n : cycle_range(config, 3, 5)) {
      auto const shape = quotient_ring_shape(n);
      t.check(shape.size() == n - 1,
              "n=" + std::to_string(n) + ": expected n-1 blocks");
      for (std::size_t i = 0; i < shape.size(); ++i) {
        t.check(shape[i] == shape[shape.size() - 1 - i],
                layer_tag(n, i) + ": block sizes not symmetric");
        // n_i is realised as the number of rows of the layer's sandwich
        // matrix, i.e. |A_i|.
        std::size_t const a_size = enumerate_A(n, i).size();
        t.check(shape[i] == a_size,
                layer_tag(n, i) + ": block " + std::to_string(shape[i])
                    + " but |A_i| = " + std::to_string(a_size));
      }
      t.note("n=" + std::to_string(n) + " " + join(shape));
    }
    return t.finish(2, "quotient ring shape [C(n,1), ..., C(n,n-1)]");
  }

  CheckResult check_sandwich_invertibility(RunConfig const& config) {
    Tally t;
    for (std::size_t n : cycle_range(config, 3, 5)) {
      std::size_t const cap = config.enumeration_cap_factor * n;
      if (cap < 3 * n) {
        t.check(false, "n=" + std::to_string(n) + ": enumeration cap below 3n");
        continue;
      }
      CycleSystem const sys(n);
      auto const        words = reduced_words(sys, cap);
      for (std::size_t i = 0; i + 2 <= n; ++i) {
        auto const m = sandwich_matrix(sys, i, collect_AB(sys, words, i));
        Poly const d = det(lift_sandwich(m));
        t.check(m.rows.size() == m.columns.size() && !d.is_zero(),
                layer_tag(n, i) + ": det P_i = " + d.to_string());
      }
    }
    return t.finish(3, "sandwich matrices have nonzero determinant");
  }

  CheckResult check_confluence(RunConfig const& config) {
    Tally           t;
    std::mt19937_64 rng(config.seed);
    for (std::size_t n : cycle_range(config, 3, 4)) {
      CycleSystem const sys(n);
      for (Word const& w : all_words(n, config.confluence_length)) {
        Word const nf = sys.normal_form(w);
        t.check(sys.is_reduced(nf), "normal form of " + to_string(w) + " is reducible");
        for (std::size_t trial = 0; trial < config.random_orders; ++trial) {
          Word current = w;
          bool ordered = true;
          for (auto all = sys.all_redexes(current); !all.empty();
               all      = sys.all_redexes(current)) {
            std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
            Word const before = current;
            apply_redex(current, all[pick(rng)]);
            ordered = ordered && deglex_less(current, before);
          }
          t.check(ordered && current == nf,
                  "n=" + std::to_string(n) + ": " + to_string(w) + " reached "
                      + to_string(current) + " instead of " + to_string(nf));
        }
      }
      // Soundness against the defining relations: every word is joined to its
      // normal form by an explicit chain of relation applications.
      auto const relations = generic_relations(OrientedGraph::cycle(n));
      for (Word const& w : all_words(n, 4)) {
        Word const nf      = sys.normal_form(w);
        auto const verdict = equal_in_hk(
            w, nf, relations, SearchCaps{config.step_cap, w.size() + config.length_slack});
        t.check(verdict.equal() && verify_trace(w, nf, relations, verdict.trace),
                "n=" + std::to_string(n) + ": no relation chain from "
                    + to_string(w) + " to its normal form (Unknown)");
      }
    }
    return t.finish(4, "confluence under random reduction orders");
  }

  CheckResult check_finite_complement(RunConfig const& config) {
    Tally t;
    for (std::size_t n : cycle_range(config, 3, 4)) {
      std::size_t const cap = config.enumeration_cap_factor * n;
      CycleSystem const sys(n);
      auto const        words = reduced_words(sys, cap + n);
      std::vector<std::size_t> per_length;
      for (auto const& level : words) {
        per_length.push_back(static_cast<std::size_t>(std::count_if(
            level.begin(), level.end(), [n](Word const& w) { return !in_mtilde(n, w); })));
      }
      std::size_t threshold = 0;
      for (std::size_t len = 0; len <= cap; ++len) {
        if (per_length[len] != 0) {
          threshold = len;
        }
      }
      std::size_t total_at_cap = 0, total_grown = 0;
      for (std::size_t len = 0; len < per_length.size(); ++len) {
        (len <= cap ? total_at_cap : total_grown) += per_length[len];
      }
      total_grown += total_at_cap;
      std::string const tag = "n=" + std::to_string(n);
      t.check(threshold + n <= cap,
              tag + ": complement still nonempty at length "
                  + std::to_string(threshold) + " with cap " + std::to_string(cap));
      t.check(total_grown == total_at_cap,
              tag + ": complement grew from " + std::to_string(total_at_cap)
                  + " to " + std::to_string(total_grown) + " when the cap was raised by n");
      t.note(tag + ": |C_n \\ M~| = " + std::to_string(total_at_cap)
             + ", empty beyond length " + std::to_string(threshold));
    }
    return t.finish(5, "finite complement of M~");
  }

  CheckResult check_product_law(RunConfig const& config) {
    Tally t;
    for (std::size_t n : cycle_range(config, 3, 3)) {
      CycleSystem const sys(n);
      auto const        words = reduced_words(sys, 6 + 2 * n);
      for (std::size_t i = 0; i + 2 <= n; ++i) {
        std::vector<MatrixTypeFactor> elements;
        for (auto const& level : words) {
          for (Word const& w : level) {
            if (!contains_factor(w, s_word(n, i))) {
              continue;
            }
            auto f = factor(CycleElement::from_reduced(sys, w));
            if (f && f->power <= 2 && f->a.size() + f->b.size() <= 6) {
              elements.push_back(std::move(*f));
            }
          }
        }
        Word const s = s_word(n, i);
        for (auto const& e : elements) {
          for (auto const& f : elements) {
            Word const product = sys.multiply(to_word(n, e), to_word(n, f));
            auto const entry   = sandwich_entry(sys, i, e.b, f.a);
            std::string const tag
                = layer_tag(n, i) + ": " + to_string(to_word(n, e)) + " * "
                  + to_string(to_word(n, f));
            if (entry.is_theta()) {
              t.check(!contains_factor(product, s),
                      tag + " has an s_i factor although p_ba' = theta");
            } else {
              MatrixTypeFactor const expected{
                  i, e.a, e.power + entry.exponent() + f.power, f.b};
              t.check(product == to_word(n, expected),
                      tag + " = " + to_string(product) + ", rule gives "
                          + to_string(to_word(n, expected)));
            }
          }
        }
      }
    }
    return t.finish(6, "matrix-type product law");
  }

  CheckResult check_right_ideal(RunConfig const& config) {
    Tally t;
    for (std::size_t n : cycle_range(config, 3, 4)) {
      CycleSystem const sys(n);
      std::size_t const cap = config.ideal_cap_factor * n;
      for (auto const& level : reduced_words(sys, 3 * n)) {
        for (Word const& w : level) {
          auto const layers = mtilde_layers(n, w);
          if (layers.empty()) {
            continue;
          }
          std::size_t const i = layers.front();
          for (std::size_t x = 1; x <= n; ++x) {
            CycleElement const product(sys, concat(w, Word{static_cast<Letter>(x)}));
            auto const         after = mtilde_layers(n, product.word());
            bool ok = std::find(after.begin(), after.end(), i) != after.end();
            if (!ok) {
              ok = !ideal_membership(sys, product, i, cap).not_in_ideal();
            }
            t.check(ok,
                    layer_tag(n, i) + ": " + to_string(w) + " * x"
                        + std::to_string(x) + " left M~_i but is outside I_i");
          }
        }
      }
    }
    return t.finish(7, "M_i is a right ideal of C_n / I_i");
  }

  CheckResult check_radical(RunConfig const& config) {
    Tally t;
    for (char const* text : {"1 -> 2\n2 -> 3\n3 -> 1\n3 -> 4\n", "a -> b\nb -> c\n"}) {
      OrientedGraph const g    = parse_graph(text);
      QuotientMap const   map(g);
      auto const          contexts = all_words(g.size(), 3);
      for (Relation const& gen : rho_generators(g)) {
        AlgebraElement diff;
        diff.add(gen.lhs, 1);
        diff.add(gen.rhs, -1);
        for (Word const& u : contexts) {
          for (Word const& v : contexts) {
            t.check(radical_membership(diff.padded(u, v), map),
                    to_string(u) + " (" + diff.to_string() + ") " + to_string(v)
                        + " not in I(rho)");
          }
        }
      }
      auto const relations = generic_relations(g);
      for (Arrow const& a : g.arrows()) {
        std::vector<std::pair<Vertex, Vertex>> applicable;
        if (g.is_source(a.tail)) {
          applicable.emplace_back(a.tail, a.head);
        }
        if (g.is_sink(a.head)) {
          applicable.emplace_back(a.head, a.tail);
        }
        for (auto [x, y] : applicable) {
          for (Word const& w : all_words(g.size(), 5)) {
            SearchCaps const caps{config.step_cap, w.size() + 4 + config.length_slack};
            t.check(source_sink_identity_check(g, x, y, w, caps),
                    "identities for x=" + g.label(x) + " y=" + g.label(y)
                        + " w=" + to_string(w) + " not certified");
          }
        }
      }
    }
    return t.finish(8, "radical I(rho) and source/sink identities");
  }

  CheckResult check_binomial_identity(RunConfig const& config) {
    Tally t;
    for (std::size_t n : cycle_range(config, 3, 12)) {
      for (std::size_t i = 0; i + 3 <= n; ++i) {
        t.check(verify_binomial_identity(n, i), layer_tag(n, i) + ": identity fails");
      }
    }
    return t.finish(9, "binomial identity for |A_i|");
  }

  CheckResult check_sigma(RunConfig const& config) {
    Tally t;
    // Passed and total counts for the three sub-checks: sigma^n = id,
    // agreeing ideal verdicts, and M~ mapped into M~.
    std::size_t period_ok = 0, period_all = 0;
    std::size_t ideal_ok = 0, ideal_all = 0;
    std::size_t stays_ok = 0, stays_all = 0;
    for (std::size_t n : cycle_range(config, 3, 5)) {
      CycleSystem const sys(n);
      std::size_t const cap = config.ideal_cap_factor * n;
      for (auto const& level : reduced_words(sys, 6)) {
        for (Word const& w : level) {
          std::string const  tag = "n=" + std::to_string(n);
          CycleElement const e   = CycleElement::from_reduced(sys, w);
          CycleElement       power = e;
          for (std::size_t k = 0; k < n; ++k) {
            power = sigma(sys, power);
          }
          ++period_all;
          period_ok += power == e ? 1 : 0;
          t.check(power == e, tag + ": sigma^n moves " + to_string(w));

          CycleElement const image = sigma(sys, e);
          if (in_mtilde(n, w)) {
            bool const stays = in_mtilde(n, image.word());
            ++stays_all;
            stays_ok += stays ? 1 : 0;
            t.check(stays, tag + ": sigma(" + to_string(w) + ") = "
                               + to_string(image.word()) + " is not in M~");
          }
          for (std::size_t k = 0; k + 3 <= n; ++k) {
            bool const before = ideal_membership(sys, e, k, cap).not_in_ideal();
            bool const after  = ideal_membership(sys, image, k, cap).not_in_ideal();
            ++ideal_all;
            ideal_ok += before == after ? 1 : 0;
            t.check(before == after, tag + " k=" + std::to_string(k)
                                         + ": ideal verdicts differ for " + to_string(w));
          }
        }
      }
    }
    auto const ratio = [](std::size_t ok, std::size_t all) {
      return std::to_string(ok) + "/" + std::to_string(all);
    };
    t.note("sigma^n = id " + ratio(period_ok, period_all) + ", ideal verdicts agree "
           + ratio(ideal_ok, ideal_all) + ", M~ into M~ " + ratio(stays_ok, stays_all));
    return t.finish(10, "sigma automorphism");
  }

  CheckResult run_criterion(int k, RunConfig const& config) {
    using Suite = CheckResult (*)(RunConfig const&);
    static constexpr Suite suites[] = {check_counting,
                                       check_quotient_shape,
                                       check_sandwich_invertibility,
                                       check_confluence,
                                       check_finite_complement,
                                       check_product_law,
                                       check_right_ideal,
                                       check_radical,
                                       check_binomial_identity,
                                       check_sigma};
    if (k < 1 || k > criterion_count) {
      throw std::out_of_range("no criterion " + std::to_string(k));
    }
    auto const  start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = suites[k - 1](config);
    } catch (std::exception const& e) {
      result = {k, "criterion " + std::to_string(k), false, 0, 1,
                std::string("exception: ") + e.what(), 0.0};
    }
    result.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return result;
  }

  std::vector<CheckResult> run_all(RunConfig const& config) {
    config.validate();
    std::vector<CheckResult> out;
    for (int k = 1; k <= criterion_count; ++k) {
      out.push_back(run_criterion(k, config));
    }
    return out;
  }

}  // namespace hk
