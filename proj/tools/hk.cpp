#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hk/cycle_structure.hpp"
#include "hk/errors.hpp"
#include "hk/graph.hpp"
#include "hk/radical.hpp"
#include "hk/report.hpp"
#include "hk/rewrite.hpp"
#include "hk/suites.hpp"
#include "hk/word.hpp"

namespace {

  constexpr int exit_ok     = 0;
  constexpr int exit_failed = 1;
  constexpr int exit_input  = 2;

  // Thrown for unreadable files and option values outside their range.
  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  hk::OrientedGraph load_graph(std::string const& path) {
    return hk::parse_graph(read_file(path));
  }

  int cmd_graph_check(std::string const& path, bool json) {
    auto const g      = load_graph(path);
    auto const report = hk::analyse(g);
    std::cout << (json ? hk::render(hk::to_json(g, report)) : hk::to_text(g, report));
    return exit_ok;
  }

  int cmd_nf(std::size_t cycle, std::string const& graph_path, std::string const& text,
             bool json) {
    hk::Json out;
    std::string rendered;
    if (cycle != 0) {
      if (cycle < 3 || cycle > hk::max_rank) {
        throw InputError("--cycle needs 3 <= n <= 255");
      }
      hk::CycleSystem const sys(cycle);
      hk::Word const        nf = sys.normal_form(hk::parse_word(text, cycle));
      rendered = hk::to_string(nf);
      out      = {{"mode", "cycle"}, {"n", cycle}, {"normal_form", rendered}};
    } else {
      auto const g = load_graph(graph_path);
      if (!hk::is_pi(g)) {
        throw hk::NotPI("graph is not PI: two oriented cycles are joined by a path");
      }
      hk::QuotientMap const map(g);
      rendered = map.to_string(map.project(hk::parse_graph_word(text, g)));
      out      = {{"mode", "graph"}, {"quotient_normal_form", rendered}};
    }
    std::cout << (json ? hk::render(out) : rendered + "\n");
    return exit_ok;
  }

  int cmd_structure(std::size_t n, std::size_t layer, bool json) {
    auto const report = hk::structure_report(n, layer);
    std::cout << (json ? hk::render(hk::to_json(report)) : hk::to_text(report));
    return exit_ok;
  }

  int cmd_radical(std::string const& path, std::string const& element, bool json) {
    auto const g      = load_graph(path);
    auto const alpha  = hk::parse_element(element, g);
    auto const report = hk::radical_report(g, alpha);
    std::cout << (json ? hk::render(hk::to_json(g, report)) : hk::to_text(g, report));
    return exit_ok;
  }

  int cmd_verify(hk::RunConfig const& config, std::vector<int> criteria, unsigned jobs,
                 bool json) {
    config.validate();
    if (criteria.empty()) {
      for (int k = 1; k <= hk::criterion_count; ++k) {
        criteria.push_back(k);
      }
    }
    std::vector<hk::CheckResult> results(criteria.size());
    if (jobs <= 1) {
      for (std::size_t k = 0; k < criteria.size(); ++k) {
        results[k] = hk::run_criterion(criteria[k], config);
      }
    } else {
      // Results are collected by index, so output order does not depend on
      // scheduling.
      std::vector<std::future<hk::CheckResult>> pending;
      std::size_t                               next = 0;
      while (next < criteria.size() || !pending.empty()) {
        while (next < criteria.size() && pending.size() < jobs) {
          pending.push_back(std::async(std::launch::async, hk::run_criterion,
                                       criteria[next], config));
          ++next;
        }
        std::size_t const done = next - pending.size();
        results[done]          = pending.front().get();
        pending.erase(pending.begin());
      }
    }
    std::cout << (json ? hk::render(hk::to_json(config, results)) : hk::to_text(results));
    for (auto const& r : results) {
      if (!r.passed) {
        return exit_failed;
      }
    }
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke-Kiselman monoid toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print JSON reports");

  auto* graph = app.add_subcommand("graph", "Graph commands");
  graph->require_subcommand(1);
  auto*       check = graph->add_subcommand("check", "Report components, cycles, PI");
  std::string check_path;
  check->add_option("file", check_path, "Graph file")->required();

  auto*       nf = app.add_subcommand("nf", "Normal form of a word");
  std::size_t nf_cycle = 0;
  std::string nf_graph;
  std::string nf_word;
  auto* nf_cycle_opt = nf->add_option("--cycle", nf_cycle, "Oriented cycle length");
  auto* nf_graph_opt = nf->add_option("--graph", nf_graph, "Graph file (PI)");
  nf_cycle_opt->excludes(nf_graph_opt);
  nf->add_option("word", nf_word, "Word, e.g. \"x1 x3\"")->required();

  auto*       structure = app.add_subcommand("structure", "Layer structure of C_n");
  std::size_t st_n = 0, st_layer = 0;
  structure->add_option("--cycle", st_n, "n, 3 <= n <= 8")->required();
  structure->add_option("--layer", st_layer, "i, 0 <= i <= n-2")->required();

  auto*       radical = app.add_subcommand("radical", "Membership in I(rho)");
  std::string rad_graph, rad_element;
  radical->add_option("--graph", rad_graph, "Graph file (PI)")->required();
  radical->add_option("--element", rad_element, "e.g. \"1*x3 x4 - 1*x4 x3\"")->required();

  auto*         verify = app.add_subcommand("verify", "Run the verification suites");
  hk::RunConfig config;
  std::size_t   all_caps = 0;
  std::vector<int> criteria;
  unsigned      jobs = 1;
  verify->add_option("--min-n", config.min_n, "Smallest cycle length")->capture_default_str();
  verify->add_option("--max-n", config.max_n, "Largest cycle length")->capture_default_str();
  verify->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  verify->add_option("--enumeration-cap", config.enumeration_cap_factor,
                     "Enumeration length cap, in multiples of n")
      ->capture_default_str();
  verify->add_option("--ideal-cap", config.ideal_cap_factor,
                     "Ideal search length cap, in multiples of n")
      ->capture_default_str();
  verify->add_option("--step-cap", config.step_cap, "Equality search expansions")
      ->capture_default_str();
  verify->add_option("--length-slack", config.length_slack,
                     "Equality search length allowance")
      ->capture_default_str();
  verify->add_option("--caps", all_caps, "Set every cap to this value");
  verify->add_option("--criterion", criteria, "Run only these criteria (1-10)")
      ->check(CLI::Range(1, hk::criterion_count));
  verify->add_option("--jobs", jobs, "Suites run in parallel")->capture_default_str();
  verify->add_flag("--json", json, "Print JSON reports");

  for (auto* sub : {check, nf, structure, radical}) {
    sub->add_flag("--json", json, "Print JSON reports");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*graph) {
      return cmd_graph_check(check_path, json);
    }
    if (*nf) {
      if (nf_cycle == 0 && nf_graph.empty()) {
        throw InputError("nf needs --cycle or --graph");
      }
      return cmd_nf(nf_cycle, nf_graph, nf_word, json);
    }
    if (*structure) {
      return cmd_structure(st_n, st_layer, json);
    }
    if (*radical) {
      return cmd_radical(rad_graph, rad_element, json);
    }
    if (all_caps != 0) {
      config.set_all_caps(all_caps);
    }
    try {
      config.validate();
    } catch (std::invalid_argument const& e) {
      throw InputError(e.what());
    }
    return cmd_verify(config, criteria, jobs, json);
  } catch (hk::NotPI const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  } catch (hk::MalformedElement const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  } catch (hk::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
}
