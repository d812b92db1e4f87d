#include "hk/report.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include "hk/errors.hpp"

namespace hk {

  namespace {
    Json coefficient(mpz_class const& c) {
      if (c.fits_slong_p()) {
        return c.get_si();
      }
      return c.get_str();
    }

    Json words(std::vector<Word> const& ws) {
      Json out = Json::array();
      for (Word const& w : ws) {
        out.push_back(to_string(w));
      }
      return out;
    }

    Json labels(OrientedGraph const& g, std::vector<Vertex> const& vs) {
      Json out = Json::array();
      for (Vertex v : vs) {
        out.push_back(g.label(v));
      }
      return out;
    }

    Json arrows(OrientedGraph const& g, std::vector<Arrow> const& as) {
      Json out = Json::array();
      for (Arrow const& a : as) {
        out.push_back(Json::array({g.label(a.tail), g.label(a.head)}));
      }
      return out;
    }

    std::string entry_text(SandwichEntry const& e) {
      return e.is_theta() ? "theta" : "s^" + std::to_string(e.exponent());
    }

    std::string join_blocks(std::vector<std::uint64_t> const& v) {
      std::string out = "[";
      for (std::size_t k = 0; k < v.size(); ++k) {
        out += (k == 0 ? "" : ", ") + std::to_string(v[k]);
      }
      return out + "]";
    }

    std::string label_list(OrientedGraph const& g, std::vector<Vertex> const& vs) {
      std::string out = "{";
      for (std::size_t k = 0; k < vs.size(); ++k) {
        out += (k == 0 ? "" : ", ") + g.label(vs[k]);
      }
      return out + "}";
    }

    std::string quotient_text(OrientedGraph const& g, QuotientForm const& q) {
      QuotientMap const map(g);
      return map.to_string(q);
    }
  }  // namespace

  StructureReport structure_report(std::size_t n, std::size_t layer) {
    if (n < 3 || n > 8) {
      throw LayerOutOfRange("structure reports need 3 <= n <= 8, got n = "
                            + std::to_string(n));
    }
    if (layer + 2 > n) {
      throw LayerOutOfRange("layer " + std::to_string(layer) + " out of range [0, "
                            + std::to_string(n - 2) + "]");
    }
    SandwichMatrix m = sandwich_matrix(n, layer);
    Poly           d = det(lift_sandwich(m));
    return {n, layer, std::move(m), std::move(d), quotient_ring_shape(n)};
  }

  RadicalReport radical_report(OrientedGraph const& g, AlgebraElement const& alpha) {
    QuotientMap const                 map(g);
    std::map<QuotientForm, mpq_class> sums;
    for (auto const& [w, c] : alpha.terms()) {
      sums[map.project(w)] += c;
    }
    RadicalReport out{rho_generators(g), tensor_decomposition_report(g), alpha, {}, true};
    for (auto const& [q, c] : sums) {
      if (c != 0) {
        out.classes.emplace_back(q, c);
      }
    }
    out.member = out.classes.empty();
    return out;
  }

  Json to_json(Poly const& p) {
    Json out = Json::array();
    for (auto const& c : p.coefficients()) {
      out.push_back(coefficient(c));
    }
    return out;
  }

  Json to_json(SandwichMatrix const& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.columns.size(); ++c) {
        SandwichEntry const& e = m.at(r, c);
        row.push_back(e.is_theta() ? Json("theta") : Json{{"power", e.exponent()}});
      }
      entries.push_back(std::move(row));
    }
    return {{"n", m.n},
            {"layer", m.layer},
            {"rows", words(m.rows)},
            {"columns", words(m.columns)},
            {"entries", std::move(entries)}};
  }

  Json to_json(OrientedGraph const& g, GraphReport const& r) {
    Json components = Json::array();
    for (auto const& c : r.components) {
      components.push_back(labels(g, c));
    }
    OrientedGraph const prime = theta_prime(g);
    Json                prime_components = Json::array();
    for (auto const& c : weak_components(prime)) {
      std::string const kind = c.size() == 1                 ? "singleton"
                               : is_oriented_cycle(prime, c) ? "cycle"
                                                             : "other";
      prime_components.push_back({{"vertices", labels(g, c)}, {"kind", kind}});
    }
    std::vector<Vertex> all(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
      all[v] = v;
    }
    return {{"vertices", labels(g, all)},
            {"arrows", arrows(g, g.arrows())},
            {"components", std::move(components)},
            {"cycle_arrows", arrows(g, r.cycle_arrows)},
            {"is_pi", r.is_pi},
            {"is_noetherian", r.is_noetherian},
            {"theta_prime", std::move(prime_components)}};
  }

  Json to_json(StructureReport const& r) {
    return {{"n", r.n},
            {"layer", r.layer},
            {"A_size", r.matrix.columns.size()},
            {"B_size", r.matrix.rows.size()},
            {"A", words(r.matrix.columns)},
            {"B", words(r.matrix.rows)},
            {"sandwich", to_json(r.matrix)},
            {"determinant", to_json(r.determinant)},
            {"quotient_ring_shape", r.shape}};
  }

  Json to_json(OrientedGraph const& g, RadicalReport const& r) {
    Json generators = Json::array();
    for (auto const& rel : r.generators) {
      generators.push_back(Json::array({to_string(rel.lhs), to_string(rel.rhs)}));
    }
    Json factors = Json::array();
    for (auto const& f : r.tensor.factors) {
      factors.push_back({{"vertices", labels(g, f.vertices)},
                         {"kind", f.is_cycle ? "cycle" : "singleton"},
                         {"blocks", f.blocks}});
    }
    Json classes = Json::array();
    for (auto const& [q, c] : r.classes) {
      classes.push_back({{"quotient", quotient_text(g, q)}, {"sum", c.get_str()}});
    }
    return {{"rho_generators", std::move(generators)},
            {"theta_prime", std::move(factors)},
            {"combined_blocks", r.tensor.combined_blocks},
            {"element", r.element.to_string()},
            {"nonzero_classes", std::move(classes)},
            {"member", r.member}};
  }

  Json to_json(CheckResult const& r) {
    return {{"criterion", r.criterion},
            {"name", r.name},
            {"passed", r.passed},
            {"checks", r.checks},
            {"failures", r.failures},
            {"detail", r.detail},
            {"seconds", r.seconds}};
  }

  Json to_json(RunConfig const& c, std::vector<CheckResult> const& results) {
    Json list   = Json::array();
    bool passed = true;
    for (auto const& r : results) {
      list.push_back(to_json(r));
      passed = passed && r.passed;
    }
    return {{"config",
             {{"min_n", c.min_n},
              {"max_n", c.max_n},
              {"seed", c.seed},
              {"enumeration_cap_factor", c.enumeration_cap_factor},
              {"ideal_cap_factor", c.ideal_cap_factor},
              {"step_cap", c.step_cap},
              {"length_slack", c.length_slack},
              {"random_orders", c.random_orders},
              {"confluence_length", c.confluence_length}}},
            {"results", std::move(list)},
            {"passed", passed}};
  }

  std::string render(Json const& j) {
    return j.dump(2) + "\n";
  }

  std::string to_text(OrientedGraph const& g, GraphReport const& r) {
    std::ostringstream out;
    out << "vertices: " << g.size() << ", arrows: " << g.arrows().size() << "\n";
    out << "components:";
    for (auto const& c : r.components) {
      out << " " << label_list(g, c);
    }
    out << "\ncycle arrows:";
    for (Arrow const& a : r.cycle_arrows) {
      out << " " << g.label(a.tail) << "->" << g.label(a.head);
    }
    if (r.cycle_arrows.empty()) {
      out << " none";
    }
    out << "\nis_pi: " << (r.is_pi ? "true" : "false") << "\n";
    out << "is_noetherian: " << (r.is_noetherian ? "true" : "false") << "\n";
    OrientedGraph const prime = theta_prime(g);
    out << "theta':";
    for (auto const& c : weak_components(prime)) {
      out << " " << label_list(g, c)
          << (c.size() == 1                 ? ""
              : is_oriented_cycle(prime, c) ? "(cycle)"
                                            : "(other)");
    }
    out << "\n";
    return out.str();
  }

  std::string to_text(StructureReport const& r) {
    std::ostringstream out;
    auto const&        m = r.matrix;
    out << "n = " << r.n << ", layer i = " << r.layer << ", s_i = "
        << to_string(s_word(r.n, r.layer)) << "\n";
    out << "|A_i| = " << m.columns.size() << ", |B_i| = " << m.rows.size() << "\n";
    out << "A_i:";
    for (Word const& a : m.columns) {
      out << " [" << to_string(a) << "]";
    }
    out << "\nB_i:";
    for (Word const& b : m.rows) {
      out << " [" << to_string(b) << "]";
    }
    out << "\nsandwich matrix (rows B_i, columns A_i):\n";
    for (std::size_t row = 0; row < m.rows.size(); ++row) {
      out << " ";
      for (std::size_t col = 0; col < m.columns.size(); ++col) {
        out << " " << std::setw(5) << entry_text(m.at(row, col));
      }
      out << "\n";
    }
    out << "det = " << r.determinant.to_string() << "\n";
    out << "quotient ring shape: " << join_blocks(r.shape) << "\n";
    return out.str();
  }

  std::string to_text(OrientedGraph const& g, RadicalReport const& r) {
    std::ostringstream out;
    out << "rho generators:";
    for (auto const& rel : r.generators) {
      out << " " << to_string(rel.lhs) << " = " << to_string(rel.rhs) << ";";
    }
    if (r.generators.empty()) {
      out << " none";
    }
    out << "\ntheta' factors:";
    for (auto const& f : r.tensor.factors) {
      out << " " << label_list(g, f.vertices) << (f.is_cycle ? " cycle " : " singleton ")
          << join_blocks(f.blocks) << ";";
    }
    out << "\nelement: " << r.element.to_string() << "\n";
    for (auto const& [q, c] : r.classes) {
      out << "  class " << quotient_text(g, q) << " has coefficient sum " << c.get_str()
          << "\n";
    }
    out << "in I(rho): " << (r.member ? "yes" : "no") << "\n";
    return out.str();
  }

  std::string to_text(std::vector<CheckResult> const& results) {
    std::ostringstream out;
    for (auto const& r : results) {
      out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.criterion << ": "
          << r.name << " (" << r.checks - r.failures << "/" << r.checks << " checks, "
          << std::fixed << std::setprecision(2) << r.seconds << " s)";
      if (!r.detail.empty()) {
        out << "\n    " << r.detail;
      }
      out << "\n";
    }
    return out.str();
  }

}  // namespace hk
