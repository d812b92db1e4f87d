#include "hk/radical.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "hk/errors.hpp"
#include "hk/poly.hpp"

namespace hk {

  namespace {
    std::optional<Vertex> resolve_token(std::string_view     tok,
                                        OrientedGraph const& g) {
      if (auto v = g.find(tok)) {
        return v;
      }
      if (tok.starts_with("x_")) {
        if (auto v = g.find(tok.substr(2))) {
          return v;
        }
      }
      if (tok.starts_with("x")) {
        if (auto v = g.find(tok.substr(1))) {
          return v;
        }
        tok.remove_prefix(1);
      }
      std::size_t k = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
      if (!tok.empty() && ec == std::errc{} && ptr == tok.data() + tok.size()
          && k >= 1 && k <= g.size()) {
        return k - 1;
      }
      return std::nullopt;
    }

    std::string trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r\n");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r\n");
      return std::string(s.substr(first, last - first + 1));
    }

    Word letter_word(Vertex v) {
      return Word{static_cast<Letter>(v + 1)};
    }

    void require_pi(OrientedGraph const& g) {
      if (!is_pi(g)) {
        throw NotPI("the graph contains two oriented cycles joined by an "
                    "oriented path");
      }
    }
  }  // namespace

  Word parse_graph_word(std::string_view text, OrientedGraph const& g) {
    std::istringstream       in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) {
      tokens.push_back(std::move(tok));
    }
    if (tokens.empty()
        || (tokens.size() == 1 && tokens[0] == "1" && !g.find("1"))) {
      return {};
    }
    Word out;
    for (auto const& tok : tokens) {
      auto v = resolve_token(tok, g);
      if (!v) {
        throw SyntaxError("'" + tok + "' names no vertex of the graph");
      }
      out.push_back(static_cast<Letter>(*v + 1));
    }
    return out;
  }

  void AlgebraElement::add(Word const& w, mpq_class const& coefficient) {
    if (coefficient == 0) {
      return;
    }
    auto [it, inserted] = _terms.emplace(w, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  AlgebraElement AlgebraElement::padded(Word const& u, Word const& v) const {
    AlgebraElement out;
    for (auto const& [w, c] : _terms) {
      out.add(concat(u, w, v), c);
    }
    return out;
  }

  AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
    for (auto const& [w, c] : b._terms) {
      a.add(w, -c);
    }
    return a;
  }

  std::string AlgebraElement::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [w, c] : _terms) {
      if (out.empty()) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      mpq_class const mag = abs(c);
      out += mag.get_str() + "*" + hk::to_string(w);
    }
    return out;
  }

  AlgebraElement parse_element(std::string_view text, OrientedGraph const& g) {
    AlgebraElement out;
    std::string    body = trim(text);
    if (body.empty() || body == "0") {
      return out;
    }
    // Split at top-level signs; word tokens never contain '+' or '-'.
    std::vector<std::pair<int, std::string>> terms;
    int                                      sign = 1;
    std::string                              current;
    bool                                     seen_content = false;
    for (char ch : body) {
      if (ch == '+' || ch == '-') {
        if (seen_content) {
          terms.emplace_back(sign, current);
          current.clear();
          seen_content = false;
          sign         = ch == '-' ? -1 : 1;
        } else {
          sign = ch == '-' ? -sign : sign;
        }
      } else {
        current += ch;
        seen_content = seen_content || !std::isspace(static_cast<unsigned char>(ch));
      }
    }
    if (!seen_content) {
      throw SyntaxError("dangling sign in element '" + body + "'");
    }
    terms.emplace_back(sign, current);

    for (auto const& [term_sign, term] : terms) {
      auto const star = term.find('*');
      if (star == std::string::npos) {
        throw SyntaxError("term '" + trim(term)
                          + "' is not of the form <rational>*<word>");
      }
      std::string const coeff_text = trim(std::string_view(term).substr(0, star));
      mpq_class         coeff;
      bool const        valid
          = !coeff_text.empty()
            && std::all_of(coeff_text.begin(), coeff_text.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c)) || c == '/';
               })
            && std::count(coeff_text.begin(), coeff_text.end(), '/') <= 1
            && coeff_text.front() != '/' && coeff_text.back() != '/';
      if (!valid || coeff.set_str(coeff_text, 10) != 0) {
        throw SyntaxError("invalid coefficient '" + coeff_text + "'");
      }
      if (coeff.get_den() == 0) {
        throw SyntaxError("zero denominator in '" + coeff_text + "'");
      }
      coeff.canonicalize();
      out.add(parse_graph_word(std::string_view(term).substr(star + 1), g),
              term_sign * coeff);
    }
    return out;
  }

  std::vector<Relation> rho_generators(OrientedGraph const& g) {
    require_pi(g);
    auto const            cyclic = cycle_arrows(g);
    std::vector<Relation> out;
    for (Arrow const& a : g.arrows()) {
      if (std::find(cyclic.begin(), cyclic.end(), a) == cyclic.end()) {
        Letter const u = static_cast<Letter>(a.tail + 1);
        Letter const v = static_cast<Letter>(a.head + 1);
        out.push_back({{u, v}, {v, u}});
      }
    }
    return out;
  }

  QuotientMap::QuotientMap(OrientedGraph const& g)
      : _component_of(g.size()), _local(g.size()) {
    require_pi(g);
    OrientedGraph const reduced = theta_prime(g);
    for (auto const& vertices : weak_components(reduced)) {
      Component component{{}, false};
      if (vertices.size() == 1) {
        component.vertices = vertices;
      } else if (is_oriented_cycle(reduced, vertices)) {
        component.is_cycle = true;
        Vertex v           = vertices.front();
        do {
          component.vertices.push_back(v);
          for (Arrow const& a : reduced.arrows()) {
            if (a.tail == v) {
              v = a.head;
              break;
            }
          }
        } while (v != vertices.front());
      } else {
        throw NotPI("a component of the cyclic part is neither a vertex nor "
                    "an oriented cycle");
      }
      for (std::size_t k = 0; k < component.vertices.size(); ++k) {
        _component_of[component.vertices[k]] = _components.size();
        _local[component.vertices[k]]        = static_cast<Letter>(k + 1);
      }
      if (component.is_cycle) {
        _systems.emplace_back(CycleSystem(component.vertices.size()));
      } else {
        _systems.emplace_back(std::nullopt);
      }
      _components.push_back(std::move(component));
    }
  }

  QuotientForm QuotientMap::project(Word const& w) const {
    QuotientForm q;
    q.parts.resize(_components.size());
    for (Letter x : w) {
      Vertex const v = x - 1u;
      q.parts.at(_component_of.at(v)).push_back(_local[v]);
    }
    for (std::size_t c = 0; c < _components.size(); ++c) {
      if (_components[c].is_cycle) {
        q.parts[c] = _systems[c]->normal_form(std::move(q.parts[c]));
      } else if (!q.parts[c].empty()) {
        q.parts[c] = Word{1};
      }
    }
    return q;
  }

  QuotientForm QuotientMap::multiply(QuotientForm const& a,
                                     QuotientForm const& b) const {
    QuotientForm q;
    for (std::size_t c = 0; c < _components.size(); ++c) {
      if (_components[c].is_cycle) {
        q.parts.push_back(_systems[c]->multiply(a.parts.at(c), b.parts.at(c)));
      } else {
        q.parts.push_back(a.parts.at(c).empty() && b.parts.at(c).empty()
                              ? Word{}
                              : Word{1});
      }
    }
    return q;
  }

  std::string QuotientMap::to_string(QuotientForm const& q) const {
    std::string out = "[";
    for (std::size_t c = 0; c < q.parts.size(); ++c) {
      if (c != 0) {
        out += " | ";
      }
      Word global;
      for (Letter x : q.parts[c]) {
        global.push_back(static_cast<Letter>(_components[c].vertices[x - 1u] + 1));
      }
      out += hk::to_string(global);
    }
    return out + "]";
  }

  QuotientForm quotient_normal_form(Word const& w, OrientedGraph const& g) {
    return QuotientMap(g).project(w);
  }

  bool radical_membership(AlgebraElement const& alpha, QuotientMap const& map) {
    std::map<QuotientForm, mpq_class> classes;
    for (auto const& [w, c] : alpha.terms()) {
      classes[map.project(w)] += c;
    }
    return std::all_of(classes.begin(), classes.end(), [](auto const& kv) {
      return kv.second == 0;
    });
  }

  bool radical_membership(AlgebraElement const& alpha, OrientedGraph const& g) {
    return radical_membership(alpha, QuotientMap(g));
  }

  std::vector<std::pair<Word, Word>>
  source_sink_identities(OrientedGraph const& g, Vertex x, Vertex y, Word const& w) {
    Word const X = letter_word(x), Y = letter_word(y);
    auto       cat = [](std::initializer_list<Word> parts) {
      Word out;
      for (auto const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    };
    if (g.is_source(x) && g.has_arrow(x, y)) {
      return {{cat({X, w, X, Y}), cat({X, w, Y})},
              {cat({X, w, Y, X}), cat({X, w, Y})},
              {cat({X, Y, w, X, Y}), cat({X, Y, w, Y})},
              {cat({X, Y, w, Y, X}), cat({X, Y, w, Y})}};
    }
    if (g.is_sink(x) && g.has_arrow(y, x)) {
      // Mirror images of the source identities, with z = y the tail.
      Word const& Z = Y;
      return {{cat({Z, X, w, X}), cat({Z, w, X})},
              {cat({X, Z, w, X}), cat({Z, w, X})},
              {cat({Z, X, w, Z, X}), cat({Z, w, Z, X})},
              {cat({X, Z, w, Z, X}), cat({Z, w, Z, X})}};
    }
    throw NotSourceOrSink("'" + g.label(x) + "' is neither a source with an arrow to '"
                          + g.label(y) + "' nor a sink with an arrow from it");
  }

  bool source_sink_identity_check(OrientedGraph const& g,
                                  Vertex               x,
                                  Vertex               y,
                                  Word const&          w,
                                  SearchCaps           caps) {
    auto const relations = generic_relations(g);
    for (auto const& [lhs, rhs] : source_sink_identities(g, x, y, w)) {
      auto const verdict = equal_in_hk(lhs, rhs, relations, caps);
      if (!verdict.equal() || !verify_trace(lhs, rhs, relations, verdict.trace)) {
        return false;
      }
    }
    return true;
  }

  TensorReport tensor_decomposition_report(OrientedGraph const& g) {
    QuotientMap const map(g);
    TensorReport      report;
    for (auto const& component : map.components()) {
      TensorFactor factor{component.vertices, component.is_cycle, {}};
      factor.blocks = component.is_cycle
                          ? quotient_ring_shape(component.vertices.size())
                          : std::vector<std::uint64_t>{1, 1};
      report.factors.push_back(std::move(factor));
    }
    report.combined_blocks = {1};
    for (auto const& factor : report.factors) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t left : report.combined_blocks) {
        for (std::uint64_t right : factor.blocks) {
          next.push_back(left * right);
        }
      }
      report.combined_blocks = std::move(next);
    }
    return report;
  }

}  // namespace hk
