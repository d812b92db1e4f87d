#include "hk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

  OrientedGraph::OrientedGraph(std::vector<std::string> labels,
                               std::vector<Arrow>       arrows)
      : _labels(std::move(labels)),
        _arrows(),
        _adjacency(_labels.size() * _labels.size(), false) {
    for (std::size_t v = 0; v < _labels.size(); ++v) {
      if (_labels[v].empty()) {
        throw SyntaxError("empty vertex label");
      }
      for (std::size_t w = 0; w < v; ++w) {
        if (_labels[v] == _labels[w]) {
          throw SyntaxError("duplicate vertex label '" + _labels[v] + "'");
        }
      }
    }
    std::size_t const n = _labels.size();
    for (Arrow const& a : arrows) {
      if (a.tail >= n || a.head >= n) {
        throw std::out_of_range("arrow endpoint is not a vertex");
      }
      if (a.tail == a.head) {
        throw NotOriented("loop at vertex '" + _labels[a.tail] + "'");
      }
      if (_adjacency[a.head * n + a.tail]) {
        throw NotOriented("antiparallel arrows between '" + _labels[a.tail]
                          + "' and '" + _labels[a.head] + "'");
      }
      if (!_adjacency[a.tail * n + a.head]) {
        _adjacency[a.tail * n + a.head] = true;
        _arrows.push_back(a);
      }
    }
  }

  OrientedGraph OrientedGraph::cycle(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<Arrow>       arrows;
    for (std::size_t v = 0; v < n; ++v) {
      labels.push_back(std::to_string(v + 1));
      arrows.push_back({v, (v + 1) % n});
    }
    return OrientedGraph(std::move(labels), std::move(arrows));
  }

  std::optional<Vertex> OrientedGraph::find(std::string_view label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<Vertex>(it - _labels.begin());
  }

  bool OrientedGraph::has_arrow(Vertex tail, Vertex head) const {
    std::size_t const n = size();
    return tail < n && head < n && _adjacency[tail * n + head];
  }

  bool OrientedGraph::is_source(Vertex v) const {
    bool has_out = false;
    for (Arrow const& a : _arrows) {
      if (a.head == v) {
        return false;
      }
      has_out = has_out || a.tail == v;
    }
    return has_out;
  }

  bool OrientedGraph::is_sink(Vertex v) const {
    bool has_in = false;
    for (Arrow const& a : _arrows) {
      if (a.tail == v) {
        return false;
      }
      has_in = has_in || a.head == v;
    }
    return has_in;
  }

  OrientedGraph parse_graph(std::string_view text) {
    static std::regex const arrow_line(
        R"(^\s*([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)\s*$)");
    static std::regex const vertex_line(R"(^\s*([A-Za-z0-9_]+)\s*$)");
    static std::regex const blank_line(R"(^\s*$)");

    std::vector<std::string> labels;
    std::vector<Arrow>       arrows;
    auto                     intern = [&labels](std::string const& label) {
      auto it = std::find(labels.begin(), labels.end(), label);
      if (it != labels.end()) {
        return static_cast<Vertex>(it - labels.begin());
      }
      labels.push_back(label);
      return labels.size() - 1;
    };

    std::istringstream in{std::string(text)};
    std::size_t        line_no = 0;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::smatch m;
      if (std::regex_match(line, blank_line)) {
        continue;
      } else if (std::regex_match(line, m, arrow_line)) {
        Vertex tail = intern(m[1]);
        Vertex head = intern(m[2]);
        arrows.push_back({tail, head});
      } else if (std::regex_match(line, m, vertex_line)) {
        intern(m[1]);
      } else {
        throw SyntaxError("line " + std::to_string(line_no)
                          + ": expected '<vertex>' or '<vertex> -> <vertex>'");
      }
    }
    if (labels.empty()) {
      throw SyntaxError("graph has no vertices");
    }
    return OrientedGraph(std::move(labels), std::move(arrows));
  }

  std::string to_text(OrientedGraph const& g) {
    // Declaring every vertex up front pins the vertex order on re-parse.
    std::string out;
    for (auto const& label : g.labels()) {
      out += label + "\n";
    }
    for (Arrow const& a : g.arrows()) {
      out += g.label(a.tail) + " -> " + g.label(a.head) + "\n";
    }
    return out;
  }

  std::vector<std::vector<bool>> reachability(OrientedGraph const& g) {
    std::size_t const                n = g.size();
    std::vector<std::vector<Vertex>> out(n);
    for (Arrow const& a : g.arrows()) {
      out[a.tail].push_back(a.head);
    }
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (Vertex s = 0; s < n; ++s) {
      std::vector<Vertex> stack{s};
      reach[s][s] = true;
      while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : out[u]) {
          if (!reach[s][v]) {
            reach[s][v] = true;
            stack.push_back(v);
          }
        }
      }
    }
    return reach;
  }

  std::vector<std::vector<Vertex>> weak_components(OrientedGraph const& g) {
    std::vector<Vertex> parent(g.size());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto root = [&parent](Vertex v) {
      while (parent[v] != v) {
        v = parent[v] = parent[parent[v]];
      }
      return v;
    };
    for (Arrow const& a : g.arrows()) {
      Vertex ru = root(a.tail), rv = root(a.head);
      if (ru != rv) {
        parent[std::max(ru, rv)] = std::min(ru, rv);
      }
    }
    std::vector<std::vector<Vertex>> components;
    std::vector<std::size_t>         index(g.size(), g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
      Vertex r = root(v);
      if (index[r] == g.size()) {
        index[r] = components.size();
        components.emplace_back();
      }
      components[index[r]].push_back(v);
    }
    return components;
  }

  std::vector<Arrow> cycle_arrows(OrientedGraph const& g) {
    auto const         reach = reachability(g);
    std::vector<Arrow> out;
    for (Arrow const& a : g.arrows()) {
      if (reach[a.head][a.tail]) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool is_pi(OrientedGraph const& g) {
    auto const        reach = reachability(g);
    std::size_t const n     = g.size();
    // Strongly connected components with at least one arrow, by
    // representative (smallest member).
    std::vector<Vertex> rep(n);
    for (Vertex v = 0; v < n; ++v) {
      rep[v] = v;
      for (Vertex u = 0; u < v; ++u) {
        if (reach[u][v] && reach[v][u]) {
          rep[v] = rep[u];
          break;
        }
      }
    }
    std::vector<std::size_t> vertices(n, 0), inner_arrows(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      ++vertices[rep[v]];
    }
    for (Arrow const& a : g.arrows()) {
      if (rep[a.tail] == rep[a.head]) {
        ++inner_arrows[rep[a.tail]];
      }
    }
    std::vector<Vertex> cyclic;
    for (Vertex r = 0; r < n; ++r) {
      if (inner_arrows[r] == 0) {
        continue;
      }
      // A strongly connected piece that is more than a single cycle holds two
      // distinct cycles sharing a vertex.
      if (inner_arrows[r] != vertices[r]) {
        return false;
      }
      cyclic.push_back(r);
    }
    for (Vertex a : cyclic) {
      for (Vertex b : cyclic) {
        if (a != b && reach[a][b]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_oriented_cycle(OrientedGraph const&      g,
                         std::vector<Vertex> const& component) {
    if (component.size() < 3) {
      return false;
    }
    std::vector<bool> in_component(g.size(), false);
    for (Vertex v : component) {
      in_component[v] = true;
    }
    std::vector<std::size_t> out_degree(g.size(), 0), in_degree(g.size(), 0);
    std::size_t              inner = 0;
    for (Arrow const& a : g.arrows()) {
      if (in_component[a.tail] && in_component[a.head]) {
        ++inner;
        ++out_degree[a.tail];
        ++in_degree[a.head];
      }
    }
    if (inner != component.size()) {
      return false;
    }
    for (Vertex v : component) {
      if (out_degree[v] != 1 || in_degree[v] != 1) {
        return false;
      }
    }
    // Degrees alone allow a disjoint union of cycles; walk from one vertex.
    Vertex      v     = component.front();
    std::size_t steps = 0;
    do {
      for (Arrow const& a : g.arrows()) {
        if (a.tail == v && in_component[a.head]) {
          v = a.head;
          break;
        }
      }
      ++steps;
    } while (v != component.front() && steps <= component.size());
    return steps == component.size();
  }

  bool is_noetherian(OrientedGraph const& g) {
    auto const        cyclic = cycle_arrows(g);
    std::vector<bool> on_cycle(g.size(), false);
    for (Arrow const& a : cyclic) {
      on_cycle[a.tail] = on_cycle[a.head] = true;
    }
    for (auto const& component : weak_components(g)) {
      bool acyclic = std::none_of(component.begin(),
                                  component.end(),
                                  [&on_cycle](Vertex v) { return on_cycle[v]; });
      if (!acyclic && !is_oriented_cycle(g, component)) {
        return false;
      }
    }
    return true;
  }

  OrientedGraph theta_prime(OrientedGraph const& g) {
    return OrientedGraph(g.labels(), cycle_arrows(g));
  }

  GraphReport analyse(OrientedGraph const& g) {
    return GraphReport{
        weak_components(g), cycle_arrows(g), is_pi(g), is_noetherian(g)};
  }

}  // namespace hk
