#ifndef HK_GRAPH_HPP_
#define HK_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

  // Index of a vertex in OrientedGraph::labels(), 0-based. The generator
  // attached to vertex v is x_{v+1}.
  using Vertex = std::size_t;

  struct Arrow {
    Vertex tail;
    Vertex head;

    auto operator<=>(Arrow const&) const = default;
  };

  //! A finite simple oriented graph: no loops, and at most one of (u, v),
  //! (v, u) for every pair of vertices. Immutable once constructed.
  //!
  //! Vertices keep the order in which they were supplied (first-mention order
  //! when parsed). Arrows keep their insertion order with duplicates removed.
  class OrientedGraph {
   public:
    OrientedGraph() = default;

    //! Throws NotOriented on a loop or an antiparallel pair, SyntaxError on
    //! duplicate or empty labels, and std::out_of_range on arrow endpoints
    //! that are not vertices.
    OrientedGraph(std::vector<std::string> labels, std::vector<Arrow> arrows);

    //! The oriented cycle 1 -> 2 -> ... -> n -> 1 with labels "1".."n".
    static OrientedGraph cycle(std::size_t n);

    std::size_t size() const noexcept {
      return _labels.size();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string const& label(Vertex v) const {
      return _labels.at(v);
    }

    std::vector<Arrow> const& arrows() const noexcept {
      return _arrows;
    }

    std::optional<Vertex> find(std::string_view label) const;

    bool has_arrow(Vertex tail, Vertex head) const;

    // Joined by an arrow in either direction.
    bool adjacent(Vertex u, Vertex v) const {
      return has_arrow(u, v) || has_arrow(v, u);
    }

    bool is_source(Vertex v) const;
    bool is_sink(Vertex v) const;

    bool operator==(OrientedGraph const&) const = default;

   private:
    std::vector<std::string> _labels;
    std::vector<Arrow>       _arrows;
    // _adjacency[u * size() + v] is true iff u -> v.
    std::vector<bool> _adjacency;
  };

  // Reads the line-oriented graph format: `<token> -> <token>` per arrow,
  // `<token>` alone for an isolated vertex, blank lines and `#` comments
  // ignored. Tokens match [A-Za-z0-9_]+.
  OrientedGraph parse_graph(std::string_view text);

  // Inverse of parse_graph: vertex declarations first, then arrows.
  std::string to_text(OrientedGraph const& g);

  // reach[u][v] is true iff a directed path of length >= 0 leads from u to v.
  std::vector<std::vector<bool>> reachability(OrientedGraph const& g);

  // Weakly connected components, each listed in vertex order, ordered by
  // their smallest vertex.
  std::vector<std::vector<Vertex>> weak_components(OrientedGraph const& g);

  // Arrows (u, v) for which v reaches u, i.e. those lying on an oriented
  // cycle. Returned in the graph's arrow order.
  std::vector<Arrow> cycle_arrows(OrientedGraph const& g);

  // No oriented path (possibly of length 0) joins a vertex of one oriented
  // cycle to a vertex of a different oriented cycle.
  bool is_pi(OrientedGraph const& g);

  // Every weakly connected component is acyclic or is exactly one oriented
  // cycle.
  bool is_noetherian(OrientedGraph const& g);

  // Same vertices, keeping only the arrows that lie on an oriented cycle.
  OrientedGraph theta_prime(OrientedGraph const& g);

  // True iff the vertices of `component` together with the arrows of g among
  // them form a single oriented cycle.
  bool is_oriented_cycle(OrientedGraph const&      g,
                         std::vector<Vertex> const& component);

  struct GraphReport {
    std::vector<std::vector<Vertex>> components;
    std::vector<Arrow>               cycle_arrows;
    bool                             is_pi;
    bool                             is_noetherian;
  };

  GraphReport analyse(OrientedGraph const& g);

}  // namespace hk

#endif  // HK_GRAPH_HPP_
