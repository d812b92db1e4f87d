#include "hk/hecke_kiselman.hpp"

#include <algorithm>
#include <unordered_map>

namespace hk {

  namespace {
    Letter letter(Vertex v) {
      return static_cast<Letter>(v + 1);
    }

    bool matches_at(Word const& w, Word const& pattern, std::size_t p) {
      return p + pattern.size() <= w.size()
             && std::equal(pattern.begin(),
                           pattern.end(),
                           w.begin() + static_cast<std::ptrdiff_t>(p));
    }

    Word replaced(Word const& w,
                  std::size_t p,
                  Word const& pattern,
                  Word const& replacement) {
      Word out;
      out.reserve(w.size() - pattern.size() + replacement.size());
      out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      out.insert(out.end(), replacement.begin(), replacement.end());
      out.insert(out.end(),
                 w.begin() + static_cast<std::ptrdiff_t>(p + pattern.size()),
                 w.end());
      return out;
    }

    struct Node {
      Word        word;
      std::size_t parent;  // index of the predecessor; self for roots
      std::size_t relation;
      std::size_t position;
      bool        forward;
    };

    // One side of the bidirectional search.
    struct Side {
      std::vector<Node>                                 nodes;
      std::unordered_map<Word, std::size_t, WordHash> index;
      std::size_t                                       level_begin = 0;

      explicit Side(Word const& root) {
        nodes.push_back({root, 0, 0, 0, true});
        index.emplace(root, 0);
      }

      // Steps from the root to node k, as applied from root outwards.
      std::vector<std::size_t> path_to(std::size_t k) const {
        std::vector<std::size_t> path;
        while (nodes[k].parent != k) {
          path.push_back(k);
          k = nodes[k].parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
    };
  }  // namespace

  std::vector<Relation> generic_relations(OrientedGraph const& g) {
    std::vector<Relation> out;
    std::size_t const     n = g.size();
    for (Vertex i = 0; i < n; ++i) {
      out.push_back({{letter(i), letter(i)}, {letter(i)}});
    }
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (!g.adjacent(i, j)) {
          out.push_back({{letter(i), letter(j)}, {letter(j), letter(i)}});
        }
      }
    }
    for (Arrow const& a : g.arrows()) {
      Letter const i = letter(a.tail), j = letter(a.head);
      out.push_back({{i, j, i}, {i, j}});
      out.push_back({{j, i, j}, {i, j}});
    }
    return out;
  }

  EqualityVerdict equal_in_hk(Word const&               u,
                              Word const&               v,
                              std::span<Relation const> relations,
                              SearchCaps                caps) {
    EqualityVerdict verdict;
    if (u == v) {
      verdict.kind = EqualityVerdict::Kind::equal;
      return verdict;
    }
    if (u.size() > caps.length_cap || v.size() > caps.length_cap) {
      return verdict;
    }

    Side from_u(u), from_v(v);

    auto finish = [&](std::size_t ku, std::size_t kv) {
      verdict.kind = EqualityVerdict::Kind::equal;
      for (std::size_t k : from_u.path_to(ku)) {
        Node const& node = from_u.nodes[k];
        verdict.trace.push_back(
            {node.relation, node.position, node.forward, node.word});
      }
      // Walk back from the meeting word to v, inverting each step.
      for (std::size_t k = kv; from_v.nodes[k].parent != k;
           k              = from_v.nodes[k].parent) {
        Node const& node = from_v.nodes[k];
        verdict.trace.push_back({node.relation,
                                 node.position,
                                 !node.forward,
                                 from_v.nodes[node.parent].word});
      }
    };

    // Expands one full level of `side`; returns true once the sides meet.
    auto expand_level = [&](Side& side, Side& other, bool side_is_u) {
      std::size_t const level_end = side.nodes.size();
      for (std::size_t k = side.level_begin; k < level_end; ++k) {
        if (verdict.expansions >= caps.step_cap) {
          return false;
        }
        ++verdict.expansions;
        // Copied: pushing onto side.nodes below may reallocate.
        Word const w = side.nodes[k].word;
        for (std::size_t r = 0; r < relations.size(); ++r) {
          for (bool forward : {true, false}) {
            Word const& pattern = forward ? relations[r].lhs : relations[r].rhs;
            Word const& other_side
                = forward ? relations[r].rhs : relations[r].lhs;
            if (pattern.size() > w.size()
                || w.size() - pattern.size() + other_side.size()
                       > caps.length_cap) {
              continue;
            }
            for (std::size_t p = 0; p + pattern.size() <= w.size(); ++p) {
              if (!matches_at(w, pattern, p)) {
                continue;
              }
              Word next = replaced(w, p, pattern, other_side);
              if (side.index.contains(next)) {
                continue;
              }
              std::size_t const id = side.nodes.size();
              side.index.emplace(next, id);
              side.nodes.push_back({std::move(next), k, r, p, forward});
              if (auto it = other.index.find(side.nodes[id].word);
                  it != other.index.end()) {
                if (side_is_u) {
                  finish(id, it->second);
                } else {
                  finish(it->second, id);
                }
                return true;
              }
            }
          }
        }
      }
      side.level_begin = level_end;
      return false;
    };

    while (verdict.expansions < caps.step_cap) {
      std::size_t const u_frontier = from_u.nodes.size() - from_u.level_begin;
      std::size_t const v_frontier = from_v.nodes.size() - from_v.level_begin;
      if (u_frontier == 0 || v_frontier == 0) {
        break;  // one congruence class exhausted within the length cap
      }
      bool const met = u_frontier <= v_frontier
                           ? expand_level(from_u, from_v, true)
                           : expand_level(from_v, from_u, false);
      if (met) {
        break;
      }
    }
    return verdict;
  }

  EqualityVerdict equal_in_hk(Word const&          u,
                              Word const&          v,
                              OrientedGraph const& g,
                              SearchCaps           caps) {
    auto const relations = generic_relations(g);
    return equal_in_hk(u, v, relations, caps);
  }

  bool verify_trace(Word const&                     u,
                    Word const&                     v,
                    std::span<Relation const>       relations,
                    std::vector<RewriteStep> const& trace) {
    Word current = u;
    for (RewriteStep const& step : trace) {
      if (step.relation >= relations.size()) {
        return false;
      }
      Relation const& rel     = relations[step.relation];
      Word const&     pattern = step.forward ? rel.lhs : rel.rhs;
      Word const&     image   = step.forward ? rel.rhs : rel.lhs;
      if (!matches_at(current, pattern, step.position)) {
        return false;
      }
      current = replaced(current, step.position, pattern, image);
      if (current != step.result) {
        return false;
      }
    }
    return current == v;
  }

}  // namespace hk
