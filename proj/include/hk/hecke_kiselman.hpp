#ifndef HK_HECKE_KISELMAN_HPP_
#define HK_HECKE_KISELMAN_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "hk/graph.hpp"
#include "hk/word.hpp"

namespace hk {

  // A defining relation lhs = rhs, usable in both directions.
  struct Relation {
    Word lhs;
    Word rhs;

    bool operator==(Relation const&) const = default;
  };

  // Defining relations of HK_g over the generators x_1..x_n, x_k attached to
  // vertex k-1:
  //   x_i x_i = x_i                              for every vertex,
  //   x_i x_j = x_j x_i                          for non-adjacent i < j,
  //   x_i x_j x_i = x_i x_j, x_j x_i x_j = x_i x_j  for every arrow i -> j.
  std::vector<Relation> generic_relations(OrientedGraph const& g);

  // One application of relations[relation] at `position`, left-to-right if
  // `forward`; `result` is the word after the step.
  struct RewriteStep {
    std::size_t relation;
    std::size_t position;
    bool        forward;
    Word        result;
  };

  struct EqualityVerdict {
    enum class Kind { equal, unknown };

    Kind kind = Kind::unknown;
    // For Kind::equal, a chain of relation applications leading from the
    // first word to the second; empty when they coincide.
    std::vector<RewriteStep> trace;
    // Words visited before the verdict was reached.
    std::size_t expansions = 0;

    bool equal() const noexcept {
      return kind == Kind::equal;
    }
  };

  struct SearchCaps {
    std::size_t step_cap   = 200000;
    std::size_t length_cap = 12;
  };

  //! Bounded bidirectional breadth-first search for a chain of relation
  //! applications joining u and v, through words of length at most
  //! caps.length_cap, expanding at most caps.step_cap words.
  //!
  //! Never decides inequality: exhaustion yields Kind::unknown.
  EqualityVerdict equal_in_hk(Word const&              u,
                              Word const&              v,
                              std::span<Relation const> relations,
                              SearchCaps               caps);

  EqualityVerdict equal_in_hk(Word const&          u,
                              Word const&          v,
                              OrientedGraph const& g,
                              SearchCaps           caps);

  //! Replays a trace, checking every step against the relations.
  bool verify_trace(Word const&                     u,
                    Word const&                     v,
                    std::span<Relation const>        relations,
                    std::vector<RewriteStep> const& trace);

}  // namespace hk

#endif  // HK_HECKE_KISELMAN_HPP_
