#ifndef HK_RADICAL_HPP_
#define HK_RADICAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hk/graph.hpp"
#include "hk/hecke_kiselman.hpp"
#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk {

  // Resolves a word over the generators of g. Each token is a vertex label,
  // `x` followed by a vertex label, `x_` followed by a vertex label, or a
  // 1-based vertex index (optionally prefixed by `x`), tried in that order.
  // The empty string and "1" are the identity.
  Word parse_graph_word(std::string_view text, OrientedGraph const& g);

  //! An element of the semigroup algebra K[HK_g] over the rationals: a finite
  //! combination of words. Words need not be normal forms.
  class AlgebraElement {
   public:
    AlgebraElement() = default;

    void add(Word const& w, mpq_class const& coefficient);

    std::map<Word, mpq_class> const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    //! u * this * v, term by term.
    AlgebraElement padded(Word const& u, Word const& v) const;

    friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b);

    std::string to_string() const;

   private:
    // No stored coefficient is zero.
    std::map<Word, mpq_class> _terms;
  };

  //! Parses `<rational>*<word> (+|-) <rational>*<word> ...`, rationals as
  //! integers or p/q. "0" and the empty string are the zero element.
  AlgebraElement parse_element(std::string_view text, OrientedGraph const& g);

  //! The pairs (x_u x_v, x_v x_u) for every arrow u -> v lying on no
  //! oriented cycle. Throws NotPI.
  std::vector<Relation> rho_generators(OrientedGraph const& g);

  //! Image of a word in HK_{g'} = HK_g / rho, as one reduced word per
  //! weakly connected component of g'. A cycle component holds its C_k
  //! normal form in local indices; a singleton holds "" or "x1".
  struct QuotientForm {
    std::vector<Word> parts;

    auto operator<=>(QuotientForm const&) const = default;
  };

  //! The quotient homomorphism HK_g -> HK_{g'} for a PI graph g.
  class QuotientMap {
   public:
    struct Component {
      // Graph vertices in local order: for a cycle, following the arrows
      // from the smallest vertex.
      std::vector<Vertex> vertices;
      bool                is_cycle;
    };

    //! Throws NotPI if g is not PI or g' has a component that is neither a
    //! singleton nor an oriented cycle.
    explicit QuotientMap(OrientedGraph const& g);

    std::vector<Component> const& components() const noexcept {
      return _components;
    }

    QuotientForm project(Word const& w) const;

    QuotientForm multiply(QuotientForm const& a, QuotientForm const& b) const;

    // Renders parts with global generator names, e.g. "[x1 x3 | x4]".
    std::string to_string(QuotientForm const& q) const;

   private:
    std::vector<Component>   _components;
    std::vector<std::optional<CycleSystem>> _systems;  // empty for singletons
    // Per graph vertex: owning component and local 1-based index.
    std::vector<std::size_t> _component_of;
    std::vector<Letter>      _local;
  };

  QuotientForm quotient_normal_form(Word const& w, OrientedGraph const& g);

  //! Whether alpha lies in I(rho), the kernel of K[HK_g] -> K[HK_{g'}]:
  //! the coefficients of every class of equal quotient forms sum to zero.
  //! Throws NotPI.
  bool radical_membership(AlgebraElement const& alpha, OrientedGraph const& g);
  bool radical_membership(AlgebraElement const& alpha, QuotientMap const& map);

  //! For a source x with an arrow x -> y, certifies via bounded relation
  //! search that xwxy = xwy, xwyx = xwy, xywxy = xywy and xywyx = xywy; for
  //! a sink x with an arrow y -> x, the mirrored four identities. Together
  //! they give (xy - yx) w (xy - yx) = 0. Throws NotSourceOrSink.
  bool source_sink_identity_check(OrientedGraph const& g,
                                  Vertex               x,
                                  Vertex               y,
                                  Word const&          w,
                                  SearchCaps           caps);

  // The word pairs whose equality source_sink_identity_check certifies.
  std::vector<std::pair<Word, Word>>
  source_sink_identities(OrientedGraph const& g, Vertex x, Vertex y, Word const& w);

  struct TensorFactor {
    std::vector<Vertex>        vertices;
    bool                       is_cycle;
    // Matrix sizes of the semisimple quotient of the factor: [1, 1] for
    // K + K, quotient_ring_shape(j) for K[C_j].
    std::vector<std::uint64_t> blocks;
  };

  struct TensorReport {
    std::vector<TensorFactor>  factors;
    // Sizes of the simple blocks of the tensor product: every product of one
    // block per factor, in lexicographic order of the choices.
    std::vector<std::uint64_t> combined_blocks;
  };

  //! Throws NotPI.
  TensorReport tensor_decomposition_report(OrientedGraph const& g);

}  // namespace hk

#endif  // HK_RADICAL_HPP_
