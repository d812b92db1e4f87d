#ifndef HK_CYCLE_STRUCTURE_HPP_
#define HK_CYCLE_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk {

  //! An element of C_n, held as its reduced word.
  class CycleElement {
   public:
    //! Normalises w.
    CycleElement(CycleSystem const& sys, Word const& w)
        : _n(sys.rank()), _word(sys.normal_form(w)) {}

    //! Throws std::invalid_argument if w is not reduced.
    static CycleElement from_reduced(CycleSystem const& sys, Word w);

    std::size_t rank() const noexcept {
      return _n;
    }

    Word const& word() const noexcept {
      return _word;
    }

    bool operator==(CycleElement const&) const = default;

   private:
    CycleElement(std::size_t n, Word w) : _n(n), _word(std::move(w)) {}

    std::size_t _n;
    Word        _word;
  };

  // s_i = x_n q_i = x_n x_1 ... x_i x_{n-1} ... x_{i+1}. Throws
  // LayerOutOfRange unless n >= 3 and i <= n - 2.
  Word s_word(std::size_t n, std::size_t layer);

  // Every layer i whose s_i occurs as a factor of w.
  std::vector<std::size_t> mtilde_layers(std::size_t n, Word const& w);

  // The layer i with w in M~_i, if any. Throws MalformedElement if factors of
  // two different layers occur.
  std::optional<std::size_t> mtilde_membership(CycleElement const& e);

  // If w = s^k exactly, returns k (0 for the empty word).
  std::optional<std::size_t> power_of(Word const& w, Word const& s);

  //! The decomposition a (s_i)^k b of an element of M~_i.
  struct MatrixTypeFactor {
    std::size_t layer;
    Word        a;
    std::size_t power;
    Word        b;

    bool operator==(MatrixTypeFactor const&) const = default;
  };

  Word to_word(std::size_t n, MatrixTypeFactor const& f);

  //! Splits an element of M~_i at the first occurrence of s_i, taking the
  //! maximal run of consecutive s_i blocks as the power. Throws
  //! MalformedElement if s_i occurs again after the run.
  std::optional<MatrixTypeFactor> factor(CycleElement const& e);

  //! The tagged union s_i^m (m >= 0) | theta.
  class SandwichEntry {
   public:
    static SandwichEntry theta() noexcept {
      return SandwichEntry();
    }

    static SandwichEntry power(std::size_t m) noexcept {
      SandwichEntry e;
      e._power = m;
      return e;
    }

    bool is_theta() const noexcept {
      return !_power.has_value();
    }

    //! Precondition: !is_theta().
    std::size_t exponent() const {
      return _power.value();
    }

    bool operator==(SandwichEntry const&) const = default;

   private:
    SandwichEntry() = default;
    std::optional<std::size_t> _power;
  };

  // Membership in A_i and B_i, decided from the canonical shape: a is in A_i
  // iff a s_i is reduced with its first s_i at the end; b is in B_i iff
  // s_i b is reduced and factors as (1, 1, b).
  bool in_A(CycleSystem const& sys, std::size_t layer, Word const& a);
  bool in_B(CycleSystem const& sys, std::size_t layer, Word const& b);

  //! A_i from its closed form (three word shapes) for i <= n - 3; for
  //! i = n - 2 from the brute-force enumeration. Sorted in deglex order.
  std::vector<Word> enumerate_A(std::size_t n, std::size_t layer);

  // Closed-form A_i restricted to one shape: `shape` 1 or 2 with the given
  // starting block index s, or shape 3 (the identity, s ignored).
  std::vector<Word> enumerate_A_shape(std::size_t n,
                                      std::size_t layer,
                                      int         shape,
                                      std::size_t s);

  //! All reduced words of C_n of length at most max_length, grouped by
  //! length; each group in deglex order.
  std::vector<std::vector<Word>> reduced_words(CycleSystem const& sys,
                                               std::size_t        max_length);

  struct ABSets {
    std::vector<Word> a;  // deglex order
    std::vector<Word> b;  // deglex order
  };

  //! Collects the a's and b's of every factored element of M~_i among the
  //! given reduced words.
  ABSets collect_AB(CycleSystem const&                    sys,
                    std::vector<std::vector<Word>> const& words,
                    std::size_t                           layer);

  //! Brute force: enumerates every reduced word of length <= length_cap and
  //! collects the factors of the members of M~_i. Throws
  //! std::invalid_argument if length_cap < 3n.
  ABSets enumerate_AB_bruteforce(std::size_t n,
                                 std::size_t layer,
                                 std::size_t length_cap);

  // Default enumeration cap, 4n.
  inline std::size_t default_length_cap(std::size_t n) noexcept {
    return 4 * n;
  }

  //! p_{ba}: Power(m) if NF(s_i b a s_i) = s_i^{m+2}, otherwise Theta.
  //! Throws NotInSets unless b is in B_i and a in A_i.
  SandwichEntry sandwich_entry(CycleSystem const& sys,
                               std::size_t        layer,
                               Word const&        b,
                               Word const&        a);

  struct SandwichMatrix {
    std::size_t                n;
    std::size_t                layer;
    std::vector<Word>          rows;     // B_i, deglex
    std::vector<Word>          columns;  // A_i, deglex
    std::vector<SandwichEntry> entries;  // row-major

    SandwichEntry const& at(std::size_t r, std::size_t c) const {
      return entries.at(r * columns.size() + c);
    }
  };

  SandwichMatrix sandwich_matrix(CycleSystem const& sys,
                                 std::size_t        layer,
                                 ABSets const&      sets);

  // Computes B_i (and A_i) by brute force at the default cap.
  SandwichMatrix sandwich_matrix(std::size_t n, std::size_t layer);

  struct IdealVerdict {
    enum class Kind { not_in_ideal, likely_in_ideal };

    Kind kind = Kind::likely_in_ideal;
    // For not_in_ideal: NF(u e v) is a power of s_i.
    Word u;
    Word v;

    bool not_in_ideal() const noexcept {
      return kind == Kind::not_in_ideal;
    }
  };

  //! Semi-decision for e not in I_i: searches u, v with |u|, |v| <= cap such
  //! that NF(u e v) is a power of s_i.
  IdealVerdict ideal_membership(CycleSystem const&  sys,
                                CycleElement const& e,
                                std::size_t         layer,
                                std::size_t         length_cap);

  //! The rotation x_k -> x_{k+1} (x_n -> x_1), renormalised.
  CycleElement sigma(CycleSystem const& sys, CycleElement const& e);

}  // namespace hk

#endif  // HK_CYCLE_STRUCTURE_HPP_
