#ifndef HK_REWRITE_HPP_
#define HK_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hk/word.hpp"

namespace hk {

  //! The five reduction families of the Groebner basis of K[C_n], numbered as
  //! in their original statement.
  enum class RuleFamily : std::uint8_t {
    square        = 1,  // x_i x_i -> x_i
    far_commute   = 2,  // x_j x_i -> x_i x_j,  1 < j - i < n - 1
    block_commute = 3,  // x_n (x_1..x_i) x_j -> x_j x_n (x_1..x_i),  i+1 < j < n-1
    left_absorb   = 4,  // x_i u x_i -> x_i u,  u != 1, no x_i or x_{i-1} in u
    right_absorb  = 5   // x_i v x_i -> v x_i,  v != 1, no x_i or x_{i+1} in v
  };

  //! An occurrence of a leading term: the factor w[position, position +
  //! length) is replaced by `replacement`.
  struct Redex {
    RuleFamily  family;
    std::size_t position;
    std::size_t length;
    Word        replacement;
  };

  // Replaces the redex factor in place.
  void apply_redex(Word& w, Redex const& r);

  //! The confluent reduction system for the Hecke-Kiselman monoid C_n of the
  //! oriented cycle x_1 -> x_2 -> ... -> x_n -> x_1.
  //!
  //! Every rule strictly decreases words in deglex order, so rewriting
  //! terminates; reduced words are in bijection with the elements of C_n.
  class CycleSystem {
   public:
    //! Throws std::invalid_argument unless 3 <= n <= max_rank.
    explicit CycleSystem(std::size_t n);

    std::size_t rank() const noexcept {
      return _n;
    }

    //! The leftmost redex; among those starting at the same position the one
    //! of lowest family. Families 4 and 5 match the shortest factor.
    std::optional<Redex> find_redex(Word const& w) const;

    //! Every redex of w, ordered by position then family.
    std::vector<Redex> all_redexes(Word const& w) const;

    //! Rewrites with the leftmost strategy until no redex is left.
    Word normal_form(Word w) const;

    //! Normal form of u * v where u and v are arbitrary words.
    Word multiply(Word const& u, Word const& v) const {
      return normal_form(concat(u, v));
    }

    //! Rewrites choosing uniformly among all redexes at every step.
    Word random_normal_form(Word w, std::mt19937_64& rng) const;

    bool is_reduced(Word const& w) const {
      return !find_redex(w).has_value();
    }

    //! True iff no redex ends at the last letter of w. For w = u x with u
    //! reduced this is equivalent to is_reduced(w).
    bool is_reduced_extension(Word const& w) const;

    //! Throws std::invalid_argument if a letter is outside 1..n.
    void check_word(Word const& w) const;

   private:
    // Index arithmetic on the cycle: pred(1) = n, succ(n) = 1.
    Letter pred(Letter i) const noexcept {
      return i == 1 ? static_cast<Letter>(_n) : static_cast<Letter>(i - 1);
    }
    Letter succ(Letter i) const noexcept {
      return i == _n ? Letter{1} : static_cast<Letter>(i + 1);
    }

    // Appends the redexes starting at `position` in family order; with
    // first_only, stops after the first one found.
    void redexes_at(Word const&         w,
                    std::size_t         position,
                    std::vector<Redex>& out,
                    bool                first_only) const;

    // Redex of family 3 starting at `position`, if any; returns the length of
    // the matched factor or 0.
    std::size_t block_commute_length(Word const& w, std::size_t position) const;

    // Position of the next occurrence of w[position] if the factor between
    // them is nonempty and avoids `forbidden`; otherwise 0.
    std::size_t absorb_end(Word const& w,
                           std::size_t position,
                           Letter      forbidden) const;

    std::size_t _n;
  };

}  // namespace hk

#endif  // HK_REWRITE_HPP_
