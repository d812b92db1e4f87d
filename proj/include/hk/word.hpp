#ifndef HK_WORD_HPP_
#define HK_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

  // Generators are numbered from 1, as x_1, ..., x_n.
  using Letter = std::uint8_t;

  // An element of the free monoid on x_1, ..., x_n. The empty word is the
  // identity.
  using Word = std::vector<Letter>;

  inline constexpr std::size_t max_rank = 255;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      // FNV-1a
      std::size_t h = 1469598103934665603ULL;
      for (Letter x : w) {
        h ^= x;
        h *= 1099511628211ULL;
      }
      return h;
    }
  };

  // Degree-lexicographic order with x_1 < x_2 < ... < x_n.
  bool deglex_less(Word const& u, Word const& v) noexcept;

  struct DeglexLess {
    bool operator()(Word const& u, Word const& v) const noexcept {
      return deglex_less(u, v);
    }
  };

  Word concat(Word const& u, Word const& v);
  Word concat(Word const& u, Word const& v, Word const& w);

  // Number of occurrences of x in w.
  std::size_t count(Word const& w, Letter x) noexcept;

  // True if `factor` occurs contiguously in w.
  bool contains_factor(Word const& w, Word const& factor);

  // Renders a word as space-separated `x<k>` tokens; the identity renders as
  // "1".
  std::string to_string(Word const& w);

  // Parses whitespace-separated tokens `x<k>` or `k`. The empty string and the
  // single token "1" both denote the identity. Throws SyntaxError on bad
  // tokens or indices outside 1..rank.
  Word parse_word(std::string_view text, std::size_t rank);

  // Every word of length at most max_length over x_1..x_rank, in deglex
  // order.
  std::vector<Word> all_words(std::size_t rank, std::size_t max_length);

}  // namespace hk

#endif  // HK_WORD_HPP_
