#include "hk/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hk/errors.hpp"

namespace hk {

  bool deglex_less(Word const& u, Word const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

  Word concat(Word const& u, Word const& v) {
    Word out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  Word concat(Word const& u, Word const& v, Word const& w) {
    Word out;
    out.reserve(u.size() + v.size() + w.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    out.insert(out.end(), w.begin(), w.end());
    return out;
  }

  std::size_t count(Word const& w, Letter x) noexcept {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
  }

  bool contains_factor(Word const& w, Word const& factor) {
    return std::search(w.begin(), w.end(), factor.begin(), factor.end())
           != w.end();
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (p != 0) {
        out += ' ';
      }
      out += 'x';
      out += std::to_string(w[p]);
    }
    return out;
  }

  Word parse_word(std::string_view text, std::size_t rank) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) {
      tokens.push_back(std::move(tok));
    }
    if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "1")) {
      return {};
    }
    Word out;
    out.reserve(tokens.size());
    for (auto const& tok : tokens) {
      std::string_view digits = tok;
      if (!digits.empty() && digits.front() == 'x') {
        digits.remove_prefix(1);
      }
      std::size_t k = 0;
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (digits.empty() || ec != std::errc{}
          || ptr != digits.data() + digits.size()) {
        throw SyntaxError("invalid word token '" + tok + "'");
      }
      if (k < 1 || k > rank) {
        throw SyntaxError("generator index in '" + tok
                          + "' outside 1.." + std::to_string(rank));
      }
      out.push_back(static_cast<Letter>(k));
    }
    return out;
  }

  std::vector<Word> all_words(std::size_t rank, std::size_t max_length) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::size_t const level_end = out.size();
      for (std::size_t p = level_begin; p < level_end; ++p) {
        for (std::size_t x = 1; x <= rank; ++x) {
          Word w = out[p];
          w.push_back(static_cast<Letter>(x));
          out.push_back(std::move(w));
        }
      }
      level_begin = level_end;
    }
    return out;
  }

}  // namespace hk
