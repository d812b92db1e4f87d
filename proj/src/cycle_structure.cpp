#include "hk/cycle_structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hk/errors.hpp"

namespace hk {

  namespace {
    // x_from x_{from±1} ... x_to, ascending or descending.
    void append_block(Word& w, std::size_t from, std::size_t to) {
      if (from <= to) {
        for (std::size_t k = from; k <= to; ++k) {
          w.push_back(static_cast<Letter>(k));
        }
      } else {
        for (std::size_t k = from; k >= to; --k) {
          w.push_back(static_cast<Letter>(k));
        }
      }
    }

    // Calls f for every strictly increasing sequence of `length` values in
    // [low, high].
    void for_each_increasing(
        std::size_t                                         length,
        std::size_t                                         low,
        std::size_t                                         high,
        std::function<void(std::vector<std::size_t> const&)> const& f) {
      std::vector<std::size_t>                 seq;
      std::function<void(std::size_t)> rec = [&](std::size_t next_low) {
        if (seq.size() == length) {
          f(seq);
          return;
        }
        std::size_t const remaining = length - seq.size();
        for (std::size_t k = next_low; k + remaining - 1 <= high; ++k) {
          seq.push_back(k);
          rec(k + 1);
          seq.pop_back();
        }
      };
      rec(low);
    }

    std::size_t find_factor(Word const& w, Word const& s, std::size_t from) {
      auto it = std::search(w.begin() + static_cast<std::ptrdiff_t>(from),
                            w.end(),
                            s.begin(),
                            s.end());
      return static_cast<std::size_t>(it - w.begin());
    }

    void check_layer(std::size_t n, std::size_t layer) {
      if (n < 3 || layer + 2 > n) {
        throw LayerOutOfRange("layer " + std::to_string(layer)
                              + " outside 0.." + std::to_string(n < 2 ? 0 : n - 2)
                              + " for n = " + std::to_string(n));
      }
    }

    std::vector<Word> sorted_deglex(std::set<Word, DeglexLess> const& s) {
      return std::vector<Word>(s.begin(), s.end());
    }

    SandwichEntry entry_unchecked(CycleSystem const& sys,
                                  Word const&        s,
                                  Word const&        b,
                                  Word const&        a) {
      Word const nf = sys.normal_form(concat(concat(s, b), a, s));
      auto const k  = power_of(nf, s);
      if (k.has_value() && *k >= 2) {
        return SandwichEntry::power(*k - 2);
      }
      return SandwichEntry::theta();
    }
  }  // namespace

  CycleElement CycleElement::from_reduced(CycleSystem const& sys, Word w) {
    sys.check_word(w);
    if (!sys.is_reduced(w)) {
      throw std::invalid_argument("word " + to_string(w) + " is not reduced");
    }
    return CycleElement(sys.rank(), std::move(w));
  }

  Word s_word(std::size_t n, std::size_t layer) {
    check_layer(n, layer);
    Word w{static_cast<Letter>(n)};
    if (layer > 0) {
      append_block(w, 1, layer);
    }
    append_block(w, n - 1, layer + 1);
    return w;
  }

  std::vector<std::size_t> mtilde_layers(std::size_t n, Word const& w) {
    std::vector<std::size_t> out;
    if (w.size() < n) {
      return out;
    }
    for (std::size_t i = 0; i + 2 <= n; ++i) {
      if (contains_factor(w, s_word(n, i))) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::optional<std::size_t> mtilde_membership(CycleElement const& e) {
    auto layers = mtilde_layers(e.rank(), e.word());
    if (layers.empty()) {
      return std::nullopt;
    }
    if (layers.size() > 1) {
      throw MalformedElement("reduced word " + to_string(e.word())
                             + " contains factors s_i of two layers");
    }
    return layers.front();
  }

  std::optional<std::size_t> power_of(Word const& w, Word const& s) {
    if (s.empty() || w.size() % s.size() != 0) {
      return std::nullopt;
    }
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] != s[p % s.size()]) {
        return std::nullopt;
      }
    }
    return w.size() / s.size();
  }

  Word to_word(std::size_t n, MatrixTypeFactor const& f) {
    Word const s = s_word(n, f.layer);
    Word       w = f.a;
    for (std::size_t k = 0; k < f.power; ++k) {
      w.insert(w.end(), s.begin(), s.end());
    }
    w.insert(w.end(), f.b.begin(), f.b.end());
    return w;
  }

  std::optional<MatrixTypeFactor> factor(CycleElement const& e) {
    auto const layer = mtilde_membership(e);
    if (!layer) {
      return std::nullopt;
    }
    Word const&       w     = e.word();
    Word const        s     = s_word(e.rank(), *layer);
    std::size_t const first = find_factor(w, s, 0);
    std::size_t       end   = first;
    std::size_t       k     = 0;
    while (end + s.size() <= w.size()
           && std::equal(s.begin(),
                         s.end(),
                         w.begin() + static_cast<std::ptrdiff_t>(end))) {
      end += s.size();
      ++k;
    }
    // Past the first block of the run, the only occurrences allowed are the
    // run's own blocks.
    if (find_factor(w, s, end - s.size() + 1) != w.size()) {
      throw MalformedElement("s_" + std::to_string(*layer)
                             + " occurs outside the maximal run in "
                             + to_string(w));
    }
    MatrixTypeFactor f{*layer,
                       Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(first)),
                       k,
                       Word(w.begin() + static_cast<std::ptrdiff_t>(end), w.end())};
    if (to_word(e.rank(), f) != w) {
      throw MalformedElement("factorisation does not reproduce "
                             + to_string(w));
    }
    return f;
  }

  bool in_A(CycleSystem const& sys, std::size_t layer, Word const& a) {
    Word const s = s_word(sys.rank(), layer);
    Word const w = concat(a, s);
    return sys.is_reduced(w) && find_factor(w, s, 0) == a.size();
  }

  bool in_B(CycleSystem const& sys, std::size_t layer, Word const& b) {
    Word const s = s_word(sys.rank(), layer);
    Word const w = concat(s, b);
    if (!sys.is_reduced(w)) {
      return false;
    }
    try {
      auto const f = factor(CycleElement::from_reduced(sys, w));
      return f && f->a.empty() && f->power == 1 && f->b == b;
    } catch (MalformedElement const&) {
      return false;
    }
  }

  std::vector<Word> enumerate_A_shape(std::size_t n,
                                      std::size_t layer,
                                      int         shape,
                                      std::size_t s) {
    check_layer(n, layer);
    std::vector<Word> out;
    std::size_t const top = layer + 1;  // index of the last block
    if (shape == 3) {
      out.push_back({});
      return out;
    }
    if (s < 1 || s > top) {
      return out;
    }
    if (shape == 1) {
      // k_s <= s (ascending first block), then s+1 < k_{s+1} < ... <= n-1.
      for (std::size_t ks = 1; ks <= s; ++ks) {
        for_each_increasing(
            top - s, s + 2, n - 1, [&](std::vector<std::size_t> const& ks_rest) {
              Word w;
              append_block(w, ks, s);
              for (std::size_t t = 0; t < ks_rest.size(); ++t) {
                append_block(w, ks_rest[t], s + 1 + t);
              }
              out.push_back(std::move(w));
            });
      }
    } else if (shape == 2) {
      // s < k_s < ... < k_{i+1} <= n-1, every block descending.
      for_each_increasing(
          top - s + 1, s + 1, n - 1, [&](std::vector<std::size_t> const& ks) {
            Word w;
            for (std::size_t t = 0; t < ks.size(); ++t) {
              append_block(w, ks[t], s + t);
            }
            out.push_back(std::move(w));
          });
    }
    return out;
  }

  std::vector<Word> enumerate_A(std::size_t n, std::size_t layer) {
    check_layer(n, layer);
    if (layer == n - 2) {
      return enumerate_AB_bruteforce(n, layer, default_length_cap(n)).a;
    }
    std::set<Word, DeglexLess> all;
    all.insert(Word{});
    for (std::size_t s = 1; s <= layer + 1; ++s) {
      for (int shape : {1, 2}) {
        for (auto& w : enumerate_A_shape(n, layer, shape, s)) {
          all.insert(std::move(w));
        }
      }
    }
    return sorted_deglex(all);
  }

  std::vector<std::vector<Word>> reduced_words(CycleSystem const& sys,
                                               std::size_t        max_length) {
    std::vector<std::vector<Word>> by_length{{Word{}}};
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<Word> next;
      for (Word const& w : by_length.back()) {
        for (std::size_t x = 1; x <= sys.rank(); ++x) {
          Word candidate = w;
          candidate.push_back(static_cast<Letter>(x));
          // Reduced words are closed under prefixes, so checking the new
          // last letter suffices.
          if (sys.is_reduced_extension(candidate)) {
            next.push_back(std::move(candidate));
          }
        }
      }
      // Extending a deglex-sorted level letter by letter keeps it sorted.
      by_length.push_back(std::move(next));
    }
    return by_length;
  }

  ABSets collect_AB(CycleSystem const&                    sys,
                    std::vector<std::vector<Word>> const& words,
                    std::size_t                           layer) {
    check_layer(sys.rank(), layer);
    Word const                 s = s_word(sys.rank(), layer);
    std::set<Word, DeglexLess> as, bs;
    for (auto const& level : words) {
      if (level.empty() || level.front().size() < s.size()) {
        continue;
      }
      for (Word const& w : level) {
        if (!contains_factor(w, s)) {
          continue;
        }
        auto const f = factor(CycleElement::from_reduced(sys, w));
        as.insert(f->a);
        bs.insert(f->b);
      }
    }
    return {sorted_deglex(as), sorted_deglex(bs)};
  }

  ABSets enumerate_AB_bruteforce(std::size_t n,
                                 std::size_t layer,
                                 std::size_t length_cap) {
    check_layer(n, layer);
    if (length_cap < 3 * n) {
      throw std::invalid_argument("length cap must be at least 3n");
    }
    CycleSystem const sys(n);
    return collect_AB(sys, reduced_words(sys, length_cap), layer);
  }

  SandwichEntry sandwich_entry(CycleSystem const& sys,
                               std::size_t        layer,
                               Word const&        b,
                               Word const&        a) {
    if (!in_B(sys, layer, b)) {
      throw NotInSets(to_string(b) + " is not in B_" + std::to_string(layer));
    }
    if (!in_A(sys, layer, a)) {
      throw NotInSets(to_string(a) + " is not in A_" + std::to_string(layer));
    }
    return entry_unchecked(sys, s_word(sys.rank(), layer), b, a);
  }

  SandwichMatrix sandwich_matrix(CycleSystem const& sys,
                                 std::size_t        layer,
                                 ABSets const&      sets) {
    SandwichMatrix m{sys.rank(), layer, sets.b, sets.a, {}};
    Word const     s = s_word(sys.rank(), layer);
    m.entries.reserve(m.rows.size() * m.columns.size());
    for (Word const& b : m.rows) {
      for (Word const& a : m.columns) {
        m.entries.push_back(entry_unchecked(sys, s, b, a));
      }
    }
    return m;
  }

  SandwichMatrix sandwich_matrix(std::size_t n, std::size_t layer) {
    CycleSystem const sys(n);
    return sandwich_matrix(
        sys, layer, enumerate_AB_bruteforce(n, layer, default_length_cap(n)));
  }

  IdealVerdict ideal_membership(CycleSystem const&  sys,
                                CycleElement const& e,
                                std::size_t         layer,
                                std::size_t         length_cap) {
    Word const s = s_word(sys.rank(), layer);

    // Every NF(u e v) with |u|, |v| <= cap: first grow on the left, then grow
    // the whole left set on the right. Each node remembers how it was built.
    struct Node {
      Word        word;
      std::size_t parent;
      Letter      letter;
      bool        left;
    };
    std::vector<Node>                                 nodes{{e.word(), 0, 0, true}};
    std::unordered_map<Word, std::size_t, WordHash> seen{{e.word(), 0}};

    auto witness = [&](std::size_t k) {
      IdealVerdict verdict;
      verdict.kind = IdealVerdict::Kind::not_in_ideal;
      for (; k != 0; k = nodes[k].parent) {
        if (nodes[k].left) {
          verdict.u.push_back(nodes[k].letter);
        } else {
          verdict.v.insert(verdict.v.begin(), nodes[k].letter);
        }
      }
      return verdict;
    };
    auto is_target = [&s](Word const& w) {
      auto k = power_of(w, s);
      return k.has_value() && *k >= 1;
    };

    if (is_target(e.word())) {
      return witness(0);
    }
    for (bool left : {true, false}) {
      // The right phase starts from the whole left set.
      std::size_t level_begin = 0;
      for (std::size_t depth = 0; depth < length_cap; ++depth) {
        std::size_t const level_end = nodes.size();
        for (std::size_t k = level_begin; k < level_end; ++k) {
          for (std::size_t x = 1; x <= sys.rank(); ++x) {
            Word w = nodes[k].word;
            if (left) {
              w.insert(w.begin(), static_cast<Letter>(x));
            } else {
              w.push_back(static_cast<Letter>(x));
            }
            w = sys.normal_form(std::move(w));
            if (seen.contains(w)) {
              continue;
            }
            seen.emplace(w, nodes.size());
            nodes.push_back({std::move(w), k, static_cast<Letter>(x), left});
            if (is_target(nodes.back().word)) {
              return witness(nodes.size() - 1);
            }
          }
        }
        level_begin = level_end;
      }
    }
    return {};
  }

  CycleElement sigma(CycleSystem const& sys, CycleElement const& e) {
    Word w = e.word();
    for (Letter& x : w) {
      x = x == sys.rank() ? Letter{1} : static_cast<Letter>(x + 1);
    }
    return CycleElement(sys, w);
  }

}  // namespace hk
