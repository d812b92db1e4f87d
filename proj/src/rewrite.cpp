#include "hk/rewrite.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace hk {

  void apply_redex(Word& w, Redex const& r) {
    auto first = w.begin() + static_cast<std::ptrdiff_t>(r.position);
    auto last  = first + static_cast<std::ptrdiff_t>(r.length);
    if (r.replacement.size() == r.length) {
      std::copy(r.replacement.begin(), r.replacement.end(), first);
    } else {
      auto it = w.erase(first, last);
      w.insert(it, r.replacement.begin(), r.replacement.end());
    }
  }

  CycleSystem::CycleSystem(std::size_t n) : _n(n) {
    if (n < 3 || n > max_rank) {
      throw std::invalid_argument("cycle length must lie in [3, "
                                  + std::to_string(max_rank) + "], found "
                                  + std::to_string(n));
    }
  }

  void CycleSystem::check_word(Word const& w) const {
    for (Letter x : w) {
      if (x < 1 || x > _n) {
        throw std::invalid_argument("letter x" + std::to_string(x)
                                    + " outside the rank "
                                    + std::to_string(_n));
      }
    }
  }

  std::size_t CycleSystem::block_commute_length(Word const& w,
                                                std::size_t position) const {
    if (w[position] != _n) {
      return 0;
    }
    // x_n x_1 x_2 ... x_i x_j: only the maximal ascending run can be followed
    // by a j > i + 1.
    std::size_t i = 0;
    while (position + 1 + i < w.size() && w[position + 1 + i] == i + 1) {
      ++i;
    }
    if (i == 0 || position + 1 + i >= w.size()) {
      return 0;
    }
    std::size_t const j = w[position + 1 + i];
    return (i + 1 < j && j + 1 < _n) ? i + 2 : 0;
  }

  std::size_t CycleSystem::absorb_end(Word const& w,
                                      std::size_t position,
                                      Letter      forbidden) const {
    Letter const x = w[position];
    for (std::size_t t = position + 1; t < w.size(); ++t) {
      if (w[t] == x) {
        return t > position + 1 ? t : 0;
      }
      if (w[t] == forbidden) {
        return 0;
      }
    }
    return 0;
  }

  void CycleSystem::redexes_at(Word const&         w,
                               std::size_t         p,
                               std::vector<Redex>& out,
                               bool                first_only) const {
    std::size_t const L = w.size();
    Letter const      x = w[p];

    if (p + 1 < L && w[p + 1] == x) {
      out.push_back({RuleFamily::square, p, 2, {x}});
      if (first_only) {
        return;
      }
    }
    if (p + 1 < L) {
      std::size_t const j = x, i = w[p + 1];
      if (j > i + 1 && j - i + 1 < _n) {
        out.push_back({RuleFamily::far_commute, p, 2, {w[p + 1], x}});
        if (first_only) {
          return;
        }
      }
    }
    if (std::size_t len = block_commute_length(w, p); len != 0) {
      Word rep;
      rep.reserve(len);
      rep.push_back(w[p + len - 1]);
      rep.insert(rep.end(),
                 w.begin() + static_cast<std::ptrdiff_t>(p),
                 w.begin() + static_cast<std::ptrdiff_t>(p + len - 1));
      out.push_back({RuleFamily::block_commute, p, len, std::move(rep)});
      if (first_only) {
        return;
      }
    }
    if (std::size_t q = absorb_end(w, p, pred(x)); q != 0) {
      out.push_back({RuleFamily::left_absorb,
                     p,
                     q - p + 1,
                     Word(w.begin() + static_cast<std::ptrdiff_t>(p),
                          w.begin() + static_cast<std::ptrdiff_t>(q))});
      if (first_only) {
        return;
      }
    }
    if (std::size_t q = absorb_end(w, p, succ(x)); q != 0) {
      out.push_back({RuleFamily::right_absorb,
                     p,
                     q - p + 1,
                     Word(w.begin() + static_cast<std::ptrdiff_t>(p + 1),
                          w.begin() + static_cast<std::ptrdiff_t>(q + 1))});
    }
  }

  std::optional<Redex> CycleSystem::find_redex(Word const& w) const {
    std::vector<Redex> found;
    for (std::size_t p = 0; p < w.size(); ++p) {
      redexes_at(w, p, found, true);
      if (!found.empty()) {
        return std::move(found.front());
      }
    }
    return std::nullopt;
  }

  std::vector<Redex> CycleSystem::all_redexes(Word const& w) const {
    std::vector<Redex> found;
    for (std::size_t p = 0; p < w.size(); ++p) {
      redexes_at(w, p, found, false);
    }
    return found;
  }

  Word CycleSystem::normal_form(Word w) const {
    check_word(w);
    while (auto r = find_redex(w)) {
#ifndef NDEBUG
      Word const before = w;
      apply_redex(w, *r);
      assert(deglex_less(w, before));
#else
      apply_redex(w, *r);
#endif
    }
    return w;
  }

  Word CycleSystem::random_normal_form(Word w, std::mt19937_64& rng) const {
    for (auto all = all_redexes(w); !all.empty(); all = all_redexes(w)) {
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      apply_redex(w, all[pick(rng)]);
    }
    return w;
  }

  bool CycleSystem::is_reduced_extension(Word const& w) const {
    std::size_t const L = w.size();
    if (L < 2) {
      return true;
    }
    std::size_t const q = L - 1;
    Letter const      x = w[q];
    // Families 1 and 2 on the last two letters.
    if (w[q - 1] == x) {
      return false;
    }
    if (std::size_t j = w[q - 1]; j > x + 1u && j - x + 1 < _n) {
      return false;
    }
    // Family 3: x_n x_1 ... x_i x_j with the x_j last.
    if (x + 1u < _n) {
      std::size_t const i = w[q - 1];
      if (i + 1 < x && i <= q - 1 && w[q - 1 - i] == _n) {
        bool run = true;
        for (std::size_t t = 1; t <= i && run; ++t) {
          run = w[q - 1 - i + t] == t;
        }
        if (run) {
          return false;
        }
      }
    }
    // Families 4 and 5: scan back to the previous occurrence of x.
    bool saw_pred = false, saw_succ = false;
    for (std::size_t t = q; t-- > 0;) {
      if (w[t] == x) {
        return t + 1 == q ? true : (saw_pred && saw_succ);
      }
      saw_pred = saw_pred || w[t] == pred(x);
      saw_succ = saw_succ || w[t] == succ(x);
    }
    return true;
  }

}  // namespace hk
