#include <doctest.h>

#include <algorithm>
#include <set>

#include "hk/cycle_structure.hpp"
#include "hk/errors.hpp"
#include "hk/poly.hpp"

using namespace hk;

namespace {

  Word w(std::initializer_list<int> letters) {
    Word out;
    for (int x : letters) {
      out.push_back(static_cast<Letter>(x));
    }
    return out;
  }

  std::size_t first_occurrence(Word const& word, Word const& factor) {
    auto const it = std::search(word.begin(), word.end(), factor.begin(), factor.end());
    return static_cast<std::size_t>(it - word.begin());
  }

  // a is in A_i iff a s_i is reduced and s_i first occurs at the end.
  bool oracle_in_A(CycleSystem const& sys, std::size_t i, Word const& a) {
    Word const s  = s_word(sys.rank(), i);
    Word const as = concat(a, s);
    return sys.is_reduced(as) && first_occurrence(as, s) == a.size();
  }

  // Reverses the word and maps x_k to x_{c-k}, indices mod n in 1..n; an
  // anti-automorphism of C_n for every c.
  Word reflect(Word word, std::size_t n, long c) {
    std::reverse(word.begin(), word.end());
    for (Letter& x : word) {
      long k = ((c - static_cast<long>(x)) % static_cast<long>(n) + static_cast<long>(n))
               % static_cast<long>(n);
      x = static_cast<Letter>(k == 0 ? static_cast<long>(n) : k);
    }
    return word;
  }

  long naive_binomial(long top, long bottom) {
    if (bottom < 0 || top < bottom) {
      return 0;
    }
    long out = 1;
    for (long k = 1; k <= bottom; ++k) {
      out = out * (top - bottom + k) / k;
    }
    return out;
  }

}  // namespace

TEST_CASE("s_word") {
  CHECK(s_word(3, 0) == w({3, 2, 1}));
  CHECK(s_word(3, 1) == w({3, 1, 2}));
  CHECK(s_word(4, 1) == w({4, 1, 3, 2}));
  CHECK(s_word(5, 3) == w({5, 1, 2, 3, 4}));
  CHECK_THROWS_AS(s_word(3, 2), LayerOutOfRange);
  for (std::size_t n = 3; n <= 9; ++n) {
    CycleSystem const sys(n);
    for (std::size_t i = 0; i + 2 <= n; ++i) {
      CHECK(s_word(n, i).size() == n);
      CHECK(sys.is_reduced(s_word(n, i)));
    }
  }
}

TEST_CASE("M~ membership examples") {
  CycleSystem const sys(3);
  CHECK(mtilde_membership(CycleElement(sys, w({3, 2, 1}))) == 0u);
  CHECK_FALSE(mtilde_membership(CycleElement(sys, w({1}))).has_value());
  CHECK(mtilde_membership(CycleElement(sys, w({2, 1, 3, 2, 1}))) == 0u);
}

TEST_CASE("CycleElement") {
  CycleSystem const sys(3);
  CHECK(CycleElement(sys, w({1, 1, 2})).word() == w({1, 2}));
  CHECK(CycleElement::from_reduced(sys, w({1, 2})).rank() == 3);
  CHECK_THROWS(CycleElement::from_reduced(sys, w({1, 1})));
}

TEST_CASE("factor examples") {
  CycleSystem const sys(3);
  auto const        pure = factor(CycleElement(sys, w({3, 2, 1, 3, 2, 1})));
  REQUIRE(pure);
  CHECK(*pure == MatrixTypeFactor{0, {}, 2, {}});
  auto const left = factor(CycleElement(sys, w({2, 1, 3, 2, 1})));
  REQUIRE(left);
  CHECK(*left == MatrixTypeFactor{0, w({2, 1}), 1, {}});
  CHECK_FALSE(factor(CycleElement(sys, w({1}))).has_value());
}

TEST_CASE("layers are unique and factorizations round-trip") {
  for (std::size_t n : {3, 4, 5}) {
    CycleSystem const sys(n);
    for (auto const& level : reduced_words(sys, n == 5 ? 12 : 4 * n)) {
      for (Word const& u : level) {
        CAPTURE(to_string(u));
        CHECK(mtilde_layers(n, u).size() <= 1);
        auto const f = factor(CycleElement::from_reduced(sys, u));
        CHECK(f.has_value() == !mtilde_layers(n, u).empty());
        if (f) {
          Word const s = s_word(n, f->layer);
          CHECK(to_word(n, *f) == u);
          CHECK_FALSE(contains_factor(f->a, s));
          CHECK_FALSE(contains_factor(f->b, s));
          CHECK(f->power >= 1);
          CHECK(in_A(sys, f->layer, f->a));
          CHECK(in_B(sys, f->layer, f->b));
        }
      }
    }
  }
}

TEST_CASE("enumerate_A examples") {
  CHECK(enumerate_A(3, 0) == std::vector<Word>{{}, w({1}), w({2, 1})});
  CHECK(enumerate_A(5, 1).size() == 10);
  for (std::size_t n = 3; n <= 7; ++n) {
    CHECK(enumerate_A(n, 0).size() == n);
  }
  CHECK_THROWS_AS(enumerate_A(4, 3), LayerOutOfRange);
}

TEST_CASE("closed-form A_i matches the membership oracle") {
  for (std::size_t n = 3; n <= 6; ++n) {
    CycleSystem const sys(n);
    auto const        levels = reduced_words(sys, 2 * n);
    for (std::size_t i = 0; i + 2 <= n; ++i) {
      std::vector<Word> expected;
      for (auto const& level : levels) {
        for (Word const& u : level) {
          if (oracle_in_A(sys, i, u)) {
            expected.push_back(u);
          }
        }
      }
      CAPTURE(n);
      CAPTURE(i);
      CHECK(enumerate_A(n, i) == expected);
      CHECK(expected.size() == static_cast<std::size_t>(naive_binomial(n, i + 1)));
    }
  }
}

TEST_CASE("per-shape counts of A_i") {
  for (std::size_t n = 3; n <= 9; ++n) {
    for (std::size_t i = 0; i + 3 <= n; ++i) {
      std::set<Word> all;
      CHECK(enumerate_A_shape(n, i, 3, 0) == std::vector<Word>{Word{}});
      all.insert(Word{});
      for (std::size_t s = 1; s <= i + 1; ++s) {
        auto const one = enumerate_A_shape(n, i, 1, s);
        auto const two = enumerate_A_shape(n, i, 2, s);
        long const ls = static_cast<long>(s), ln = static_cast<long>(n),
                   li = static_cast<long>(i);
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(s);
        CHECK(one.size()
              == static_cast<std::size_t>(ls * naive_binomial(ln - ls - 2, li - ls + 1)));
        CHECK(two.size()
              == static_cast<std::size_t>(naive_binomial(ln - ls - 1, li - ls + 2)));
        all.insert(one.begin(), one.end());
        all.insert(two.begin(), two.end());
      }
      auto const a = enumerate_A(n, i);
      CHECK(std::set<Word>(a.begin(), a.end()) == all);
      CHECK(a.size() == all.size());
    }
  }
}

TEST_CASE("brute-force enumeration") {
  auto const s30 = enumerate_AB_bruteforce(3, 0, 12);
  CHECK(s30.a == std::vector<Word>{{}, w({1}), w({2, 1})});
  CHECK(s30.b == std::vector<Word>{{}, w({3}), w({3, 2})});
  for (std::size_t i : {0, 1}) {
    auto const s = enumerate_AB_bruteforce(3, i, 12);
    CHECK(s.a.size() == s.b.size());
  }
  CHECK(enumerate_AB_bruteforce(4, 1, 16).a.size() == 6);
  CHECK_THROWS_AS(enumerate_AB_bruteforce(4, 1, 11), std::invalid_argument);
}

TEST_CASE("B_i is the reflection of A_i") {
  for (std::size_t n = 3; n <= 7; ++n) {
    CycleSystem const sys(n);
    auto const        levels = reduced_words(sys, 4 * n);
    for (std::size_t i = 0; i + 2 <= n; ++i) {
      auto const        sets = collect_AB(sys, levels, i);
      std::vector<Word> image;
      for (Word const& a : sets.a) {
        image.push_back(sys.normal_form(reflect(a, n, static_cast<long>(i) + 1)));
      }
      std::sort(image.begin(), image.end(), DeglexLess{});
      CAPTURE(n);
      CAPTURE(i);
      CHECK(image == sets.b);
    }
  }
}

TEST_CASE("sandwich entries") {
  CycleSystem const sys(3);
  CHECK(sandwich_entry(sys, 0, {}, {}) == SandwichEntry::power(0));
  CHECK(sandwich_entry(sys, 0, {}, w({1})) == SandwichEntry::power(0));
  CHECK(sandwich_entry(sys, 0, w({3, 2}), w({2, 1})) == SandwichEntry::power(1));
  CHECK(sandwich_entry(sys, 0, w({3}), w({1})).is_theta());
  CHECK_THROWS_AS(sandwich_entry(sys, 0, w({1}), {}), NotInSets);
  CHECK_THROWS_AS(sandwich_entry(sys, 0, {}, w({3})), NotInSets);
}

TEST_CASE("sandwich matrices") {
  auto const m30 = sandwich_matrix(3, 0);
  CHECK(m30.rows == std::vector<Word>{{}, w({3}), w({3, 2})});
  CHECK(m30.columns == std::vector<Word>{{}, w({1}), w({2, 1})});
  auto const p = SandwichEntry::power(0), q = SandwichEntry::power(1),
             t = SandwichEntry::theta();
  CHECK(m30.entries == std::vector<SandwichEntry>{p, p, t, p, t, q, t, q, q});
  CHECK(det(lift_sandwich(m30)) == Poly{0, -1, -1});

  CHECK(sandwich_matrix(3, 1).rows.size() == 3);
  auto const m41 = sandwich_matrix(4, 1);
  CHECK(m41.rows.size() == 6);
  CHECK(m41.columns.size() == 6);
  CHECK(det(lift_sandwich(m41)) == Poly{0, 0, 0, 1, 3, 3, 1});
}

TEST_CASE("product law for n = 4") {
  CycleSystem const sys(4);
  auto const        levels = reduced_words(sys, 12);
  for (std::size_t i = 0; i + 2 <= 4; ++i) {
    std::vector<MatrixTypeFactor> elements;
    for (auto const& level : levels) {
      for (Word const& u : level) {
        auto f = factor(CycleElement::from_reduced(sys, u));
        if (f && f->layer == i && f->power == 1 && f->a.size() + f->b.size() <= 4) {
          elements.push_back(*f);
        }
      }
    }
    for (auto const& e : elements) {
      for (auto const& f : elements) {
        Word const product = sys.multiply(to_word(4, e), to_word(4, f));
        auto const entry   = sandwich_entry(sys, i, e.b, f.a);
        if (entry.is_theta()) {
          CHECK_FALSE(contains_factor(product, s_word(4, i)));
        } else {
          CHECK(product
                == to_word(4, {i, e.a, e.power + entry.exponent() + f.power, f.b}));
        }
      }
    }
  }
}

TEST_CASE("ideal membership examples") {
  CycleSystem const sys(3);
  auto const        pure = ideal_membership(sys, CycleElement(sys, s_word(3, 0)), 0, 6);
  CHECK(pure.not_in_ideal());
  CHECK(pure.u.empty());
  CHECK(pure.v.empty());

  CycleElement const x1(sys, w({1}));
  auto const         v = ideal_membership(sys, x1, 0, 6);
  REQUIRE(v.not_in_ideal());
  CHECK(power_of(sys.normal_form(concat(v.u, x1.word(), v.v)), s_word(3, 0)).has_value());

  // I_{n-2} is empty: even s_0 reaches s_1, via x3 x1 s_0 = s_1.
  CycleElement const s0(sys, s_word(3, 0));
  auto const         top = ideal_membership(sys, s0, 1, 6);
  REQUIRE(top.not_in_ideal());
  CHECK(power_of(sys.normal_form(concat(top.u, s0.word(), top.v)), s_word(3, 1)).has_value());
  CHECK(sys.normal_form(concat(w({3, 1}), s0.word())) == s_word(3, 1));

  // M_1 lies in I_0, so s_1 never reaches s_0.
  CHECK_FALSE(ideal_membership(sys, CycleElement(sys, s_word(3, 1)), 0, 6).not_in_ideal());
  CycleSystem const c4(4);
  CHECK_FALSE(ideal_membership(c4, CycleElement(c4, s_word(4, 1)), 0, 8).not_in_ideal());
  CHECK_FALSE(ideal_membership(c4, CycleElement(c4, s_word(4, 2)), 1, 8).not_in_ideal());
}

TEST_CASE("M~_{n-2} is a two-sided ideal") {
  for (std::size_t n : {3, 4}) {
    CycleSystem const sys(n);
    std::size_t const top = n - 2;
    for (auto const& level : reduced_words(sys, 3 * n)) {
      for (Word const& u : level) {
        if (mtilde_layers(n, u) != std::vector<std::size_t>{top}) {
          continue;
        }
        for (Letter x = 1; x <= n; ++x) {
          CHECK(mtilde_layers(n, sys.multiply(Word{x}, u))
                == std::vector<std::size_t>{top});
          CHECK(mtilde_layers(n, sys.multiply(u, Word{x}))
                == std::vector<std::size_t>{top});
        }
      }
    }
  }
}

TEST_CASE("complement of M~ is finite") {
  struct Expected {
    std::size_t n, size, longest;
  };
  for (auto [n, size, last] : {Expected{3, 16, 4}, Expected{4, 66, 8}}) {
    CycleSystem const sys(n);
    std::size_t       total = 0, longest = 0;
    for (auto const& level : reduced_words(sys, 5 * n)) {
      for (Word const& u : level) {
        if (mtilde_layers(n, u).empty()) {
          ++total;
          longest = std::max(longest, u.size());
        }
      }
    }
    CHECK(total == size);
    CHECK(longest == last);
  }
}

TEST_CASE("sigma") {
  CycleSystem const sys(3);
  CHECK(sigma(sys, CycleElement(sys, w({1}))).word() == w({2}));
  CHECK(sigma(sys, CycleElement(sys, {})).word().empty());
  CHECK(sigma(sys, CycleElement(sys, w({3}))).word() == w({1}));
  for (std::size_t n : {3, 4, 5}) {
    CycleSystem const c(n);
    for (auto const& level : reduced_words(c, 6)) {
      for (Word const& u : level) {
        CycleElement e = CycleElement::from_reduced(c, u);
        for (std::size_t k = 0; k < n; ++k) {
          e = sigma(c, e);
        }
        CHECK(e.word() == u);
      }
    }
  }
}

TEST_CASE("sigma is a homomorphism") {
  CycleSystem const sys(4);
  auto const        ws = all_words(4, 3);
  for (Word const& u : ws) {
    for (Word const& v : ws) {
      auto const su = sigma(sys, CycleElement(sys, u)).word();
      auto const sv = sigma(sys, CycleElement(sys, v)).word();
      CHECK(sys.multiply(su, sv) == sigma(sys, CycleElement(sys, concat(u, v))).word());
    }
  }
}
