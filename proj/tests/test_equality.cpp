#include <doctest.h>

#include "hk/graph.hpp"
#include "hk/hecke_kiselman.hpp"
#include "hk/rewrite.hpp"

using namespace hk;

namespace {

  Word w(std::initializer_list<int> letters) {
    Word out;
    for (int x : letters) {
      out.push_back(static_cast<Letter>(x));
    }
    return out;
  }

  bool contains(std::vector<Relation> const& rels, Word const& l, Word const& r) {
    for (auto const& rel : rels) {
      if ((rel.lhs == l && rel.rhs == r) || (rel.lhs == r && rel.rhs == l)) {
        return true;
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("generic relations") {
  auto const one = generic_relations(parse_graph("a"));
  CHECK(one.size() == 1);
  CHECK(contains(one, w({1, 1}), w({1})));

  auto const two = generic_relations(parse_graph("a\nb"));
  CHECK(two.size() == 3);
  CHECK(contains(two, w({1, 2}), w({2, 1})));

  auto const arrow = generic_relations(parse_graph("a -> b"));
  CHECK(arrow.size() == 4);
  CHECK(contains(arrow, w({1, 2, 1}), w({1, 2})));
  CHECK(contains(arrow, w({2, 1, 2}), w({1, 2})));
  CHECK_FALSE(contains(arrow, w({1, 2}), w({2, 1})));

  // Reversed arrow: the absorbing word follows the arrow.
  auto const back = generic_relations(parse_graph("b\na -> b"));
  CHECK(contains(back, w({2, 1, 2}), w({2, 1})));
}

TEST_CASE("equal_in_hk examples") {
  auto const g = parse_graph("a -> b");
  auto const same = equal_in_hk(w({1, 2}), w({1, 2}), g, {});
  CHECK(same.equal());
  CHECK(same.trace.empty());

  auto const rels = generic_relations(g);
  auto const v    = equal_in_hk(w({1, 2, 1}), w({2, 1, 2}), rels, {1000, 6});
  REQUIRE(v.equal());
  CHECK(verify_trace(w({1, 2, 1}), w({2, 1, 2}), rels, v.trace));

  auto const c3   = OrientedGraph::cycle(3);
  auto const sys  = CycleSystem(3);
  Word const u    = w({1, 3, 2, 1});
  auto const to   = equal_in_hk(u, sys.normal_form(u), c3, {100000, 7});
  CHECK(to.equal());
}

TEST_CASE("equal_in_hk never claims distinct words equal") {
  auto const g    = parse_graph("a -> b");
  auto const rels = generic_relations(g);
  auto const v    = equal_in_hk(w({1, 2}), w({2, 1}), rels, {100000, 8});
  CHECK_FALSE(v.equal());
  CHECK(v.kind == EqualityVerdict::Kind::unknown);
}

TEST_CASE("tiny caps give Unknown") {
  auto const c3 = OrientedGraph::cycle(3);
  auto const v  = equal_in_hk(w({1, 1, 1}), w({1}), c3, {1, 3});
  CHECK_FALSE(v.equal());
}

TEST_CASE("verify_trace rejects tampered traces") {
  auto const g    = parse_graph("a -> b");
  auto const rels = generic_relations(g);
  auto       v    = equal_in_hk(w({1, 2, 1, 1}), w({1, 2}), rels, {1000, 6});
  REQUIRE(v.equal());
  REQUIRE_FALSE(v.trace.empty());
  CHECK(verify_trace(w({1, 2, 1, 1}), w({1, 2}), rels, v.trace));
  CHECK_FALSE(verify_trace(w({1, 2, 1, 1}), w({2, 1}), rels, v.trace));
  auto bad = v.trace;
  bad.front().position += 1;
  CHECK_FALSE(verify_trace(w({1, 2, 1, 1}), w({1, 2}), rels, bad));
}

TEST_CASE("relation search agrees with C_n normal forms") {
  for (std::size_t n : {3, 4}) {
    auto const        g    = OrientedGraph::cycle(n);
    auto const        rels = generic_relations(g);
    CycleSystem const sys(n);
    for (Word const& u : all_words(n, 4)) {
      Word const nf = sys.normal_form(u);
      auto const v  = equal_in_hk(u, nf, rels, {200000, u.size() + 2});
      CAPTURE(to_string(u));
      CHECK(v.equal());
      CHECK(verify_trace(u, nf, rels, v.trace));
    }
  }
}

TEST_CASE("words with equal normal forms are joined by relations") {
  auto const        g    = OrientedGraph::cycle(3);
  auto const        rels = generic_relations(g);
  CycleSystem const sys(3);
  auto const        ws = all_words(3, 3);
  for (Word const& u : ws) {
    for (Word const& v : ws) {
      if (sys.normal_form(u) == sys.normal_form(v)) {
        auto const verdict = equal_in_hk(u, v, rels, {200000, 5});
        CHECK(verdict.equal());
      }
    }
  }
}
