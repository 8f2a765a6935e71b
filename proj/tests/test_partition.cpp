#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qfock/partition.hpp"

using namespace qfock;

namespace {
Partition P(std::vector<long> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("partition basics and validation") {
  CHECK(P({5, 2}).size() == 7);
  CHECK(P({}).size() == 0);
  CHECK(P({3, 3, 1}).length() == 3);
  CHECK(P({3, 3, 1}).part(2) == 3);
  CHECK(P({3, 3, 1}).part(9) == 0);
  CHECK_THROWS(P({2, 3}));
  CHECK_THROWS(P({1, -1}));
  CHECK(P({2, 0, 0}) == P({2}));  // trailing zeros normalized away
  CHECK(P({5, 2}).str() == "[5,2]");
  CHECK(P({}).str() == "[]");
}

TEST_CASE("conjugate") {
  CHECK(P({5, 2}).conjugate() == P({2, 2, 1, 1, 1}));
  CHECK(P({}).conjugate() == P({}));
  CHECK(P({3, 3, 1}).conjugate() == P({3, 2, 2}));
  for (auto v : {P({4, 2, 1}), P({1, 1, 1}), P({6})})
    CHECK(v.conjugate().conjugate() == v);
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(P({2, 2}), P({3, 1})));
  CHECK(dominance_leq(P({3, 1}), P({4})));
  CHECK(!dominance_leq(P({3, 1}), P({2, 2})));
  CHECK(dominance_leq(P({3, 1}), P({3, 1})));
  CHECK_THROWS(dominance_leq(P({2}), P({1})));
  // Lexicographic order refines dominance: a strictly dominated partition is
  // also lexicographically smaller.
  std::vector<Partition> all4 = {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                 P({1, 1, 1, 1})};
  for (const auto& a : all4)
    for (const auto& b : all4)
      if (dominance_leq(a, b) && a != b) CHECK(a < b);
}

TEST_CASE("conjugate_mp reverses components and negates charges") {
  Multipartition mp({P({3}), P({})});
  auto [cmp, cs] = conjugate_mp(mp, {1, -1});
  CHECK(cmp == Multipartition({P({}), P({1, 1, 1})}));
  CHECK(cs == Charges{1, -1});
  // Involution.
  auto [back, bs] = conjugate_mp(cmp, cs);
  CHECK(back == mp);
  CHECK(bs == Charges({1, -1}));
  CHECK(mp.str() == "[[3],[]]");
}

// The worked n=3, l=4 example with charges (5,0,2,1): ten marked 0-nodes in
// the order A(-3,4) R(0,2) R(0,3) R(0,4) A(3,1) A(3,2) R(3,3) A(3,4) A(6,3)
// R(9,1).
TEST_CASE("addable/removable word of the four-component example") {
  Multipartition mp({P({5, 3, 3, 1}), P({3, 2}), P({4, 3, 1}), P({2, 2, 2, 1})});
  Charges s{5, 0, 2, 1};
  auto word = addable_removable(mp, s, 3, 0);
  REQUIRE(word.size() == 10);
  struct Expect { long d; int b; NodeKind k; };
  std::vector<Expect> expect = {
      {-3, 4, NodeKind::Addable},  {0, 2, NodeKind::Removable},
      {0, 3, NodeKind::Removable}, {0, 4, NodeKind::Removable},
      {3, 1, NodeKind::Addable},   {3, 2, NodeKind::Addable},
      {3, 3, NodeKind::Removable}, {3, 4, NodeKind::Addable},
      {6, 3, NodeKind::Addable},   {9, 1, NodeKind::Removable}};
  for (size_t i = 0; i < 10; ++i) {
    CHECK(content(word[i].first, s) == expect[i].d);
    CHECK(word[i].first.comp == expect[i].b);
    CHECK(word[i].second == expect[i].k);
  }
}

TEST_CASE("node order is total on the A/R word") {
  Multipartition mp({P({2, 1}), P({2})});
  Charges s{0, 1};
  for (long i = 0; i < 2; ++i) {
    auto word = addable_removable(mp, s, 2, i);
    for (size_t a = 0; a + 1 < word.size(); ++a)
      CHECK(node_less(word[a].first, word[a + 1].first, s));
  }
}

TEST_CASE("counts") {
  Multipartition mp({P({}), P({1})});
  auto c = counts(mp, {0, 0}, 2);
  CHECK(c.M == std::vector<long>{1, 0});

  // Empty multipartition: N_i counts components with charge congruent to i.
  auto e = counts(Multipartition::empty(2), {0, 0}, 2);
  CHECK(e.N == std::vector<long>{2, 0});
  CHECK(e.M == std::vector<long>{0, 0});
  auto e2 = counts(Multipartition::empty(3), {5, 0, 2}, 3);
  CHECK(e2.N == std::vector<long>{1, 0, 2});

  // ((1),emptyset) at (0,0), n=2: addable 1-nodes (1,2,1),(2,1,1); removable
  // 0-node (1,1,1); addable 0-node (1,1,2).
  auto g = counts(Multipartition({P({1}), P({})}), {0, 0}, 2);
  CHECK(g.N == std::vector<long>{0, 2});
  CHECK(g.M == std::vector<long>{1, 0});
}

TEST_CASE("hook exponents") {
  // Adding the unique addable node of an empty single component.
  auto [above, below] = hook_exponents(Multipartition::empty(1),
                                       Multipartition({P({1})}), {0}, 2, 0);
  CHECK(above == 0);
  CHECK(below == 0);

  // n=2, s=(0,0): adding (1,1,2) to the empty pair sees the other addable
  // 0-node (1,1,1) below it (content 0, component 1 < 2): N^> = 0, N^< = 1.
  auto mp0 = Multipartition::empty(2);
  auto [a2, b2] = hook_exponents(mp0, Multipartition({P({}), P({1})}),
                                 {0, 0}, 2, 0);
  CHECK(a2 == 0);
  CHECK(b2 == 1);
  // ...and adding (1,1,1) sees (1,1,2) above it.
  auto [a1, b1] = hook_exponents(mp0, Multipartition({P({1}), P({})}),
                                 {0, 0}, 2, 0);
  CHECK(a1 == 1);
  CHECK(b1 == 0);

  CHECK_THROWS(hook_exponents(mp0, Multipartition({P({1}), P({1})}), {0, 0},
                              2, 0));
  CHECK_THROWS(hook_exponents(mp0, Multipartition({P({}), P({1})}), {0, 0},
                              2, 1));
}

TEST_CASE("delta constant") {
  CHECK(delta_const({0, 0}, 2) == 0);
  CHECK(delta_const({6, 5}, 5) == 1);
  CHECK(delta_const({8, 3}, 5) == 3);
  CHECK(delta_const({1, -1}, 3) == 1);
  // Closed form stays integral for scattered charges.
  for (long s1 = -4; s1 <= 4; ++s1)
    for (long s2 = -4; s2 <= 4; ++s2)
      (void)delta_const({s1, s2}, 3);
}

TEST_CASE("weights") {
  // Empty diagram at (0,0), n=2: weight 2 Lambda_0.
  auto w0 = weight_of(Multipartition::empty(2), {0, 0}, 2);
  CHECK(w0.fund == std::vector<long>{2, 0});
  CHECK(w0.delta == 0);

  // One 0-node: 2 Lambda_0 - alpha_0 = 2 Lambda_1 - delta.
  auto w1 = weight_of(Multipartition({P({}), P({1})}), {0, 0}, 2);
  CHECK(w1.fund == std::vector<long>{0, 2});
  CHECK(w1.delta == -1);

  // Fundamental coefficients always sum to the level.
  for (const auto& mp :
       {Multipartition({P({3, 1}), P({2})}), Multipartition({P({}), P({5})})}) {
    auto w = weight_of(mp, {1, -1}, 3);
    long lvl = 0;
    for (long c : w.fund) lvl += c;
    CHECK(lvl == 2);
    auto cm = counts(mp, {1, -1}, 3);
    CHECK(w.delta == -(delta_const({1, -1}, 3) + cm.M[0]));
  }
}

TEST_CASE("dot weight") {
  // |empty_2,(6,5)> at n=5, l=2: 4 dotLambda_0 + dotLambda_1 - dotdelta.
  auto w = dot_weight_of(Multipartition::empty(2), {6, 5}, 5);
  CHECK(w.fund == std::vector<long>{4, 1});
  CHECK(w.delta == -1);
  // Level on the dotted side is n.
  auto w2 = dot_weight_of(Multipartition({P({2}), P({1})}), {1, -1}, 3);
  long lvl = 0;
  for (long c : w2.fund) lvl += c;
  CHECK(lvl == 3);
}
