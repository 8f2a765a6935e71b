#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "qfock/crystal.hpp"
#include "qfock/partition.hpp"

using namespace qfock;

namespace {

Partition P(std::initializer_list<long> parts) {
    return Partition(std::vector<long>(parts));
}

Multipartition MP(std::vector<Partition> comps) {
    return Multipartition(std::move(comps));
}

}  // namespace

// A worked four-component example with a long A/R word: the sorted word
// must interleave the components by content, and the cancellation must
// leave the extreme survivors as the good pair.
TEST_CASE("good nodes of a four component multipartition") {
    const long n = 3;
    const Charges s = {5, 0, 2, 1};
    const Multipartition mp =
        MP({P({5, 3, 3, 1}), P({3, 2}), P({4, 3, 1}), P({2, 2, 2, 1})});

    // Color 0 word, ordered by (content, component):
    //   A(-3) R(0) R(0) R(0) A(3) A(3) R(3) A(3) A(6) R(9)
    const auto word = addable_removable(mp, s, n, 0);
    REQUIRE(word.size() == 10);
    const std::vector<std::pair<Node, NodeKind>> expect = {
        {{5, 1, 4}, NodeKind::Addable},   {{2, 2, 2}, NodeKind::Removable},
        {{3, 1, 3}, NodeKind::Removable}, {{3, 2, 4}, NodeKind::Removable},
        {{4, 2, 1}, NodeKind::Addable},   {{1, 4, 2}, NodeKind::Addable},
        {{2, 3, 3}, NodeKind::Removable}, {{1, 3, 4}, NodeKind::Addable},
        {{1, 5, 3}, NodeKind::Addable},   {{1, 5, 1}, NodeKind::Removable}};
    for (std::size_t t = 0; t < expect.size(); ++t) {
        CHECK(word[t].first == expect[t].first);
        CHECK(word[t].second == expect[t].second);
    }

    const GoodNodes g = good_nodes(mp, s, n, 0);
    REQUIRE(g.addable.has_value());
    REQUIRE(g.removable.has_value());
    CHECK(*g.addable == Node{5, 1, 4});
    CHECK(*g.removable == Node{1, 5, 1});

    CHECK_THROWS_AS(good_nodes(mp, s, n, 3), std::invalid_argument);
    CHECK_THROWS_AS(good_nodes(mp, s, n, -1), std::invalid_argument);
}

// The empty multipartition has one addable node per component and nothing
// removable; the good addable of color i exists iff some charge hits i.
TEST_CASE("good nodes of the empty multipartition") {
    const long n = 3;
    const Charges s = {1, -1};
    const Multipartition mp = Multipartition::empty(2);

    for (long i = 0; i < n; ++i) {
        const GoodNodes g = good_nodes(mp, s, n, i);
        CHECK_FALSE(g.removable.has_value());
        if (i == 0) {
            CHECK_FALSE(g.addable.has_value());
        } else {
            REQUIRE(g.addable.has_value());
            // Charges 1 and -1 have residues 1 and 2 mod 3.
            CHECK(*g.addable == Node{1, 1, i == 1 ? 1 : 2});
        }
    }
}

// A word that cancels completely: for the column (1,1) at level one the
// color-1 word is R(-1) A(1), a single RA pair, so no node is good.
TEST_CASE("complete cancellation leaves no good nodes") {
    const GoodNodes g = good_nodes(MP({P({1, 1})}), {0}, 2, 1);
    CHECK_FALSE(g.addable.has_value());
    CHECK_FALSE(g.removable.has_value());
}

// Words with several survivors must yield the inner boundary pair of
// A...AR...R.  The single row (1) has color-1 word AA, and q-expanding
// f_1|(1)> = |(2)> + q|(1,1)> shows that the crystal arrow adds the
// greater node; dually (2,1) has color-1 word RR and the arrow back from
// e_1 removes the lesser node.
TEST_CASE("survivor choice is the boundary pair") {
    const GoodNodes grow = good_nodes(MP({P({1})}), {0}, 2, 1);
    REQUIRE(grow.addable.has_value());
    CHECK(*grow.addable == Node{1, 2, 1});
    CHECK_FALSE(grow.removable.has_value());

    const GoodNodes gshrink = good_nodes(MP({P({2, 1})}), {0}, 2, 1);
    REQUIRE(gshrink.removable.has_value());
    CHECK(*gshrink.removable == Node{2, 1, 1});
    CHECK_FALSE(gshrink.addable.has_value());

    // Level two with equal charges: both colors-0 letters of the empty
    // multipartition survive, and the good one is in the last component.
    const GoodNodes gtie = good_nodes(Multipartition::empty(2), {0, 0}, 2, 0);
    REQUIRE(gtie.addable.has_value());
    CHECK(*gtie.addable == Node{1, 1, 2});
}

TEST_CASE("crystal component membership") {
    SUBCASE("degree zero") {
        const CrystalComponent c = crystal_component(3, 2, {1, -1}, 0);
        CHECK(c.members == std::set<Multipartition>{Multipartition::empty(2)});
        CHECK(c.arrows.empty());
    }

    SUBCASE("rank three, level two, charges (1,-1)") {
        // The degree-3 members split by weight as 4 + 1 + 1: four in the
        // eight-dimensional weight space, and the two singleton weight
        // spaces, whose sole labels ((2),(1)) and ((1),(1,1)) necessarily
        // carry the crystal vertex of their weight.
        const CrystalComponent c = crystal_component(3, 2, {1, -1}, 3);
        const std::set<Multipartition> expect = {
            Multipartition::empty(2),
            MP({P({1}), P({})}),
            MP({P({}), P({1})}),
            MP({P({2}), P({})}),
            MP({P({1, 1}), P({})}),
            MP({P({}), P({2})}),
            MP({P({1}), P({1})}),
            MP({P({3}), P({})}),
            MP({P({2, 1}), P({})}),
            MP({P({}), P({3})}),
            MP({P({1}), P({2})}),
            MP({P({2}), P({1})}),
            MP({P({1}), P({1, 1})}),
        };
        CHECK(c.members == expect);
    }

    SUBCASE("rank two, level two, charges (0,0)") {
        const CrystalComponent c = crystal_component(2, 2, {0, 0}, 2);
        const std::set<Multipartition> expect = {
            Multipartition::empty(2),
            MP({P({}), P({1})}),
            MP({P({}), P({2})}),
            MP({P({1}), P({1})}),
        };
        CHECK(c.members == expect);
    }
}

// Adding the good addable node and then asking for the good removable of
// the result must return the very node that was added; removing it must
// restore the source.  The arrow list must consist of exactly these moves.
TEST_CASE("crystal arrows invert and are exhaustive") {
    const long n = 3, l = 2, max_size = 4;
    const Charges s = {1, -1};
    const CrystalComponent c = crystal_component(n, l, s, max_size);

    std::vector<CrystalArrow> rebuilt;
    for (const Multipartition& mp : c.members) {
        if (mp.size() >= max_size) continue;
        for (long i = 0; i < n; ++i) {
            const GoodNodes g = good_nodes(mp, s, n, i);
            if (!g.addable) continue;
            const Multipartition up = add_node(mp, *g.addable);
            CHECK(c.members.count(up) == 1);
            const GoodNodes gu = good_nodes(up, s, n, i);
            REQUIRE(gu.removable.has_value());
            CHECK(*gu.removable == *g.addable);
            CHECK(remove_node(up, *gu.removable) == mp);
            rebuilt.push_back({mp, up, i});
        }
    }
    CHECK(rebuilt.size() == c.arrows.size());
    for (const CrystalArrow& a : rebuilt)
        CHECK(std::count(c.arrows.begin(), c.arrows.end(), a) == 1);

    // The component is closed downward: removing a good node of a member
    // lands on a member.
    for (const Multipartition& mp : c.members)
        for (long i = 0; i < n; ++i) {
            const GoodNodes g = good_nodes(mp, s, n, i);
            if (g.removable)
                CHECK(c.members.count(remove_node(mp, *g.removable)) == 1);
        }
}

TEST_CASE("dot output shape") {
    const CrystalComponent c = crystal_component(2, 2, {0, 0}, 2);
    const std::string dot = crystal_dot(c);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.find("[[],[2]]") != std::string::npos);
    CHECK(dot.find("label=\"n=2 l=2 s=(0,0)\"") != std::string::npos);
}
