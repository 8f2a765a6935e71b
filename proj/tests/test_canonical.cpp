#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "qfock/canonical.hpp"
#include "qfock/crystal.hpp"
#include "qfock/fock.hpp"
#include "qfock/indexing.hpp"
#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"

using namespace qfock;

namespace {

const Laurent one = Laurent::constant(1);

Partition P(std::initializer_list<long> parts) {
    return Partition(std::vector<long>(parts));
}

Multipartition MP(std::vector<Partition> comps) {
    return Multipartition(std::move(comps));
}

// Golden tables are written row by row like the printed matrices: entry -1
// encodes a zero, entry e >= 0 encodes var^e with var = q or p.
using Table = std::vector<std::vector<int>>;

void check_block_matches(const TransitionBlock& b, const Table& t, char var) {
    const std::size_t size = b.rows.size();
    REQUIRE(t.size() == size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            const Laurent want =
                t[i][j] < 0 ? Laurent()
                            : (var == 'p' ? Laurent::p(t[i][j])
                                          : Laurent::q(t[i][j]));
            CAPTURE(i);
            CAPTURE(j);
            CHECK(b.cols[j][i] == want);
        }
}

const TransitionBlock& block_with_weight(const std::vector<TransitionBlock>& bs,
                                         const std::vector<long>& weight) {
    for (const TransitionBlock& b : bs)
        if (b.weight == weight) return b;
    REQUIRE(false);
    return bs.front();
}

long total_charge(const Charges& s) {
    long t = 0;
    for (long c : s) t += c;
    return t;
}

// Reassemble the column c of a block as a Fock space vector.
FockVector column_vector(const TransitionBlock& b, std::size_t c) {
    FockVector v(b.n, b.l, total_charge(b.s));
    for (std::size_t r = 0; r < b.rows.size(); ++r)
        v.add(b.rows[r].underlying, b.cols[c][r]);
    return v;
}

}  // namespace

TEST_CASE("degree zero is trivial") {
    for (const Charges& s : {Charges{0, 0}, Charges{1, -1}, Charges{2, 0}}) {
        const auto blocks = canonical_basis(2, 2, s, 0, BasisSign::Plus);
        REQUIRE(blocks.size() == 1);
        REQUIRE(blocks[0].rows.size() == 1);
        CHECK(blocks[0].rows[0].mp == Multipartition::empty(2));
        CHECK(blocks[0].rows[0].in_crystal);
        CHECK(blocks[0].cols[0][0] == one);
        CHECK(verify_inversion(2, 2, s, 0));
    }
}

// Level one, rank two, charge zero.  The bar involution sends |(2)> to
// |(2)> + (q - q^-1)|(1,1)>, so the plus basis completes with q and the
// minus basis with p = -q^-1.
TEST_CASE("level one canonical bases") {
    const auto plus2 = canonical_basis(2, 1, {0}, 2, BasisSign::Plus);
    REQUIRE(plus2.size() == 1);
    const TransitionBlock& b2 = plus2[0];
    REQUIRE(b2.rows.size() == 2);
    CHECK(b2.rows[0].underlying == P({2}));
    CHECK(b2.rows[1].underlying == P({1, 1}));
    CHECK(b2.rows[0].in_crystal);
    CHECK_FALSE(b2.rows[1].in_crystal);
    check_block_matches(b2, {{0, -1}, {1, 0}}, 'q');

    const auto minus2 = canonical_basis(2, 1, {0}, 2, BasisSign::Minus);
    check_block_matches(minus2[0], {{0, -1}, {1, 0}}, 'p');

    const auto plus3 = canonical_basis(2, 1, {0}, 3, BasisSign::Plus);
    REQUIRE(plus3.size() == 2);
    const TransitionBlock& odd = block_with_weight(plus3, {1, 2});
    REQUIRE(odd.rows.size() == 1);
    CHECK(odd.rows[0].underlying == P({2, 1}));
    CHECK(odd.cols[0][0] == one);
    const TransitionBlock& even = block_with_weight(plus3, {2, 1});
    REQUIRE(even.rows.size() == 2);
    CHECK(even.rows[0].underlying == P({3}));
    CHECK(even.rows[1].underlying == P({1, 1, 1}));
    check_block_matches(even, {{0, -1}, {1, 0}}, 'q');
}

// The full printed eight-dimensional degree-3 matrices for n=3, l=2,
// s=(1,-1), together with the two singleton weight spaces.
TEST_CASE("rank three level two degree three tables") {
    const long n = 3, l = 2, k = 3;
    const Charges s = {1, -1};
    const std::vector<Multipartition> order = {
        MP({P({3}), P({})}),    MP({P({}), P({3})}),
        MP({P({1}), P({2})}),   MP({P({}), P({2, 1})}),
        MP({P({2, 1}), P({})}), MP({P({1, 1}), P({1})}),
        MP({P({1, 1, 1}), P({})}), MP({P({}), P({1, 1, 1})})};

    const Table tplus = {
        {0, -1, -1, -1, -1, -1, -1, -1},
        {-1, 0, -1, -1, -1, -1, -1, -1},
        {1, 1, 0, -1, -1, -1, -1, -1},
        {-1, 2, 1, 0, -1, -1, -1, -1},
        {1, -1, -1, -1, 0, -1, -1, -1},
        {2, -1, 1, -1, 1, 0, -1, -1},
        {-1, -1, -1, -1, 2, 1, 0, -1},
        {-1, -1, 2, 1, -1, 1, -1, 0}};
    const Table tminus = {
        {0, -1, -1, -1, -1, -1, -1, -1},
        {-1, 0, -1, -1, -1, -1, -1, -1},
        {1, 1, 0, -1, -1, -1, -1, -1},
        {2, -1, 1, 0, -1, -1, -1, -1},
        {1, -1, -1, -1, 0, -1, -1, -1},
        {2, 2, 1, -1, 1, 0, -1, -1},
        {-1, 3, 2, -1, -1, 1, 0, -1},
        {3, -1, 2, 1, 2, 1, -1, 0}};

    const auto plus = canonical_basis(n, l, s, k, BasisSign::Plus);
    const auto minus = canonical_basis(n, l, s, k, BasisSign::Minus);
    REQUIRE(plus.size() == 3);
    REQUIRE(minus.size() == 3);

    const TransitionBlock& bp = block_with_weight(plus, {1, 1, 1});
    const TransitionBlock& bm = block_with_weight(minus, {1, 1, 1});
    REQUIRE(bp.rows.size() == 8);
    for (std::size_t r = 0; r < 8; ++r) {
        CHECK(bp.rows[r].mp == order[r]);
        CHECK(bm.rows[r].mp == order[r]);
    }
    check_block_matches(bp, tplus, 'q');
    check_block_matches(bm, tminus, 'p');

    // Crystal membership: four starred rows in the big weight space, and
    // both singleton labels.
    for (std::size_t r = 0; r < 8; ++r)
        CHECK(bp.rows[r].in_crystal == (r == 0 || r == 1 || r == 2 || r == 4));
    const TransitionBlock& s1 = block_with_weight(plus, {0, 1, 2});
    REQUIRE(s1.rows.size() == 1);
    CHECK(s1.rows[0].mp == MP({P({2}), P({1})}));
    CHECK(s1.cols[0][0] == one);
    CHECK(s1.rows[0].in_crystal);
    const TransitionBlock& s2 = block_with_weight(plus, {0, 2, 1});
    REQUIRE(s2.rows.size() == 1);
    CHECK(s2.rows[0].mp == MP({P({1}), P({1, 1})}));
    CHECK(s2.rows[0].in_crystal);
}

// The printed tables for n=l=2, s=(0,0) at low degree, including the
// underlying partition column and the starred rows.
TEST_CASE("rank two level two tables") {
    const Charges s = {0, 0};

    SUBCASE("degree one") {
        const auto plus = canonical_basis(2, 2, s, 1, BasisSign::Plus);
        REQUIRE(plus.size() == 1);
        const TransitionBlock& b = plus[0];
        REQUIRE(b.rows.size() == 2);
        CHECK(b.rows[0].mp == MP({P({}), P({1})}));
        CHECK(b.rows[0].underlying == P({3}));
        CHECK(b.rows[0].in_crystal);
        CHECK(b.rows[1].mp == MP({P({1}), P({})}));
        CHECK(b.rows[1].underlying == P({1, 1, 1}));
        CHECK_FALSE(b.rows[1].in_crystal);
        check_block_matches(b, {{0, -1}, {1, 0}}, 'q');
    }

    SUBCASE("degree two") {
        const auto plus = canonical_basis(2, 2, s, 2, BasisSign::Plus);
        REQUIRE(plus.size() == 2);
        const TransitionBlock& b = block_with_weight(plus, {1, 1});
        REQUIRE(b.rows.size() == 4);
        CHECK(b.rows[0].mp == MP({P({}), P({2})}));
        CHECK(b.rows[0].underlying == P({4}));
        CHECK(b.rows[1].mp == MP({P({}), P({1, 1})}));
        CHECK(b.rows[1].underlying == P({3, 1}));
        CHECK(b.rows[2].mp == MP({P({2}), P({})}));
        CHECK(b.rows[2].underlying == P({2, 1, 1}));
        CHECK(b.rows[3].mp == MP({P({1, 1}), P({})}));
        CHECK(b.rows[3].underlying == P({1, 1, 1, 1}));
        check_block_matches(b,
                            {{0, -1, -1, -1},
                             {1, 0, -1, -1},
                             {1, -1, 0, -1},
                             {2, 1, 1, 0}},
                            'q');
        CHECK(b.rows[0].in_crystal);
        CHECK_FALSE(b.rows[1].in_crystal);
        CHECK_FALSE(b.rows[2].in_crystal);
        CHECK_FALSE(b.rows[3].in_crystal);

        const TransitionBlock& sgl = block_with_weight(plus, {2, 0});
        REQUIRE(sgl.rows.size() == 1);
        CHECK(sgl.rows[0].mp == MP({P({1}), P({1})}));
        CHECK(sgl.rows[0].underlying == P({3, 2, 1}));
        CHECK(sgl.rows[0].in_crystal);
    }

    SUBCASE("degree three") {
        const auto plus = canonical_basis(2, 2, s, 3, BasisSign::Plus);
        REQUIRE(plus.size() == 2);
        const TransitionBlock& small = block_with_weight(plus, {1, 2});
        REQUIRE(small.rows.size() == 2);
        CHECK(small.rows[0].mp == MP({P({}), P({2, 1})}));
        CHECK(small.rows[0].underlying == P({4, 1}));
        CHECK(small.rows[0].in_crystal);
        CHECK(small.rows[1].mp == MP({P({2, 1}), P({})}));
        CHECK(small.rows[1].underlying == P({2, 1, 1, 1}));
        CHECK_FALSE(small.rows[1].in_crystal);
        check_block_matches(small, {{0, -1}, {1, 0}}, 'q');

        const TransitionBlock& big = block_with_weight(plus, {2, 1});
        const std::vector<Multipartition> order = {
            MP({P({}), P({3})}),    MP({P({3}), P({})}),
            MP({P({1}), P({2})}),   MP({P({2}), P({1})}),
            MP({P({1}), P({1, 1})}), MP({P({1, 1}), P({1})}),
            MP({P({}), P({1, 1, 1})}), MP({P({1, 1, 1}), P({})})};
        const std::vector<Partition> underlying = {
            P({7}),       P({5, 1, 1}),    P({4, 2, 1}), P({3, 3, 1}),
            P({3, 2, 2}), P({3, 2, 1, 1}), P({3, 1, 1, 1, 1}), P({1, 1, 1, 1, 1, 1, 1})};
        REQUIRE(big.rows.size() == 8);
        for (std::size_t r = 0; r < 8; ++r) {
            CHECK(big.rows[r].mp == order[r]);
            CHECK(big.rows[r].underlying == underlying[r]);
            CHECK(big.rows[r].in_crystal == (r == 0 || r == 2));
        }
        check_block_matches(big,
                            {{0, -1, -1, -1, -1, -1, -1, -1},
                             {1, 0, -1, -1, -1, -1, -1, -1},
                             {1, -1, 0, -1, -1, -1, -1, -1},
                             {2, 1, 1, 0, -1, -1, -1, -1},
                             {1, -1, 2, 1, 0, -1, -1, -1},
                             {2, 1, 3, 2, 1, 0, -1, -1},
                             {2, -1, -1, -1, 1, -1, 0, -1},
                             {3, 2, -1, 1, 2, 1, 1, 0}},
                            'q');
    }
}

// Structural properties on small configurations: unitriangularity with the
// right half-plane for off-diagonal entries, bar-fixedness of the
// assembled columns, involutivity of the R-matrix, the dual basis as a
// two-sided inverse, and crystal flags matching the component.
TEST_CASE("canonical basis properties") {
    struct Config {
        long n, l;
        Charges s;
    };
    const std::vector<Config> configs = {{2, 2, {0, 0}}, {3, 2, {1, -1}}};
    for (const Config& cfg : configs)
        for (long k = 1; k <= 3; ++k) {
            CAPTURE(cfg.n);
            CAPTURE(k);
            const auto rmat = r_matrix(cfg.n, cfg.l, cfg.s, k);
            for (const TransitionBlock& b : rmat) {
                const std::size_t size = b.rows.size();
                // bar is an involution: R * bar(R) = Id blockwise.
                for (std::size_t a = 0; a < size; ++a)
                    for (std::size_t c = 0; c < size; ++c) {
                        Laurent acc;
                        for (std::size_t t = 0; t < size; ++t)
                            acc += b.cols[a][t] * b.cols[t][c].bar();
                        CHECK(acc == (a == c ? one : Laurent()));
                    }
            }

            for (const BasisSign sign : {BasisSign::Plus, BasisSign::Minus}) {
                const auto blocks =
                    canonical_basis(cfg.n, cfg.l, cfg.s, k, sign);
                for (const TransitionBlock& b : blocks) {
                    const std::size_t size = b.rows.size();
                    for (std::size_t c = 0; c < size; ++c) {
                        for (std::size_t r = 0; r < size; ++r) {
                            const Laurent& e = b.cols[c][r];
                            if (r == c) {
                                CHECK(e == one);
                            } else if (r < c) {
                                CHECK(e.is_zero());
                            } else if (!e.is_zero()) {
                                for (const auto& [exp, coeff] : e.terms())
                                    CHECK((sign == BasisSign::Plus
                                               ? exp >= 1
                                               : exp <= -1));
                            }
                        }
                        const FockVector g = column_vector(b, c);
                        CHECK(bar(g) == g);
                    }
                    CHECK(entries_nonnegative(b, sign));
                }
            }

            // Dual vectors pair to the identity against the plus basis
            // under the ket-orthonormal form: both sides are expanded over
            // kets, so the contraction runs over the ket index.
            const auto plus = canonical_basis(cfg.n, cfg.l, cfg.s, k,
                                              BasisSign::Plus);
            for (const TransitionBlock& b : plus) {
                const auto dual = dual_basis(b);
                const std::size_t size = b.rows.size();
                for (std::size_t a = 0; a < size; ++a)
                    for (std::size_t c = 0; c < size; ++c) {
                        Laurent acc;
                        for (std::size_t t = 0; t < size; ++t)
                            acc += dual[a][t] * b.cols[c][t];
                        CHECK(acc == (a == c ? one : Laurent()));
                    }
            }

            // Crystal flags agree with the component enumeration.
            const auto comp =
                crystal_component(cfg.n, cfg.l, cfg.s, k).members;
            for (const TransitionBlock& b : plus)
                for (const TransitionRow& row : b.rows)
                    CHECK(row.in_crystal == (comp.count(row.mp) > 0));
        }
}

// The transposed-inverse description of the dual basis, conjugated
// entrywise, is the minus basis at the conjugate charges.
TEST_CASE("duality between the bases") {
    struct Config {
        long n, l;
        Charges s;
    };
    const std::vector<Config> configs = {{2, 2, {0, 0}}, {3, 2, {1, -1}}};
    for (const Config& cfg : configs)
        for (long k = 1; k <= 3; ++k) {
            Charges sp(cfg.s.rbegin(), cfg.s.rend());
            for (long& c : sp) c = -c;
            const auto plus =
                canonical_basis(cfg.n, cfg.l, cfg.s, k, BasisSign::Plus);
            const auto minus =
                canonical_basis(cfg.n, cfg.l, sp, k, BasisSign::Minus);
            std::map<Multipartition, std::pair<std::size_t, std::size_t>> pos;
            for (std::size_t bi = 0; bi < minus.size(); ++bi)
                for (std::size_t r = 0; r < minus[bi].rows.size(); ++r)
                    pos[minus[bi].rows[r].mp] = {bi, r};

            for (const TransitionBlock& b : plus) {
                const auto dual = dual_basis(b);
                const std::size_t size = b.rows.size();
                for (std::size_t a = 0; a < size; ++a) {
                    const auto ca = conjugate_mp(b.rows[a].mp, cfg.s).first;
                    for (std::size_t m = 0; m < size; ++m) {
                        const auto cm = conjugate_mp(b.rows[m].mp, cfg.s).first;
                        // Dual coefficient of ket m in the dual vector of
                        // label a, bar-conjugated.
                        const Laurent lhs = dual[a][m].bar();
                        const auto pa = pos.at(ca), pm = pos.at(cm);
                        Laurent rhs;
                        if (pa.first == pm.first)
                            rhs = minus[pa.first].cols[pa.second][pm.second];
                        CHECK(lhs == rhs);
                    }
                }
            }
            CHECK(verify_inversion(cfg.n, cfg.l, cfg.s, k));
        }
}
