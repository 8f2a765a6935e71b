#pragma once

// The finite q-deformed wedge product.
//
// Words of integers index a spanning set u_{k_1} ^ ... ^ u_{k_r} of the
// r-fold wedge product; the strictly decreasing words form a basis.  An
// arbitrary word is rewritten into the basis by exchange rules for a
// single adjacent pair (k_1, k_2) with k_1 <= k_2.  Writing each index as
// k = c + n(d-1) - nl*m, the rule is selected by the residues
// gamma = (c_2 - c_1) mod nl and delta = n(d_2 - d_1) mod nl:
//
//   gamma = delta = 0:   pure antisymmetry (equal letters square to zero);
//   gamma > 0 = delta:   a q^{-1}-twisted swap plus two geometric tails
//                        of corrections shifted by gamma + nl*m and nl*m;
//   gamma = 0 < delta:   the mirror image with q in place of q^{-1};
//   gamma, delta > 0:    an untwisted swap plus four tails whose
//                        coefficients are (q - q^{-1}) times Chebyshev-like
//                        ratios (q^{2m+1} + q^{-2m-1})/(q + q^{-1}) and
//                        (q^{2m} - q^{-2m})/(q + q^{-1}).
//
// Each tail continues only while its wedge stays strictly decreasing.
// All rules preserve the length and the index sum of a word, and the
// rewriting is confluent: any order of resolving violations yields the
// same normal form.
//
// The bar involution reverses a word, multiplies by
// q^{-kappa(c)} (-q)^{kappa(d)}, where kappa(c) (resp. kappa(d)) counts
// pairs of letters sharing their c (resp. d) coordinate, bars the
// coefficients, and straightens.  The boson generators act by shifting a
// single letter by -nl*m, summed over positions, optionally restricted to
// the letters of one slot family.

#include <map>
#include <utility>
#include <vector>

#include "qfock/laurent.hpp"

namespace qfock {

// A wedge word; ordered means strictly decreasing.
using Word = std::vector<long>;

// A linear combination of ordered words.
using WedgeVector = std::map<Word, Laurent>;

enum class Strategy { Leftmost, Rightmost };

// Expansion of the unordered pair u_{k1} ^ u_{k2}, k1 <= k2, into ordered
// pairs.  Returns an empty list when the wedge vanishes.
std::vector<std::pair<std::pair<long, long>, Laurent>> exchange_pair(
    long k1, long k2, long n, long l);

// Normal form of an arbitrary word (or combination of words).
WedgeVector straighten(const Word& word, long n, long l,
                       Strategy strategy = Strategy::Leftmost);
WedgeVector straighten(const WedgeVector& v, long n, long l,
                       Strategy strategy = Strategy::Leftmost);

// Bar involution of the finite wedge product.  Semilinear: coefficients
// are barred as well.
WedgeVector bar(const WedgeVector& v, long n, long l);
WedgeVector bar_word(const Word& word, long n, long l);

// Restriction of the boson sum to one slot family.
enum class Family {
    All,   // every letter
    ByD,   // letters with d(k) equal to the given component
    ByC,   // letters with c(k) equal to the given component
};

// B_m: sum over letter positions of the shift k -> k - nl*m (m nonzero).
WedgeVector boson(const WedgeVector& v, long m, long n, long l,
                  Family family = Family::All, long comp = 0);

}  // namespace qfock
