#pragma once

// An independent route to the transition matrices through the affine
// Hecke algebra.
//
// The extended affine symmetric group acts on integer r-tuples zeta on
// the right: s_i (0 < i < r) swaps zeta_i and zeta_{i+1}, the affine
// generator s_0 exchanges the two ends across the period (zeta_r - n
// moves to the front, zeta_1 + n to the back), and the rotation pi sends
// zeta to (zeta_2, ..., zeta_r, zeta_1 + n).  Each orbit contains a
// unique weakly increasing anchor with entries in 1..n, and its tuples
// correspond to the minimal-length representatives x of the cosets of
// the anchor stabilizer.  Writing zeta_i = c_i + n mu_i with c_i in
// 1..n, the length of x is a four-term inversion count in the digits
// (c_i, mu_i); comparing zeta_i with zeta_{i+1} (cyclically, with
// zeta_0 = zeta_r - n) tells whether s_i fixes the tuple, shortens x,
// or lengthens it.
//
// The Hecke algebra deforms this permutation action.  On the module
// induced from the trivial character of the anchor stabilizer, with
// basis (zeta|, the generator T_i swaps an ascending pair, scales an
// equal pair by q^-1, and swaps a descending pair while subtracting
// (q - q^-1) times the original.  The bar involution fixes the keys
// without descents (the rotation powers of the anchor) and unwinds one
// descent at a time through T_i^-1 = T_i + (q - q^-1); it is
// unitriangular for the length, so the module has two Kazhdan-Lusztig
// bases C+-, produced by the same split-and-propagate solve as the
// canonical bases of the Fock space.
//
// A strictly decreasing wedge word enters this picture through its
// digits k = c + n(d - 1) - nl m: the c's sort up into the anchor, the
// d's sort down into a level word b, and the values c - n m, placed
// level by level, form the key zeta(k).  The transition matrices of the
// wedge product then coincide with coefficients of C- (minus side) and
// with alternating sums of coefficients of C+ over the stabilizer of b
// (plus side).  crosscheck_kl replays the Fock-side matrices of one
// degree against the module and reports any difference.

#include <map>
#include <string>
#include <vector>

#include "qfock/canonical.hpp"
#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"

namespace qfock {

// A basis key: an integer r-tuple lying in the orbit of its anchor.
using CosetKey = std::vector<long>;

// A finite combination of coset basis vectors at a fixed period n.
struct CosetVector {
  long n = 1;
  std::map<CosetKey, Laurent> terms;

  void add(const CosetKey& key, const Laurent& c);
  void add_scaled(const CosetVector& w, const Laurent& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const CosetVector&) const = default;
};

// Single basis vector with coefficient one.
CosetVector coset_unit(long n, const CosetKey& zeta);

// The weakly increasing orbit representative: the digits c_i, sorted.
CosetKey anchor_of(const CosetKey& zeta, long n);

// Right action of the generators T_i (0 <= i < r, needs r >= 2) and of
// the invertible rotation T_pi.
CosetVector act_Ti(const CosetVector& v, long i);
CosetVector act_Tpi(const CosetVector& v);

// Length of the minimal coset representative carrying the anchor to zeta.
long coset_length(const CosetKey& zeta, long n);

// Positions i in 0..r-1 with zeta_i > zeta_{i+1}, reading zeta_0 as
// zeta_r - n.  Empty exactly on the rotation powers of the anchor.
std::vector<long> descents(const CosetKey& zeta, long n);

enum class DescentPick { First, Last };

// Memoized bar involution on the basis keys of one period.  The choice
// of descent at each recursion step must not affect the result; tests
// exercise both policies.
class BarCoset {
 public:
  explicit BarCoset(long n, DescentPick pick = DescentPick::First);
  const CosetVector& key(const CosetKey& zeta);
  CosetVector of(const CosetVector& v);
  long period() const { return n_; }

 private:
  long n_;
  DescentPick pick_;
  std::map<CosetKey, CosetVector> memo_;
};

// Kazhdan-Lusztig coefficients of C+-_zeta: the map eta -> P+-_{eta,zeta}
// over the bar-closure of zeta, including the unit coefficient at zeta.
// Off-diagonal values lie in qZ[q] (plus) or q^-1 Z[q^-1] (minus).
// Throws logic_error when the closure is not unitriangular for the
// length, which would mean the module action is wrong.
std::map<CosetKey, Laurent> kl_module_basis(long n, const CosetKey& zeta,
                                            BasisSign sign,
                                            BarCoset* bar = nullptr);

// Coset data of a strictly decreasing wedge word.
struct WedgeCoset {
  CosetKey a;           // weakly increasing anchor, from the digits c
  std::vector<long> b;  // weakly decreasing level word, from the digits d
  CosetKey zeta;

  bool operator==(const WedgeCoset&) const = default;
};
WedgeCoset zeta_of(const std::vector<long>& word, long n, long l);

// Recomputes the degree-k transition matrices through the module, with
// every ket truncated to its first r wedge letters, and compares entry
// by entry.  Rows whose underlying partition has more than r parts are
// not determined by the truncation; entries touching them are skipped
// and counted, never compared.
struct CrosscheckReport {
  bool ok = true;
  long pairs = 0;    // coefficients compared (both signs)
  long skipped = 0;  // coefficients not covered by the truncation
  std::string message;
};
CrosscheckReport crosscheck_kl(long n, long l, const Charges& s, long k,
                               long r);

}  // namespace qfock
