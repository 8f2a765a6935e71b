#pragma once

// The semi-infinite layer: vectors of the level-(n,l) Fock space and the
// operators acting on them.
//
// A vector is a finite combination of kets |lambda, s> at a fixed total
// charge s, keyed by the underlying partition lambda.  The two charged
// multipartition labels (lambda_l, s_l) and (lambda_n, s_n) of the same ket
// are recovered on demand through the indexing layer, so the Chevalley
// operators of both quantum groups and the Heisenberg generators all act on
// one common representation.
//
// Operators whose matrix elements are combinatorial (node additions and
// removals, diagonal weight factors) are computed directly from the charged
// multipartition.  The bar-involution and the bosons are not combinatorial:
// they are defined through the finite wedge product by cutting the beta
// sequence of each ket to a window of r entries, acting there, and
// reattaching the untouched vacuum tail.  For bar a window of r = |lambda|
// entries is already stable; a boson B_m needs r = |lambda| + nl|m| because
// a shifted letter can travel nl|m| steps.  Letters pushed into the dense
// vacuum tail collide with it and kill their term, which is what keeps the
// truncation exact rather than approximate.
//
// The elementary and complete symmetric-function combinations E_m and H_m of
// the bosons are evaluated through Newton's identities.  The intermediate
// division by m is exact on every vector in the image (checked at run time),
// so all arithmetic stays in Z[q, q^-1].

#include <map>
#include <string>

#include "qfock/indexing.hpp"
#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"
#include "qfock/wedge.hpp"

namespace qfock {

struct FockVector {
  long n = 1, l = 1, s = 0;
  std::map<Partition, Laurent> terms;

  FockVector() = default;
  FockVector(long n_, long l_, long s_) : n(n_), l(l_), s(s_) {}

  static FockVector basis(long n, long l, long s, const Partition& lambda) {
    FockVector v(n, l, s);
    v.terms[lambda] = Laurent::constant(1);
    return v;
  }

  bool is_zero() const { return terms.empty(); }

  void add(const Partition& key, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) {
    return a += b;
  }
  friend FockVector operator-(FockVector a, const FockVector& b) {
    return a -= b;
  }
  FockVector scaled(const Laurent& c) const;

  bool operator==(const FockVector& o) const {
    return n == o.n && l == o.l && s == o.s && terms == o.terms;
  }
  bool operator!=(const FockVector& o) const { return !(*this == o); }

  std::string str() const;  // multi-line, for test diagnostics
};

// Semi-linear bar-involution.  window_margin widens the truncation window
// beyond the stable minimum; the result must not depend on it, which the
// tests exercise directly.
FockVector bar(const FockVector& v, long window_margin = 0);

// Chevalley action of U_q(sl_n-hat) through the l-label: f_i adds every
// addable i-node with weight q^{N_i^>}, e_i removes every removable i-node
// with weight q^{-N_i^<}, t_i scales by q^{N_i} (power -1 gives the
// inverse), and d scales by the delta-coefficient -(Delta(s_l|n) + M_0).
FockVector f_op(long i, const FockVector& v);
FockVector e_op(long i, const FockVector& v);
FockVector t_op(long i, const FockVector& v, int power = 1);
FockVector d_op(const FockVector& v);

// The same shapes for U_p(sl_l-hat) through the n-label, with residues
// mod l and powers of p = -q^-1.
FockVector fdot_op(long j, const FockVector& v);
FockVector edot_op(long j, const FockVector& v);
FockVector tdot_op(long j, const FockVector& v, int power = 1);
FockVector ddot_op(const FockVector& v);

// Heisenberg generator B_m (m nonzero; positive m annihilates the vacuum).
FockVector boson(long m, const FockVector& v, long window_margin = 0);

// Componentwise boson: the level-one boson matrix elements applied inside
// component b of the l-label (side LSide, the operator B_m^{(b)}[n,1]) or of
// the n-label (side NSide, the operator B_m^{(a)}[1,l]); all other
// components and the charges are untouched.
enum class Side { LSide, NSide };
FockVector component_boson(long m, long b, const FockVector& v, Side side);

// Elementary and complete symmetric functions of the bosons:
// E_m = e_m(B_1, B_2, ...), H_m = h_m(B_1, B_2, ...); the tilde versions
// use B_{-1}, B_{-2}, ....  Zero for m < 0, identity for m = 0.
FockVector em_op(long m, const FockVector& v);
FockVector hm_op(long m, const FockVector& v);
FockVector em_tilde_op(long m, const FockVector& v);
FockVector hm_tilde_op(long m, const FockVector& v);

// The K-bilinear scalar product making the ket basis orthonormal.
Laurent scalar(const FockVector& u, const FockVector& v);

// The semi-linear prime involution |lambda, s> -> |lambda', -s>.
FockVector prime(const FockVector& v);

// gamma_m = m (1-q^{-2mn})(1-q^{2ml}) / ((1-q^{-2m})(1-q^{2m})), the central
// value of [B_m, B_{-m}]; requires m > 0.
Laurent gamma_factor(long m, long n, long l);

// Divides every coefficient by the integer d, throwing unless exact.
FockVector divide_exact(const FockVector& v, long d);

}  // namespace qfock
