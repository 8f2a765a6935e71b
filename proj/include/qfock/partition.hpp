// Partitions, charged multipartitions, and the node combinatorics feeding the
// Fock-space formulas.
//
// A charged l-multipartition is an l-tuple of partitions together with an
// integer charge tuple (s_1,...,s_l).  A node (i,j,b) is a cell of the b-th
// component diagram; its content is s_b + j - i and its n-residue is the
// content mod n.  The total order on nodes (content first, then component)
// drives both the q-exponents of the Chevalley action (through the counts
// N_i^> and N_i^<) and the good-node selection of the crystal graph.
//
// The constant Delta(s|n) is the charge-dependent part of the affine weight;
// it is computed in closed integer form (writing s = i + nt the b-th summand
// is i*t + n*t*(t-1)/2), so no rational arithmetic ever appears.

#pragma once

#include <string>
#include <vector>

namespace qfock {

inline long imod(long x, long n) { return ((x % n) + n) % n; }

class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  long size() const;                 // number of boxes
  int length() const { return static_cast<int>(parts_.size()); }
  // Row lengths with the math convention: part(i) for i >= 1, zero beyond.
  long part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  const std::vector<long>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  // Lexicographic on row lengths; the canonical-basis tables order rows by
  // descending lex, i.e. by this comparison reversed.
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const;  // "[5,2]", "[]" for empty

private:
  std::vector<long> parts_;
};

// a <= b in dominance (partial sums), defined only between equal sizes.
bool dominance_leq(const Partition& a, const Partition& b);

struct Multipartition {
  std::vector<Partition> comps;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> c) : comps(std::move(c)) {}
  static Multipartition empty(int r) {
    return Multipartition(std::vector<Partition>(r));
  }

  int levels() const { return static_cast<int>(comps.size()); }
  long size() const;
  const Partition& comp(int b) const { return comps[b - 1]; }  // 1-based

  bool operator==(const Multipartition& o) const { return comps == o.comps; }
  bool operator!=(const Multipartition& o) const { return comps != o.comps; }
  bool operator<(const Multipartition& o) const { return comps < o.comps; }

  std::string str() const;  // "[[3],[]]"
};

using Charges = std::vector<long>;

// Component order reversed, each component conjugated, charges negated and
// reversed: the combinatorial shadow of the prime involution.
std::pair<Multipartition, Charges> conjugate_mp(const Multipartition& mp,
                                                const Charges& s);

struct Node {
  int row = 0, col = 0, comp = 0;  // all 1-based
  bool operator==(const Node& o) const {
    return row == o.row && col == o.col && comp == o.comp;
  }
};

inline long content(const Node& g, const Charges& s) {
  return s[g.comp - 1] + g.col - g.row;
}
inline long residue(const Node& g, const Charges& s, long n) {
  return imod(content(g, s), n);
}
// The total order: content, ties broken by component index.
bool node_less(const Node& a, const Node& b, const Charges& s);

enum class NodeKind { Addable, Removable };

// All addable and removable i-nodes of the multipartition, sorted ascending
// by node_less.  This is the A/R word the crystal rules cancel.
std::vector<std::pair<Node, NodeKind>> addable_removable(
    const Multipartition& mp, const Charges& s, long n, long i);

// The multipartition with the given addable node filled in, or the given
// removable node taken out.  Both throw if the node is not of the stated
// kind, since a mismatch means the caller's bookkeeping is wrong.
Multipartition add_node(const Multipartition& mp, const Node& g);
Multipartition remove_node(const Multipartition& mp, const Node& g);

struct Counts {
  std::vector<long> N;  // addable minus removable i-nodes, i = 0..n-1
  std::vector<long> M;  // i-nodes of the diagram
};
Counts counts(const Multipartition& mp, const Charges& s, long n);

// For mu = lambda plus one i-node gamma: the q-exponents of the Chevalley
// action, N_i^> (addable-minus-removable strictly above gamma) and N_i^<
// (strictly below).  Rejects inputs whose difference is not a single i-cell.
std::pair<long, long> hook_exponents(const Multipartition& lambda,
                                     const Multipartition& mu,
                                     const Charges& s, long n, long i);

long delta_const(const Charges& s, long n);

struct AffineWeight {
  std::vector<long> fund;  // coefficients of Lambda_0..Lambda_{n-1}
  long delta = 0;          // coefficient of the null root delta

  bool operator==(const AffineWeight& o) const {
    return fund == o.fund && delta == o.delta;
  }
};

// Weight per the Fock-space decomposition: -Delta(s|n) delta + sum Lambda_{s_b}
// - sum M_i alpha_i, expanded into (Lambda, delta) coordinates.
AffineWeight weight_of(const Multipartition& mp, const Charges& s, long n);

// The level-n weight of the same vector for the second (dotted) affine
// algebra, read from the l-side data: fundamental coefficients
// (n - s_1 + s_l, s_1 - s_2, ..., s_{l-1} - s_l) and delta coefficient
// -(Delta(s|n) + M_0).
AffineWeight dot_weight_of(const Multipartition& mp, const Charges& s, long n);

}  // namespace qfock
