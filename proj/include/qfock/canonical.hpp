#pragma once

// Transition matrices between the standard and the canonical bases.
//
// At a fixed level, charge and degree, the kets split into finite weight
// blocks (grouped by their residue multiplicities M_0..M_{n-1}).  The bar
// involution preserves each block and is unitriangular with respect to the
// descending lexicographic order of underlying partitions, a refinement of
// the dominance order that governs its support.  The two canonical bases
// are the unique bar-fixed families congruent to the kets modulo q (resp.
// q^-1) times the lattice they span; their coefficients are obtained by a
// columnwise triangular solve whose only nontrivial step is splitting a
// bar-antisymmetric Laurent polynomial into its positive or negative half.
//
// Matrices are stored by columns: a column is the expansion of one
// canonical element over the kets labelling the rows.  The dual basis is
// the transposed inverse of the plus matrix, and the inversion identity
// ties the plus matrix at (s, q) to the minus matrix of the conjugate
// charge at (s', q^-1).

#include <string>
#include <vector>

#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"

namespace qfock {

struct TransitionRow {
  Multipartition mp;     // the l-label of the ket
  Partition underlying;  // the same ket as a charged partition
  bool in_crystal = false;  // member of the component of the empty ket
};

struct TransitionBlock {
  long n = 1, l = 1, k = 0;
  Charges s;
  std::vector<long> weight;  // M_0..M_{n-1}, constant on the block
  std::vector<TransitionRow> rows;
  // cols[c][r] is the coefficient of the row-r ket in the column-c vector.
  std::vector<std::vector<Laurent>> cols;
};

enum class BasisSign { Plus, Minus };

// Bar of every degree-k ket of the Fock space with charge s, grouped into
// weight blocks with unitriangular column expansions.  Columns are
// independent, so threads > 1 computes them concurrently; the result does
// not depend on the thread count.
std::vector<TransitionBlock> r_matrix(long n, long l, const Charges& s,
                                      long k, long threads = 1);

// The canonical basis of the chosen sign; same block and row layout as
// r_matrix.  Throws logic_error if the triangular solve meets a remainder
// that is not bar-antisymmetric, which would mean the R-matrix is wrong.
std::vector<TransitionBlock> canonical_basis(long n, long l, const Charges& s,
                                             long k, BasisSign sign,
                                             long threads = 1);

// Transposed inverse of a plus block, in the block's own row order.
std::vector<std::vector<Laurent>> dual_basis(const TransitionBlock& plus);

// Checks the inversion identity relating the plus matrices at charge s to
// the minus matrices at the conjugate charge: for all degree-k labels,
// sum_nu Dminus_{lambda', nu'}(s'|q^-1) Dplus_{mu, nu}(s|q) = delta.
// Reports the first discrepancy, or a success summary, through message.
bool verify_inversion(long n, long l, const Charges& s, long k,
                      std::string* message = nullptr);

// Whether every entry lies in Z_{>=0}[q] (plus) or Z_{>=0}[p] (minus).
// This positivity is only suggested, never proved, by the printed tables,
// so callers treat a failure as a warning rather than an error.
bool entries_nonnegative(const TransitionBlock& block, BasisSign sign);

}  // namespace qfock
