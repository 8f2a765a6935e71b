#pragma once

// Indexations of the level-one Fock basis by charged multipartitions.
//
// A charged partition (lambda, s) is encoded by its beta sequence
// k_i = lambda_i + s - i + 1, a strictly decreasing sequence of integers
// that eventually runs through consecutive values s - i + 1.  Every k
// decomposes uniquely as
//
//     k = c + n(d - 1) - nl*m,   c in {1..n}, d in {1..l}, m in Z,
//
// so each beta entry occupies a slot (c, d) of the fundamental window
// {1..nl} shifted by m windows.  Reading the slots two ways yields two
// multi-component indexations of the same charged partition:
//
//   * grouping by d and recording c - n*m gives l beta sequences, hence
//     a charged l-multipartition (lambda_l, s_l);
//   * grouping by c and recording d - l*m gives a charged
//     n-multipartition (lambda_n, s_n).
//
// The second reading coincides with the classical n-quotient-and-core
// construction, because c only depends on k mod n and d - l*m is the
// position of k within its residue class.  Both directions are
// implemented here, together with their inverses, the window
// permutation sigma^s that swaps the two readings of a slot, and the
// relation tying the quotient charges to addable/removable node counts.

#include <utility>
#include <vector>

#include "qfock/partition.hpp"

namespace qfock {

// Unique decomposition k = c + n(d-1) - nl*m with c in {1..n}, d in {1..l}.
struct Slot {
    long c = 1;
    long d = 1;
    long m = 0;

    bool operator==(const Slot&) const = default;
};

Slot decompose(long k, long n, long l);

// Reassembles k from its slot coordinates.
long compose(const Slot& slot, long n, long l);

// First r beta numbers lambda_i + s - i + 1 of a charged partition.
std::vector<long> beta_numbers(const Partition& lambda, long s, long r);

// Inverse of beta_numbers: the ks must be strictly decreasing and agree
// with s - i + 1 from some index on (the values below the listed ones are
// implied to continue consecutively).  Throws if the prefix does not close
// off into a valid partition.
Partition partition_from_beta(const std::vector<long>& ks, long s);

// A charged multipartition, the common return type of both readings.
struct ChargedMP {
    Multipartition mp;
    Charges s;

    bool operator==(const ChargedMP&) const = default;
};

// The two slot readings and their inverses.  Charges always sum to s,
// and both directions are mutually inverse bijections
//   { (lambda, s) }  <-->  { (lambda_l, s_l) : sum s_l = s }   (levels l)
//   { (lambda, s) }  <-->  { (lambda_n, s_n) : sum s_n = s }   (levels n)
ChargedMP to_l_pair(const Partition& lambda, long s, long n, long l);
ChargedMP to_n_pair(const Partition& lambda, long s, long n, long l);
std::pair<Partition, long> from_l_pair(const ChargedMP& cm, long n, long l);
std::pair<Partition, long> from_n_pair(const ChargedMP& cm, long n, long l);

// The involution sigma^s on charged partitions: each beta slot keeps its
// window index m while its unit part c + n(d-1) is replaced by d + l(c-1).
// Applying to_l_pair after sigma_s is the same as applying to_n_pair
// directly, with the roles of n and l exchanged.
Partition sigma_s(const Partition& lambda, long s, long n, long l);

// Charges of the n-quotient recovered from node counts alone: they solve
// s_c - s_{c+1} = N_c(lambda | s; n) for c = 1..n-1 together with
// sum_c s_c = s, where N_c counts addable minus removable nodes of
// residue c of the charged partition.  Throws if the system has no
// integer solution (it always does when the inputs are consistent).
Charges quotient_charges_from_counts(const Partition& lambda, long s, long n);

}  // namespace qfock
