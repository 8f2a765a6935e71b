#pragma once

// Good nodes and the crystal graph of a higher-level Fock space.
//
// For a fixed color i, the addable and removable i-nodes of a charged
// multipartition are totally ordered by (content, component).  Cancelling
// adjacent RA pairs from that ascending word until none remain leaves a
// word of the shape A...AR...R; the greatest surviving A is the good
// addable i-node and the least surviving R is the good removable i-node.
// That boundary pair is the involutive choice: filling the good addable
// node makes it the good removable node of the result, and removing the
// good removable node makes it the good addable node of the result.
// Adding good addable nodes generates the arrows of the crystal graph of
// the Fock space, and the connected component of the empty multipartition
// is the crystal of the irreducible highest weight submodule.  Membership
// in that component is exactly the starred-row marking of the transition
// tables.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qfock/partition.hpp"

namespace qfock {

struct GoodNodes {
  std::optional<Node> addable;
  std::optional<Node> removable;
};

// The good addable and good removable i-node, when they exist.
GoodNodes good_nodes(const Multipartition& mp, const Charges& s, long n,
                     long i);

struct CrystalArrow {
  Multipartition source;
  Multipartition target;
  long color = 0;

  bool operator==(const CrystalArrow& o) const {
    return source == o.source && target == o.target && color == o.color;
  }
};

struct CrystalComponent {
  long n = 1, l = 1;
  Charges s;
  std::set<Multipartition> members;
  std::vector<CrystalArrow> arrows;  // all arrows between members
};

// Breadth-first closure of the empty multipartition under good-node
// additions of every color, up to the given total size.
CrystalComponent crystal_component(long n, long l, const Charges& s,
                                   long max_size);

// DOT digraph of the component, edges labelled and colored by the arrow
// color.
std::string crystal_dot(const CrystalComponent& g);

}  // namespace qfock
