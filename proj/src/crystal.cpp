#include "qfock/crystal.hpp"

#include <sstream>
#include <stdexcept>

namespace qfock {

GoodNodes good_nodes(const Multipartition& mp, const Charges& s, long n,
                     long i) {
  if (i < 0 || i >= n) throw std::invalid_argument("color out of range");
  // One left-to-right pass over the ascending word.  A removable node is
  // pushed as pending; an addable node cancels the most recent pending
  // removable (that pair is adjacent once earlier cancellations are taken
  // out), and survives only when nothing is pending.  Survivors then read
  // A...AR...R, and the good pair is the inner boundary of that shape: the
  // greatest surviving addable and the least surviving removable.  Only
  // this choice is involutive, i.e. adding the good addable node turns it
  // into the good removable node of the result and vice versa.
  GoodNodes out;
  std::vector<Node> pending;
  for (const auto& [node, kind] : addable_removable(mp, s, n, i)) {
    if (kind == NodeKind::Removable) {
      pending.push_back(node);
    } else if (!pending.empty()) {
      pending.pop_back();
    } else {
      out.addable = node;
    }
  }
  if (!pending.empty()) out.removable = pending.front();
  return out;
}

CrystalComponent crystal_component(long n, long l, const Charges& s,
                                   long max_size) {
  if (static_cast<long>(s.size()) != l)
    throw std::invalid_argument("charge length does not match the level");
  CrystalComponent g;
  g.n = n;
  g.l = l;
  g.s = s;
  std::vector<Multipartition> frontier{Multipartition::empty(static_cast<int>(l))};
  g.members.insert(frontier.front());
  for (long size = 0; size < max_size; ++size) {
    std::set<Multipartition> next;
    for (const Multipartition& v : frontier) {
      for (long i = 0; i < n; ++i) {
        const GoodNodes gn = good_nodes(v, s, n, i);
        if (!gn.addable) continue;
        Multipartition target = add_node(v, *gn.addable);
        g.arrows.push_back({v, target, i});
        if (g.members.insert(target).second) next.insert(std::move(target));
      }
    }
    frontier.assign(next.begin(), next.end());
  }
  return g;
}

std::string crystal_dot(const CrystalComponent& g) {
  static const char* palette[] = {"red",    "blue",  "forestgreen", "orange",
                                  "purple", "brown", "cadetblue",   "magenta"};
  std::ostringstream out;
  out << "digraph crystal {\n";
  out << "  label=\"n=" << g.n << " l=" << g.l << " s=(";
  for (std::size_t b = 0; b < g.s.size(); ++b)
    out << (b ? "," : "") << g.s[b];
  out << ")\";\n  node [shape=box];\n";
  for (const Multipartition& v : g.members)
    out << "  \"" << v.str() << "\";\n";
  for (const CrystalArrow& a : g.arrows)
    out << "  \"" << a.source.str() << "\" -> \"" << a.target.str()
        << "\" [label=\"" << a.color << "\", color=\""
        << palette[a.color % 8] << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace qfock
