#include "qfock/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qfock {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw std::invalid_argument("parts must be positive and weakly decreasing");
  }
}

long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<long> cols(parts_[0]);
  for (long j = 1; j <= parts_[0]; ++j) {
    long count = 0;
    for (long p : parts_)
      if (p >= j) ++count;
    cols[j - 1] = count;
  }
  return Partition(std::move(cols));
}

std::string Partition::str() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ']';
  return out.str();
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance compares equal sizes only");
  long pa = 0, pb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    pa += a.part(i);
    pb += b.part(i);
    if (pa > pb) return false;
  }
  return true;
}

long Multipartition::size() const {
  long s = 0;
  for (const auto& p : comps) s += p.size();
  return s;
}

std::string Multipartition::str() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) out << ',';
    out << comps[i].str();
  }
  out << ']';
  return out.str();
}

std::pair<Multipartition, Charges> conjugate_mp(const Multipartition& mp,
                                                const Charges& s) {
  const int r = mp.levels();
  std::vector<Partition> comps(r);
  Charges cs(r);
  for (int b = 0; b < r; ++b) {
    comps[b] = mp.comps[r - 1 - b].conjugate();
    cs[b] = -s[r - 1 - b];
  }
  return {Multipartition(std::move(comps)), std::move(cs)};
}

bool node_less(const Node& a, const Node& b, const Charges& s) {
  long ca = content(a, s), cb = content(b, s);
  if (ca != cb) return ca < cb;
  return a.comp < b.comp;
}

std::vector<std::pair<Node, NodeKind>> addable_removable(
    const Multipartition& mp, const Charges& s, long n, long i) {
  std::vector<std::pair<Node, NodeKind>> word;
  for (int b = 1; b <= mp.levels(); ++b) {
    const Partition& p = mp.comp(b);
    // Addable corners: row r gets a cell at column part(r)+1 whenever the
    // row above is strictly longer (row 1 and the first empty row always
    // qualify).
    for (int r = 1; r <= p.length() + 1; ++r) {
      if (r > 1 && p.part(r - 1) == p.part(r)) continue;
      Node g{r, static_cast<int>(p.part(r) + 1), b};
      if (residue(g, s, n) == i) word.push_back({g, NodeKind::Addable});
    }
    // Removable corners: last cell of a row strictly longer than the next.
    for (int r = 1; r <= p.length(); ++r) {
      if (p.part(r) == p.part(r + 1)) continue;
      Node g{r, static_cast<int>(p.part(r)), b};
      if (residue(g, s, n) == i) word.push_back({g, NodeKind::Removable});
    }
  }
  std::sort(word.begin(), word.end(),
            [&s](const auto& x, const auto& y) {
              return node_less(x.first, y.first, s);
            });
  return word;
}

Multipartition add_node(const Multipartition& mp, const Node& g) {
  if (g.comp < 1 || g.comp > mp.levels())
    throw std::invalid_argument("node component out of range");
  const Partition& p = mp.comp(g.comp);
  if (g.row < 1 || g.row > p.length() + 1 || g.col != p.part(g.row) + 1 ||
      (g.row > 1 && p.part(g.row - 1) == p.part(g.row)))
    throw std::invalid_argument("node is not addable");
  std::vector<long> parts = p.parts();
  if (g.row == p.length() + 1) parts.push_back(1);
  else ++parts[g.row - 1];
  Multipartition out = mp;
  out.comps[g.comp - 1] = Partition(std::move(parts));
  return out;
}

Multipartition remove_node(const Multipartition& mp, const Node& g) {
  if (g.comp < 1 || g.comp > mp.levels())
    throw std::invalid_argument("node component out of range");
  const Partition& p = mp.comp(g.comp);
  if (g.row < 1 || g.row > p.length() || g.col != p.part(g.row) ||
      p.part(g.row) == p.part(g.row + 1))
    throw std::invalid_argument("node is not removable");
  std::vector<long> parts = p.parts();
  --parts[g.row - 1];
  Multipartition out = mp;
  out.comps[g.comp - 1] = Partition(std::move(parts));
  return out;
}

Counts counts(const Multipartition& mp, const Charges& s, long n) {
  Counts c;
  c.N.assign(n, 0);
  c.M.assign(n, 0);
  for (int b = 1; b <= mp.levels(); ++b) {
    const Partition& p = mp.comp(b);
    for (int r = 1; r <= p.length(); ++r)
      for (long j = 1; j <= p.part(r); ++j)
        ++c.M[imod(s[b - 1] + j - r, n)];
  }
  for (long i = 0; i < n; ++i)
    for (const auto& [g, kind] : addable_removable(mp, s, n, i))
      c.N[i] += (kind == NodeKind::Addable) ? 1 : -1;
  return c;
}

namespace {
// The unique cell of mu not in lambda, validated.
Node single_cell_difference(const Multipartition& lambda,
                            const Multipartition& mu) {
  if (lambda.levels() != mu.levels())
    throw std::invalid_argument("level mismatch");
  Node found{};
  int cells = 0;
  for (int b = 1; b <= mu.levels(); ++b) {
    int len = std::max(lambda.comp(b).length(), mu.comp(b).length());
    for (int r = 1; r <= len; ++r) {
      long lo = lambda.comp(b).part(r), hi = mu.comp(b).part(r);
      if (hi < lo) throw std::invalid_argument("mu does not contain lambda");
      if (hi > lo) {
        cells += static_cast<int>(hi - lo);
        found = Node{r, static_cast<int>(hi), b};
      }
    }
  }
  if (cells != 1)
    throw std::invalid_argument("difference is not a single cell");
  return found;
}
}  // namespace

std::pair<long, long> hook_exponents(const Multipartition& lambda,
                                     const Multipartition& mu,
                                     const Charges& s, long n, long i) {
  Node g = single_cell_difference(lambda, mu);
  if (residue(g, s, n) != i)
    throw std::invalid_argument("added cell has the wrong residue");
  long above = 0, below = 0;
  for (const auto& [h, kind] : addable_removable(lambda, s, n, i)) {
    int delta = (kind == NodeKind::Addable) ? 1 : -1;
    if (node_less(g, h, s)) above += delta;
    else if (node_less(h, g, s)) below += delta;
  }
  return {above, below};
}

long delta_const(const Charges& s, long n) {
  long total = 0;
  for (long sb : s) {
    long i = imod(sb, n);
    long t = (sb - i) / n;
    total += i * t + n * t * (t - 1) / 2;
  }
  return total;
}

AffineWeight weight_of(const Multipartition& mp, const Charges& s, long n) {
  AffineWeight w;
  w.fund.assign(n, 0);
  for (long sb : s) ++w.fund[imod(sb, n)];
  w.delta = -delta_const(s, n);
  Counts c = counts(mp, s, n);
  // alpha_i = 2 Lambda_i - Lambda_{i-1} - Lambda_{i+1} (indices mod n)
  // + delta when i = 0; for n = 1 the Lambda parts cancel entirely.
  for (long i = 0; i < n; ++i) {
    w.fund[i] -= 2 * c.M[i];
    w.fund[imod(i - 1, n)] += c.M[i];
    w.fund[imod(i + 1, n)] += c.M[i];
  }
  w.delta -= c.M[0];
  return w;
}

AffineWeight dot_weight_of(const Multipartition& mp, const Charges& s, long n) {
  const int l = static_cast<int>(s.size());
  AffineWeight w;
  w.fund.assign(l, 0);
  w.fund[0] = n - s.front() + s.back();
  for (int j = 1; j < l; ++j) w.fund[j] = s[j - 1] - s[j];
  Counts c = counts(mp, s, n);
  w.delta = -(delta_const(s, n) + c.M[0]);
  return w;
}

}  // namespace qfock
