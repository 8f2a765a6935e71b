#include "qfock/hecke.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qfock/indexing.hpp"

namespace qfock {

namespace {

// Euclidean digits zeta = c + n*mu with c in 1..n.
void digits(const CosetKey& zeta, long n, std::vector<long>& c,
            std::vector<long>& mu) {
  c.resize(zeta.size());
  mu.resize(zeta.size());
  for (size_t i = 0; i < zeta.size(); ++i) {
    long ci = ((zeta[i] % n) + n) % n;
    if (ci == 0) ci = n;
    c[i] = ci;
    mu[i] = (zeta[i] - ci) / n;
  }
}

Laurent q_minus_qinv() { return Laurent::q(1) - Laurent::q(-1); }

std::string key_str(const CosetKey& zeta) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < zeta.size(); ++i) {
    if (i) os << ',';
    os << zeta[i];
  }
  os << ')';
  return os.str();
}

// The swapped key zeta . s_i, with the affine wrap for i = 0, together
// with the compared pair; shared by the action, the descent scan and
// the bar recursion.
struct PairView {
  long lhs, rhs;
  CosetKey swapped;
};

PairView pair_at(const CosetKey& zeta, long n, long i) {
  long r = static_cast<long>(zeta.size());
  PairView pv{0, 0, zeta};
  if (i == 0) {
    pv.lhs = zeta[r - 1] - n;
    pv.rhs = zeta[0];
    pv.swapped[0] = zeta[r - 1] - n;
    pv.swapped[r - 1] = zeta[0] + n;
  } else {
    pv.lhs = zeta[i - 1];
    pv.rhs = zeta[i];
    std::swap(pv.swapped[i - 1], pv.swapped[i]);
  }
  return pv;
}

long rank_of(const CosetVector& v) {
  return v.terms.empty() ? 0 : static_cast<long>(v.terms.begin()->first.size());
}

}  // namespace

void CosetVector::add(const CosetKey& key, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void CosetVector::add_scaled(const CosetVector& w, const Laurent& c) {
  for (const auto& [key, coeff] : w.terms) add(key, coeff * c);
}

CosetVector coset_unit(long n, const CosetKey& zeta) {
  CosetVector v;
  v.n = n;
  v.add(zeta, Laurent::constant(1));
  return v;
}

CosetKey anchor_of(const CosetKey& zeta, long n) {
  std::vector<long> c, mu;
  digits(zeta, n, c, mu);
  std::sort(c.begin(), c.end());
  return c;
}

CosetVector act_Ti(const CosetVector& v, long i) {
  long r = rank_of(v);
  if (!v.terms.empty() && (r < 2 || i < 0 || i >= r))
    throw std::invalid_argument("generator index out of range");
  CosetVector out;
  out.n = v.n;
  for (const auto& [zeta, c] : v.terms) {
    PairView pv = pair_at(zeta, v.n, i);
    if (pv.lhs < pv.rhs) {
      out.add(pv.swapped, c);
    } else if (pv.lhs == pv.rhs) {
      out.add(zeta, c * Laurent::q(-1));
    } else {
      out.add(pv.swapped, c);
      out.add(zeta, -(c * q_minus_qinv()));
    }
  }
  return out;
}

CosetVector act_Tpi(const CosetVector& v) {
  CosetVector out;
  out.n = v.n;
  for (const auto& [zeta, c] : v.terms) {
    CosetKey rot(zeta.begin() + 1, zeta.end());
    rot.push_back(zeta.front() + v.n);
    out.add(rot, c);
  }
  return out;
}

long coset_length(const CosetKey& zeta, long n) {
  std::vector<long> c, mu;
  digits(zeta, n, c, mu);
  long total = 0;
  for (size_t i = 0; i < zeta.size(); ++i)
    for (size_t j = i + 1; j < zeta.size(); ++j) {
      if (c[i] > c[j] && mu[i] >= mu[j]) ++total;
      if (c[i] < c[j] && mu[i] < mu[j]) ++total;
      if (mu[i] > mu[j]) total += mu[i] - mu[j];
      if (mu[i] < mu[j]) total += mu[j] - mu[i] - 1;
    }
  return total;
}

std::vector<long> descents(const CosetKey& zeta, long n) {
  std::vector<long> out;
  if (zeta.size() < 2) return out;
  for (long i = 0; i < static_cast<long>(zeta.size()); ++i) {
    PairView pv = pair_at(zeta, n, i);
    if (pv.lhs > pv.rhs) out.push_back(i);
  }
  return out;
}

BarCoset::BarCoset(long n, DescentPick pick) : n_(n), pick_(pick) {}

const CosetVector& BarCoset::key(const CosetKey& zeta) {
  auto it = memo_.find(zeta);
  if (it != memo_.end()) return it->second;
  std::vector<long> ds = descents(zeta, n_);
  CosetVector result;
  if (ds.empty()) {
    // No descent means the key is a rotation power of its anchor, and
    // those basis vectors are bar-fixed.
    result = coset_unit(n_, zeta);
  } else {
    long i = (pick_ == DescentPick::First) ? ds.front() : ds.back();
    CosetVector shorter = key(pair_at(zeta, n_, i).swapped);
    result = act_Ti(shorter, i);
    result.add_scaled(shorter, q_minus_qinv());
  }
  return memo_.emplace(zeta, std::move(result)).first->second;
}

CosetVector BarCoset::of(const CosetVector& v) {
  CosetVector out;
  out.n = v.n;
  for (const auto& [zeta, c] : v.terms) out.add_scaled(key(zeta), c.bar());
  return out;
}

std::map<CosetKey, Laurent> kl_module_basis(long n, const CosetKey& zeta,
                                            BasisSign sign, BarCoset* bar) {
  BarCoset local(n);
  BarCoset* B = bar ? bar : &local;

  // Transitive support closure of the bar involution over the seed.
  std::set<CosetKey> keys{zeta};
  std::vector<CosetKey> work{zeta};
  while (!work.empty()) {
    CosetKey z = std::move(work.back());
    work.pop_back();
    const CosetVector& bz = B->key(z);
    for (const auto& [k, c] : bz.terms)
      if (keys.insert(k).second) work.push_back(k);
  }

  // Verify unitriangularity for the length while caching the lengths.
  std::map<CosetKey, long> len;
  for (const CosetKey& z : keys) len[z] = coset_length(z, n);
  for (const CosetKey& z : keys)
    for (const auto& [k, c] : B->key(z).terms) {
      if (k == z) {
        if (!(c == Laurent::constant(1)))
          throw std::logic_error("bar on the coset module lost its diagonal");
      } else if (len[k] >= len[z]) {
        throw std::logic_error("bar on the coset module is not triangular");
      }
    }
  // Split-and-propagate solve, processing downwards in length: the
  // defect of a candidate coefficient against its bar image is a known
  // combination of the strictly longer ones.
  std::vector<CosetKey> order(keys.begin(), keys.end());
  std::sort(order.begin(), order.end(),
            [&](const CosetKey& x, const CosetKey& y) {
              return len[x] != len[y] ? len[x] > len[y] : x < y;
            });
  std::map<CosetKey, Laurent> P;
  P[zeta] = Laurent::constant(1);
  for (const CosetKey& tau : order) {
    if (tau == zeta) continue;
    Laurent rho;
    for (const auto& [eta, coeff] : P) {
      if (len[eta] <= len[tau]) continue;
      auto hit = B->key(eta).terms.find(tau);
      if (hit != B->key(eta).terms.end()) rho += coeff.bar() * hit->second;
    }
    if (!(rho.bar() == -rho) || rho.coeff(0) != 0)
      throw std::logic_error("coset solve met a remainder that is not "
                             "bar-antisymmetric");
    Laurent val =
        sign == BasisSign::Plus ? split_positive(rho) : split_negative(rho);
    if (!val.is_zero()) P[tau] = val;
  }
  return P;
}

WedgeCoset zeta_of(const std::vector<long>& word, long n, long l) {
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] <= word[i + 1])
      throw std::invalid_argument("wedge word must be strictly decreasing");
  long r = static_cast<long>(word.size());
  std::vector<long> c(r), d(r), val(r);
  for (long i = 0; i < r; ++i) {
    Slot slot = decompose(word[i], n, l);
    c[i] = slot.c;
    d[i] = slot.d;
    val[i] = slot.c - n * slot.m;
  }
  WedgeCoset out;
  out.a = c;
  std::sort(out.a.begin(), out.a.end());
  out.b = d;
  std::sort(out.b.begin(), out.b.end(), std::greater<>());
  out.zeta.resize(r);
  long pos = 0;
  for (long level = l; level >= 1; --level)
    for (long i = 0; i < r; ++i)
      if (d[i] == level) out.zeta[pos++] = val[i];
  // Within one level the values inherit the strict decrease of the word,
  // so the key lands in the dominant chamber of the level word.
  for (long i = 0; i + 1 < r; ++i)
    if (out.b[i] == out.b[i + 1] && out.zeta[i] <= out.zeta[i + 1])
      throw std::logic_error("wedge key is not dominant for its level word");
  return out;
}

namespace {

// Permutations are stored as position maps p with (x . p)_j = x_{p(j)};
// composition p q corresponds to acting by p first.
using Perm = std::vector<long>;

CosetKey apply_perm(const CosetKey& x, const Perm& p) {
  CosetKey out(x.size());
  for (size_t j = 0; j < x.size(); ++j) out[j] = x[p[j]];
  return out;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (size_t j = 0; j < p.size(); ++j) out[j] = p[q[j]];
  return out;
}

long inversions(const Perm& p) {
  long count = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

// Runs of equal values of the (sorted) level word b.
std::vector<std::pair<long, long>> runs_of(const std::vector<long>& b) {
  std::vector<std::pair<long, long>> runs;
  for (long i = 0; i < static_cast<long>(b.size());) {
    long j = i;
    while (j < static_cast<long>(b.size()) && b[j] == b[i]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  return runs;
}

// The longest element of the stabilizer of b: reversal of every run.
Perm longest_in_stabilizer(const std::vector<long>& b) {
  Perm p(b.size());
  for (auto [lo, hi] : runs_of(b))
    for (long j = lo; j < hi; ++j) p[j] = lo + hi - 1 - j;
  return p;
}

// Every element of the stabilizer of b: the product of the symmetric
// groups of the runs, enumerated run by run.
std::vector<Perm> stabilizer_of(const std::vector<long>& b) {
  std::vector<Perm> out;
  Perm base(b.size());
  for (size_t j = 0; j < b.size(); ++j) base[j] = static_cast<long>(j);
  auto runs = runs_of(b);
  std::vector<Perm> acc{base};
  for (auto [lo, hi] : runs) {
    std::vector<long> block(base.begin() + lo, base.begin() + hi);
    std::sort(block.begin(), block.end());
    std::vector<Perm> next;
    do {
      for (const Perm& p : acc) {
        Perm q = p;
        std::copy(block.begin(), block.end(), q.begin() + lo);
        next.push_back(q);
      }
    } while (std::next_permutation(block.begin(), block.end()));
    acc = std::move(next);
  }
  return acc;
}

Laurent minus_q_pow(long e) {
  return Laurent::monomial((e % 2 == 0) ? 1 : -1, e);
}

}  // namespace

CrosscheckReport crosscheck_kl(long n, long l, const Charges& s, long k,
                               long r) {
  // Orbit supports grow quickly with the rank; the oracle validates desk
  // scale computations and stops where a laptop would.
  if (r > 6) throw std::invalid_argument("oracle rank is capped at 6");
  std::vector<TransitionBlock> plus =
      canonical_basis(n, l, s, k, BasisSign::Plus);
  std::vector<TransitionBlock> minus =
      canonical_basis(n, l, s, k, BasisSign::Minus);
  long stot = 0;
  for (long sb : s) stot += sb;

  CrosscheckReport rep;
  std::ostringstream msg;
  BarCoset barc(n);
  BarCoset* bc = &barc;

  for (size_t bi = 0; bi < plus.size(); ++bi) {
    const TransitionBlock& bp = plus[bi];
    const TransitionBlock& bm = minus[bi];
    size_t N = bp.rows.size();

    // Coset data per row; a row is covered when its first r wedge
    // letters determine the whole ket.
    std::vector<std::optional<WedgeCoset>> wc(N);
    for (size_t t = 0; t < N; ++t) {
      const Partition& u = bp.rows[t].underlying;
      if (u.length() > r) continue;
      wc[t] = zeta_of(beta_numbers(u, stot, r), n, l);
    }

    // Rows split by their (anchor, level word); the theorem predicts
    // vanishing across distinct groups.
    auto same_group = [&](size_t x, size_t y) {
      return wc[x]->a == wc[y]->a && wc[x]->b == wc[y]->b;
    };

    long block_pairs = 0;
    for (size_t c = 0; c < N; ++c) {
      if (!wc[c]) {
        rep.skipped += 2 * static_cast<long>(N);
        continue;
      }
      const CosetKey& xi = wc[c]->zeta;
      const std::vector<long>& b = wc[c]->b;
      Perm wb = longest_in_stabilizer(b);
      std::vector<Perm> stab = stabilizer_of(b);
      std::map<CosetKey, Laurent> Pm =
          kl_module_basis(n, xi, BasisSign::Minus, bc);
      std::map<CosetKey, Laurent> Pp =
          kl_module_basis(n, apply_perm(xi, wb), BasisSign::Plus, bc);

      for (size_t t = 0; t < N; ++t) {
        if (!wc[t]) {
          rep.skipped += 2;
          continue;
        }
        Laurent want_minus = bm.cols[c][t];
        Laurent want_plus = bp.cols[c][t];
        Laurent got_minus, got_plus;
        if (same_group(c, t)) {
          const CosetKey& eta = wc[t]->zeta;
          auto hit = Pm.find(eta);
          if (hit != Pm.end()) got_minus = hit->second;
          for (const Perm& v : stab) {
            auto ph = Pp.find(apply_perm(eta, compose(wb, v)));
            if (ph != Pp.end())
              got_plus += minus_q_pow(inversions(v)) * ph->second;
          }
        }
        // Distinct groups keep the zero-initialized oracle values: the
        // wedge side must vanish there too.
        rep.pairs += 2;
        block_pairs += 2;
        if (!(got_minus == want_minus) || !(got_plus == want_plus)) {
          rep.ok = false;
          msg << "mismatch in block (";
          for (size_t i = 0; i < bp.weight.size(); ++i)
            msg << (i ? "," : "") << bp.weight[i];
          msg << "), column " << bp.rows[c].mp.str() << " xi="
              << key_str(xi) << ", row " << bp.rows[t].mp.str() << " eta="
              << key_str(wc[t]->zeta) << ": wedge minus "
              << want_minus.str() << " vs oracle " << got_minus.str()
              << "; wedge plus " << want_plus.str() << " vs oracle "
              << got_plus.str() << "\n";
        }
      }
    }
    msg << "block (";
    for (size_t i = 0; i < bp.weight.size(); ++i)
      msg << (i ? "," : "") << bp.weight[i];
    msg << "): " << N << " rows, " << block_pairs << " coefficients\n";
  }
  msg << "degree " << k << " rank " << r << ": " << rep.pairs
      << " coefficients compared, " << rep.skipped << " skipped, "
      << (rep.ok ? "all equal" : "MISMATCH");
  rep.message = msg.str();
  return rep;
}

}  // namespace qfock
