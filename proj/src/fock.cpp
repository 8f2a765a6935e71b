#include "qfock/fock.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qfock {

namespace {

void check_same_space(const FockVector& a, const FockVector& b) {
  if (a.n != b.n || a.l != b.l || a.s != b.s)
    throw std::invalid_argument("Fock vectors live in different spaces");
}

void check_index(long i, long bound, const char* what) {
  if (i < 0 || i >= bound) throw std::invalid_argument(what);
}

}  // namespace

FockVector& FockVector::operator+=(const FockVector& o) {
  check_same_space(*this, o);
  for (const auto& [key, c] : o.terms) add(key, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  check_same_space(*this, o);
  for (const auto& [key, c] : o.terms) add(key, -c);
  return *this;
}

FockVector FockVector::scaled(const Laurent& c) const {
  FockVector r(n, l, s);
  if (c.is_zero()) return r;
  for (const auto& [key, k] : terms) r.terms[key] = k * c;
  return r;
}

std::string FockVector::str() const {
  std::ostringstream out;
  out << "Fock(n=" << n << ",l=" << l << ",s=" << s << ")";
  for (const auto& [key, c] : terms)
    out << "\n  " << key.str() << " : " << c.str();
  return out.str();
}

FockVector bar(const FockVector& v, long window_margin) {
  FockVector out(v.n, v.l, v.s);
  for (const auto& [lam, c] : v.terms) {
    const long r = lam.size() + window_margin;
    const Word window = beta_numbers(lam, v.s, r);
    const Laurent cb = c.bar();
    for (const auto& [word, k] : bar_word(window, v.n, v.l))
      out.add(partition_from_beta(word, v.s), cb * k);
  }
  return out;
}

namespace {

// Shared body of the four node operators: iterate over the addable or
// removable i-nodes of each ket's multipartition label and weight the
// modified ket by base^(+-hook exponent).
FockVector node_op(long i, const FockVector& v, bool lside, bool raising) {
  const long modulus = lside ? v.n : v.l;
  check_index(i, modulus, "node operator index out of range");
  FockVector out(v.n, v.l, v.s);
  for (const auto& [lam, c] : v.terms) {
    const ChargedMP cm = lside ? to_l_pair(lam, v.s, v.n, v.l)
                               : to_n_pair(lam, v.s, v.n, v.l);
    for (const auto& [g, kind] : addable_removable(cm.mp, cm.s, modulus, i)) {
      long e;
      Multipartition target;
      if (!raising && kind == NodeKind::Addable) {
        target = add_node(cm.mp, g);
        e = hook_exponents(cm.mp, target, cm.s, modulus, i).first;
      } else if (raising && kind == NodeKind::Removable) {
        target = remove_node(cm.mp, g);
        e = -hook_exponents(target, cm.mp, cm.s, modulus, i).second;
      } else {
        continue;
      }
      const Laurent w = lside ? Laurent::q(e) : Laurent::p(e);
      const auto [key, s2] =
          lside ? from_l_pair({target, cm.s}, v.n, v.l)
                : from_n_pair({target, cm.s}, v.n, v.l);
      assert(s2 == v.s);
      (void)s2;
      out.add(key, c * w);
    }
  }
  return out;
}

FockVector diagonal_t(long i, const FockVector& v, int power, bool lside) {
  const long modulus = lside ? v.n : v.l;
  check_index(i, modulus, "torus operator index out of range");
  FockVector out(v.n, v.l, v.s);
  for (const auto& [lam, c] : v.terms) {
    const ChargedMP cm = lside ? to_l_pair(lam, v.s, v.n, v.l)
                               : to_n_pair(lam, v.s, v.n, v.l);
    const long e = power * counts(cm.mp, cm.s, modulus).N[i];
    out.add(lam, c * (lside ? Laurent::q(e) : Laurent::p(e)));
  }
  return out;
}

FockVector diagonal_d(const FockVector& v, bool lside) {
  FockVector out(v.n, v.l, v.s);
  for (const auto& [lam, c] : v.terms) {
    const ChargedMP cm = lside ? to_l_pair(lam, v.s, v.n, v.l)
                               : to_n_pair(lam, v.s, v.n, v.l);
    const long modulus = lside ? v.n : v.l;
    const long eig =
        -(delta_const(cm.s, modulus) + counts(cm.mp, cm.s, modulus).M[0]);
    out.add(lam, c * Laurent::constant(eig));
  }
  return out;
}

}  // namespace

FockVector f_op(long i, const FockVector& v) {
  return node_op(i, v, true, false);
}
FockVector e_op(long i, const FockVector& v) {
  return node_op(i, v, true, true);
}
FockVector t_op(long i, const FockVector& v, int power) {
  return diagonal_t(i, v, power, true);
}
FockVector d_op(const FockVector& v) { return diagonal_d(v, true); }

FockVector fdot_op(long j, const FockVector& v) {
  return node_op(j, v, false, false);
}
FockVector edot_op(long j, const FockVector& v) {
  return node_op(j, v, false, true);
}
FockVector tdot_op(long j, const FockVector& v, int power) {
  return diagonal_t(j, v, power, false);
}
FockVector ddot_op(const FockVector& v) { return diagonal_d(v, false); }

FockVector boson(long m, const FockVector& v, long window_margin) {
  if (m == 0) throw std::invalid_argument("boson index must be nonzero");
  const long w = v.n * v.l;
  FockVector out(v.n, v.l, v.s);
  for (const auto& [lam, c] : v.terms) {
    const long r = lam.size() + w * std::labs(m) + window_margin;
    const Word base = beta_numbers(lam, v.s, r);
    const long floor_value = v.s - r;  // topmost letter of the vacuum tail
    WedgeVector shifted;
    for (long j = 0; j < r; ++j) {
      Word word = base;
      word[j] -= w * m;
      // A letter pushed down into the dense tail duplicates one of its
      // entries, so the whole term vanishes.
      if (m > 0 && word[j] <= floor_value) continue;
      auto [it, fresh] = shifted.try_emplace(std::move(word), c);
      if (!fresh) it->second += c;
    }
    for (const auto& [word, k] : straighten(shifted, v.n, v.l))
      out.add(partition_from_beta(word, v.s), k);
  }
#ifndef NDEBUG
  if (window_margin == 0) assert(out == boson(m, v, w));
#endif
  return out;
}

FockVector component_boson(long m, long b, const FockVector& v, Side side) {
  const bool lside = side == Side::LSide;
  const long levels = lside ? v.l : v.n;
  if (b < 1 || b > levels)
    throw std::invalid_argument("component index out of range");
  FockVector out(v.n, v.l, v.s);
  for (const auto& [lam, c] : v.terms) {
    const ChargedMP cm = lside ? to_l_pair(lam, v.s, v.n, v.l)
                               : to_n_pair(lam, v.s, v.n, v.l);
    // The defining matrix elements live in the level-one theory of the
    // chosen side: (n,1) at charge s_b, or (1,l) at charge s_a.
    FockVector inner(lside ? v.n : 1, lside ? 1 : v.l, cm.s[b - 1]);
    inner.terms[cm.mp.comp(b)] = Laurent::constant(1);
    for (const auto& [mu, k] : boson(m, inner).terms) {
      Multipartition target = cm.mp;
      target.comps[b - 1] = mu;
      const auto [key, s2] =
          lside ? from_l_pair({target, cm.s}, v.n, v.l)
                : from_n_pair({target, cm.s}, v.n, v.l);
      assert(s2 == v.s);
      (void)s2;
      out.add(key, c * k);
    }
  }
  return out;
}

namespace {

// Newton's identities: m e_m = sum_{i=1..m} (-1)^{i-1} p_i e_{m-i} and
// m h_m = sum_{i=1..m} p_i h_{m-i}, with the power sums p_i realized by
// B_{+-i}.  The division by m is exact on the image.
FockVector newton(long m, const FockVector& v, bool elementary, int sign) {
  if (m < 0) return FockVector(v.n, v.l, v.s);
  if (m == 0) return v;
  FockVector acc(v.n, v.l, v.s);
  for (long i = 1; i <= m; ++i) {
    const FockVector t = newton(m - i, boson(sign * i, v), elementary, sign);
    if (elementary && i % 2 == 0) acc -= t;
    else acc += t;
  }
  return divide_exact(acc, m);
}

}  // namespace

FockVector em_op(long m, const FockVector& v) { return newton(m, v, true, 1); }
FockVector hm_op(long m, const FockVector& v) { return newton(m, v, false, 1); }
FockVector em_tilde_op(long m, const FockVector& v) {
  return newton(m, v, true, -1);
}
FockVector hm_tilde_op(long m, const FockVector& v) {
  return newton(m, v, false, -1);
}

Laurent scalar(const FockVector& u, const FockVector& v) {
  check_same_space(u, v);
  Laurent r;
  const bool u_smaller = u.terms.size() <= v.terms.size();
  const auto& small = u_smaller ? u.terms : v.terms;
  const auto& big = u_smaller ? v.terms : u.terms;
  for (const auto& [key, c] : small) {
    auto it = big.find(key);
    if (it != big.end()) r += c * it->second;
  }
  return r;
}

FockVector prime(const FockVector& v) {
  FockVector out(v.n, v.l, -v.s);
  for (const auto& [lam, c] : v.terms) out.add(lam.conjugate(), c.bar());
  return out;
}

Laurent gamma_factor(long m, long n, long l) {
  if (m <= 0) throw std::invalid_argument("gamma_factor needs m > 0");
  // The cyclotomic-like quotients are geometric sums, so no division is
  // needed: (1-q^{-2mn})/(1-q^{-2m}) = sum_a q^{-2ma}, a = 0..n-1.
  Laurent qs, ps;
  for (long a = 0; a < n; ++a) qs += Laurent::q(-2 * m * a);
  for (long b = 0; b < l; ++b) ps += Laurent::q(2 * m * b);
  return qs * ps * Laurent::constant(m);
}

FockVector divide_exact(const FockVector& v, long d) {
  if (d == 0) throw std::invalid_argument("division by zero");
  FockVector out(v.n, v.l, v.s);
  for (const auto& [key, c] : v.terms) {
    Laurent q;
    for (const auto& [e, k] : c.terms()) {
      if (k % d != 0)
        throw std::logic_error("coefficient not divisible as expected");
      q += Laurent::monomial(Int(k / d), e);
    }
    out.terms[key] = q;
  }
  return out;
}

}  // namespace qfock
