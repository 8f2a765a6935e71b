// Sparse exact Laurent polynomials in one variable q with arbitrary-precision
// integer coefficients.
//
// Everything downstream (straightening coefficients, transition matrices,
// Kazhdan-Lusztig style triangular solves) lives in the ring Z[q, q^-1].
// Three operations beyond plain ring arithmetic matter:
//
//   bar        the involution q -> q^-1, the engine of all bar-involutions;
//   split_*    given r with bar(r) = -r, the unique f supported in strictly
//              positive (resp. negative) exponents with f - bar(f) = r.  This
//              is the step that makes the canonical-basis recursion have a
//              unique solution;
//   in_p       rewriting in the variable p = -q^-1, used for the minus-basis
//              tables which are traditionally displayed in p.
//
// Values are immutable in spirit: all operations return fresh objects, and a
// stored zero coefficient is never kept, so equality is map equality.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfock {

using Int = boost::multiprecision::cpp_int;

class Laurent {
public:
  Laurent() = default;

  static Laurent constant(Int c) { return monomial(std::move(c), 0); }
  static Laurent monomial(Int c, long e) {
    Laurent r;
    if (c != 0) r.terms_[e] = std::move(c);
    return r;
  }
  // q^e, so q() is the variable itself.
  static Laurent q(long e = 1) { return monomial(1, e); }
  // (-q^-1)^e, the variable p raised to a power.
  static Laurent p(long e = 1) { return monomial((e % 2 == 0) ? 1 : -1, -e); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Int>& terms() const { return terms_; }

  Int coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }
  // Exponent range; both require a nonzero value.
  long min_exp() const { check_nonzero(); return terms_.begin()->first; }
  long max_exp() const { check_nonzero(); return terms_.rbegin()->first; }

  Laurent operator-() const {
    Laurent r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent scaled(const Int& c) const {
    Laurent r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
  }
  // Multiply by the monomial c*q^e without building a temporary.
  Laurent shifted(long e, const Int& c = 1) const {
    Laurent r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k + e] = v * c;
    return r;
  }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }
  // An arbitrary total order so Laurent can key ordered containers.
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  // q -> q^-1 (negate every exponent).
  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  // Rewrite in p = -q^-1: the unique b with b(-q^-1) = this(q).  Termwise
  // c*q^e = c*(-1)^e p^-e.  Involutive, and a ring homomorphism.
  Laurent in_p() const {
    Laurent r;
    for (const auto& [e, c] : terms_)
      r.terms_[-e] = (e % 2 == 0) ? c : -c;
    return r;
  }

  Int eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  // Exact division, throwing unless the remainder is zero.  Only needed for
  // the Newton-identity symmetric-function combinations (division by small
  // integers) and the gamma_m closed form (division by cyclotomic-like
  // factors), both of which are exact by construction.
  Laurent divided_by(const Laurent& d) const;

  // "-q^-2 + 2 + q^3", ascending exponents; var switches the displayed
  // letter (the caller is responsible for converting to p-coefficients
  // first via in_p()).
  std::string str(char var = 'q') const;

  std::vector<std::pair<long, long long>> to_pairs() const;
  static Laurent from_pairs(const std::vector<std::pair<long, long long>>& ps);

private:
  void add_term(long e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void check_nonzero() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no degree");
  }

  std::map<long, Int> terms_;
};

// The unique f supported in exponents > 0 (resp. < 0) with f - bar(f) = r.
// Precondition bar(r) = -r; violations throw std::invalid_argument, since in
// context they mean an R-matrix row was corrupted.
Laurent split_positive(const Laurent& r);
Laurent split_negative(const Laurent& r);

}  // namespace qfock
