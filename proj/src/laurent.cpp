#include "qfock/laurent.hpp"

#include <limits>
#include <sstream>

namespace qfock {

Laurent Laurent::divided_by(const Laurent& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Laurent rem = *this, quot;
  // Schoolbook division from the top exponent down.  Laurent units make
  // every leading monomial invertible up to integer divisibility, which we
  // insist on exactly.
  const long de = d.max_exp();
  const Int& dc = d.terms().rbegin()->second;
  while (!rem.is_zero()) {
    const long re = rem.max_exp();
    const Int rc = rem.terms().rbegin()->second;
    if (rc % dc != 0)
      throw std::invalid_argument("non-exact polynomial division");
    Laurent t = Laurent::monomial(rc / dc, re - de);
    quot += t;
    rem -= t * d;
    if (!rem.is_zero() && rem.max_exp() >= re)
      throw std::logic_error("division failed to reduce degree");
  }
  return quot;
}

std::string Laurent::str(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) out << mag.str();
    if (e == 1) out << var;
    else if (e != 0) out << var << '^' << e;
  }
  return out.str();
}

std::vector<std::pair<long, long long>> Laurent::to_pairs() const {
  std::vector<std::pair<long, long long>> ps;
  ps.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    if (c > std::numeric_limits<long long>::max() ||
        c < std::numeric_limits<long long>::min())
      throw std::overflow_error("coefficient too large for serialization");
    ps.emplace_back(e, static_cast<long long>(c));
  }
  return ps;
}

Laurent Laurent::from_pairs(const std::vector<std::pair<long, long long>>& ps) {
  Laurent r;
  for (const auto& [e, c] : ps) r.add_term(e, Int(c));
  return r;
}

namespace {
void require_antisymmetric(const Laurent& r) {
  if (r.bar() != -r)
    throw std::invalid_argument("split precondition bar(r) = -r violated");
}
}  // namespace

Laurent split_positive(const Laurent& r) {
  require_antisymmetric(r);
  Laurent f;
  for (const auto& [e, c] : r.terms())
    if (e > 0) f += Laurent::monomial(c, e);
  return f;
}

Laurent split_negative(const Laurent& r) {
  require_antisymmetric(r);
  Laurent f;
  for (const auto& [e, c] : r.terms())
    if (e < 0) f += Laurent::monomial(c, e);
  return f;
}

}  // namespace qfock
