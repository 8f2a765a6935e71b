#include "qfock/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qfock/crystal.hpp"
#include "qfock/fock.hpp"
#include "qfock/indexing.hpp"

namespace qfock {

namespace {

// Runs work(0..count-1) on up to the requested number of threads.  Workers
// pull indices from a shared counter; the first exception wins and is
// rethrown on the caller after all workers have joined.
template <typename Fn>
void parallel_columns(std::size_t count, long threads, const Fn& work) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> guard(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void partitions_of(long k, long cap, std::vector<long>& cur,
                   std::vector<Partition>& out) {
  if (k == 0) {
    out.emplace_back(cur);
    return;
  }
  for (long p = std::min(cap, k); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(k - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(long k) {
  std::vector<Partition> out;
  std::vector<long> cur;
  partitions_of(k, k, cur, out);
  return out;
}

void multipartitions_of(long k, long l, std::vector<Partition>& cur,
                        std::vector<Multipartition>& out) {
  if (l == 0) {
    if (k == 0) out.emplace_back(cur);
    return;
  }
  for (long a = (l == 1 ? k : 0); a <= k; ++a)
    for (const Partition& p : partitions_of(a)) {
      cur.push_back(p);
      multipartitions_of(k - a, l - 1, cur, out);
      cur.pop_back();
    }
}

// The empty blocks: all degree-k kets grouped by weight, rows sorted by
// descending lexicographic order of their underlying partitions.
std::vector<TransitionBlock> build_blocks(long n, long l, const Charges& s,
                                          long k) {
  if (static_cast<long>(s.size()) != l)
    throw std::invalid_argument("charge length does not match the level");
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<Multipartition> mps;
  {
    std::vector<Partition> cur;
    multipartitions_of(k, l, cur, mps);
  }
  const std::set<Multipartition> crystal =
      crystal_component(n, l, s, k).members;
  std::map<std::vector<long>, std::vector<TransitionRow>> grouped;
  for (Multipartition& mp : mps) {
    TransitionRow row;
    row.underlying = from_l_pair({mp, s}, n, l).first;
    row.in_crystal = crystal.count(mp) > 0;
    std::vector<long> key = counts(mp, s, n).M;
    row.mp = std::move(mp);
    grouped[std::move(key)].push_back(std::move(row));
  }
  std::vector<TransitionBlock> blocks;
  for (auto& [weight, rows] : grouped) {
    std::sort(rows.begin(), rows.end(),
              [](const TransitionRow& a, const TransitionRow& b) {
                return b.underlying < a.underlying;
              });
    TransitionBlock b;
    b.n = n;
    b.l = l;
    b.k = k;
    b.s = s;
    b.weight = weight;
    b.rows = std::move(rows);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

std::vector<TransitionBlock> r_matrix(long n, long l, const Charges& s,
                                      long k, long threads) {
  std::vector<TransitionBlock> blocks = build_blocks(n, l, s, k);
  const long stot = from_l_pair({Multipartition::empty(static_cast<int>(l)), s},
                                n, l)
                        .second;
  for (TransitionBlock& b : blocks) {
    const std::size_t size = b.rows.size();
    std::map<Partition, std::size_t> index;
    for (std::size_t r = 0; r < size; ++r) index[b.rows[r].underlying] = r;
    b.cols.assign(size, std::vector<Laurent>(size));
    parallel_columns(size, threads, [&](std::size_t c) {
      const FockVector v =
          bar(FockVector::basis(n, l, stot, b.rows[c].underlying));
      for (const auto& [key, coeff] : v.terms) {
        auto it = index.find(key);
        if (it == index.end() || it->second < c)
          throw std::logic_error("bar left its weight block triangle");
        b.cols[c][it->second] = coeff;
      }
      if (!(b.cols[c][c] == Laurent::constant(1)))
        throw std::logic_error("bar is not unitriangular");
    });
  }
  return blocks;
}

std::vector<TransitionBlock> canonical_basis(long n, long l, const Charges& s,
                                             long k, BasisSign sign,
                                             long threads) {
  std::vector<TransitionBlock> blocks = r_matrix(n, l, s, k, threads);
  for (TransitionBlock& b : blocks) {
    const std::size_t size = b.rows.size();
    std::vector<std::vector<Laurent>> delta(size, std::vector<Laurent>(size));
    parallel_columns(size, threads, [&](std::size_t c) {
      delta[c][c] = Laurent::constant(1);
      for (std::size_t r = c + 1; r < size; ++r) {
        Laurent rho;
        for (std::size_t t = c; t < r; ++t)
          rho += delta[c][t].bar() * b.cols[t][r];
        if (!(rho.bar() == -rho) || rho.coeff(0) != 0)
          throw std::logic_error(
              "transition remainder is not bar-antisymmetric; "
              "the R-matrix is inconsistent");
        delta[c][r] =
            sign == BasisSign::Plus ? split_positive(rho) : split_negative(rho);
      }
    });
    b.cols = std::move(delta);
  }
  return blocks;
}

std::vector<std::vector<Laurent>> dual_basis(const TransitionBlock& plus) {
  // Invert the lower-unitriangular Delta by forward substitution, then
  // transpose; the result is upper-unitriangular in the same row order.
  const std::size_t size = plus.rows.size();
  std::vector<std::vector<Laurent>> inv(size, std::vector<Laurent>(size));
  for (std::size_t c = 0; c < size; ++c) {
    inv[c][c] = Laurent::constant(1);
    for (std::size_t r = c + 1; r < size; ++r) {
      Laurent acc;
      for (std::size_t t = c; t < r; ++t) acc += plus.cols[t][r] * inv[c][t];
      inv[c][r] = -acc;
    }
  }
  std::vector<std::vector<Laurent>> dual(size, std::vector<Laurent>(size));
  for (std::size_t c = 0; c < size; ++c)
    for (std::size_t r = 0; r < size; ++r) dual[c][r] = inv[r][c];
  return dual;
}

bool verify_inversion(long n, long l, const Charges& s, long k,
                      std::string* message) {
  Charges sp(s.rbegin(), s.rend());
  for (long& c : sp) c = -c;
  const std::vector<TransitionBlock> plus =
      canonical_basis(n, l, s, k, BasisSign::Plus);
  const std::vector<TransitionBlock> minus =
      canonical_basis(n, l, sp, k, BasisSign::Minus);

  // Position of every multipartition label on each side.
  using Position = std::pair<std::size_t, std::size_t>;  // block, row
  std::map<Multipartition, Position> ppos, mpos;
  for (std::size_t bi = 0; bi < plus.size(); ++bi)
    for (std::size_t r = 0; r < plus[bi].rows.size(); ++r)
      ppos[plus[bi].rows[r].mp] = {bi, r};
  for (std::size_t bi = 0; bi < minus.size(); ++bi)
    for (std::size_t r = 0; r < minus[bi].rows.size(); ++r)
      mpos[minus[bi].rows[r].mp] = {bi, r};

  long pairs = 0;
  for (const auto& [mu, mu_at] : ppos) {
    const TransitionBlock& mb = plus[mu_at.first];
    for (const auto& [lam, lam_at] : ppos) {
      (void)lam_at;
      const Multipartition lam_c = conjugate_mp(lam, s).first;
      const auto lam_it = mpos.find(lam_c);
      if (lam_it == mpos.end())
        throw std::logic_error("conjugate label missing on the minus side");
      Laurent sum;
      // Dplus_{mu,nu} vanishes outside mu's weight block, so nu runs over
      // that block's columns only.
      for (std::size_t c = 0; c < mb.rows.size(); ++c) {
        const Laurent& dplus = mb.cols[c][mu_at.second];
        if (dplus.is_zero()) continue;
        const Multipartition nu_c = conjugate_mp(mb.rows[c].mp, s).first;
        const auto nu_it = mpos.find(nu_c);
        if (nu_it == mpos.end())
          throw std::logic_error("conjugate label missing on the minus side");
        if (nu_it->second.first != lam_it->second.first) continue;
        const TransitionBlock& lb = minus[lam_it->second.first];
        sum += lb.cols[nu_it->second.second][lam_it->second.second].bar() *
               dplus;
      }
      const bool diag = lam == mu;
      const Laurent want = diag ? Laurent::constant(1) : Laurent();
      if (!(sum == want)) {
        if (message) {
          std::ostringstream out;
          out << "inversion fails at lambda=" << lam.str()
              << " mu=" << mu.str() << ": got " << sum.str();
          *message = out.str();
        }
        return false;
      }
      ++pairs;
    }
  }
  if (message) {
    std::ostringstream out;
    out << "inversion identity holds for all " << pairs
        << " label pairs at degree " << k;
    *message = out.str();
  }
  return true;
}

bool entries_nonnegative(const TransitionBlock& block, BasisSign sign) {
  for (const auto& col : block.cols)
    for (const Laurent& e : col) {
      const Laurent rep = sign == BasisSign::Minus ? e.in_p() : e;
      for (const auto& [exp, coeff] : rep.terms())
        if (coeff < 0) return false;
    }
  return true;
}

}  // namespace qfock
