#include "qfock/wedge.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

#include "qfock/indexing.hpp"

namespace qfock {

namespace {

using PairTerm = std::pair<std::pair<long, long>, Laurent>;

// The four exchange rules for one adjacent violation, before memoization.
std::vector<PairTerm> compute_exchange(long k1, long k2, long n, long l) {
    const long w = n * l;
    if (k1 == k2) return {};

    const Slot s1 = decompose(k1, n, l);
    const Slot s2 = decompose(k2, n, l);
    const long gamma = imod(s2.c - s1.c, w);
    const long delta = imod(n * (s2.d - s1.d), w);

    std::map<std::pair<long, long>, Laurent> acc;
    const auto add = [&acc](long a, long b, const Laurent& co) {
        if (a > b) acc[{a, b}] += co;
    };

    if (gamma == 0 && delta == 0) {
        add(k2, k1, Laurent::constant(-1));
    } else if (gamma > 0 && delta == 0) {
        add(k2, k1, -Laurent::q(-1));
        const Laurent lead = Laurent::q(-2) - Laurent::constant(1);
        for (long m = 0; k2 - gamma - w * m > k1 + gamma + w * m; ++m)
            add(k2 - gamma - w * m, k1 + gamma + w * m, lead * Laurent::q(-2 * m));
        for (long m = 1; k2 - w * m > k1 + w * m; ++m)
            add(k2 - w * m, k1 + w * m, -(lead * Laurent::q(-2 * m + 1)));
    } else if (gamma == 0 && delta > 0) {
        add(k2, k1, Laurent::q(1));
        const Laurent lead = Laurent::q(2) - Laurent::constant(1);
        for (long m = 0; k2 - delta - w * m > k1 + delta + w * m; ++m)
            add(k2 - delta - w * m, k1 + delta + w * m, lead * Laurent::q(2 * m));
        for (long m = 1; k2 - w * m > k1 + w * m; ++m)
            add(k2 - w * m, k1 + w * m, lead * Laurent::q(2 * m - 1));
    } else {
        add(k2, k1, Laurent::constant(1));
        const Laurent qmq = Laurent::q(1) - Laurent::q(-1);
        const Laurent qpq = Laurent::q(1) + Laurent::q(-1);
        const auto odd_ratio = [&qpq](long m) {
            return (Laurent::q(2 * m + 1) + Laurent::q(-2 * m - 1)).divided_by(qpq);
        };
        const auto even_ratio = [&qpq](long m) {
            return (Laurent::q(2 * m) - Laurent::q(-2 * m)).divided_by(qpq);
        };
        for (long m = 0; k2 - delta - w * m > k1 + delta + w * m; ++m)
            add(k2 - delta - w * m, k1 + delta + w * m, qmq * odd_ratio(m));
        for (long m = 0; k2 - gamma - w * m > k1 + gamma + w * m; ++m)
            add(k2 - gamma - w * m, k1 + gamma + w * m, qmq * odd_ratio(m));
        for (long m = 1; k2 + w - gamma - delta - w * m > k1 - w + gamma + delta + w * m; ++m)
            add(k2 + w - gamma - delta - w * m, k1 - w + gamma + delta + w * m,
                qmq * even_ratio(m));
        for (long m = 1; k2 - w * m > k1 + w * m; ++m)
            add(k2 - w * m, k1 + w * m, qmq * even_ratio(m));
    }

    std::vector<PairTerm> out;
    for (auto& [key, co] : acc)
        if (!co.is_zero()) out.emplace_back(key, std::move(co));
    return out;
}

// Index sum weighted by position.  Every exchange strictly decreases it at
// the rewritten pair and leaves other positions alone, so processing
// pending words from the largest value downward guarantees each word is
// expanded exactly once.
long phi(const Word& word) {
    long acc = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        acc += static_cast<long>(i + 1) * word[i];
    return acc;
}

}  // namespace

std::vector<PairTerm> exchange_pair(long k1, long k2, long n, long l) {
    if (k1 > k2) throw std::invalid_argument("exchange_pair: pair already ordered");

    // The rules are invariant under translating both letters by nl, so
    // memoize with k1 normalized into the fundamental window.  The memo is
    // shared by every straightening caller, including parallel column
    // solves, hence the lock; entries are immutable once inserted and map
    // nodes are stable, so the reference stays valid after unlocking.
    static std::map<std::tuple<long, long, long, long>, std::vector<PairTerm>> memo;
    static std::mutex memo_mutex;
    const long w = n * l;
    const long shift = w * decompose(k1, n, l).m;
    const auto key = std::make_tuple(k1 + shift, k2 + shift, n, l);

    std::unique_lock<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it == memo.end())
        it = memo.emplace(key, compute_exchange(k1 + shift, k2 + shift, n, l)).first;
    lock.unlock();

    std::vector<PairTerm> out = it->second;
    for (auto& [pr, co] : out) {
        pr.first -= shift;
        pr.second -= shift;
    }
    return out;
}

WedgeVector straighten(const WedgeVector& v, long n, long l, Strategy strategy) {
    std::map<std::pair<long, Word>, Laurent> pending;
    for (const auto& [word, co] : v) pending[{phi(word), word}] += co;

    WedgeVector result;
    while (!pending.empty()) {
        const auto it = std::prev(pending.end());
        const Word word = it->first.second;
        const Laurent coeff = it->second;
        pending.erase(it);
        if (coeff.is_zero()) continue;

        std::size_t pos = word.size();
        if (strategy == Strategy::Leftmost) {
            for (std::size_t i = 0; i + 1 < word.size(); ++i)
                if (word[i] <= word[i + 1]) {
                    pos = i;
                    break;
                }
        } else {
            for (std::size_t i = word.size(); i >= 2; --i)
                if (word[i - 2] <= word[i - 1]) {
                    pos = i - 2;
                    break;
                }
        }

        if (pos == word.size()) {
            Laurent& target = result[word];
            target += coeff;
            if (target.is_zero()) result.erase(word);
            continue;
        }

        for (const auto& [pr, pc] : exchange_pair(word[pos], word[pos + 1], n, l)) {
            Word nw = word;
            nw[pos] = pr.first;
            nw[pos + 1] = pr.second;
            pending[{phi(nw), std::move(nw)}] += coeff * pc;
        }
    }
    return result;
}

WedgeVector straighten(const Word& word, long n, long l, Strategy strategy) {
    return straighten(WedgeVector{{word, Laurent::constant(1)}}, n, l, strategy);
}

WedgeVector bar_word(const Word& word, long n, long l) {
    std::vector<long> c_count(static_cast<std::size_t>(n), 0);
    std::vector<long> d_count(static_cast<std::size_t>(l), 0);
    for (long k : word) {
        const Slot slot = decompose(k, n, l);
        ++c_count[static_cast<std::size_t>(slot.c) - 1];
        ++d_count[static_cast<std::size_t>(slot.d) - 1];
    }
    long kappa_c = 0;
    long kappa_d = 0;
    for (long cnt : c_count) kappa_c += cnt * (cnt - 1) / 2;
    for (long cnt : d_count) kappa_d += cnt * (cnt - 1) / 2;

    // q^{-kappa(c)} (-q)^{kappa(d)}
    Laurent pref = Laurent::q(kappa_d - kappa_c);
    if (kappa_d % 2 != 0) pref = -pref;

    WedgeVector reversed{{Word(word.rbegin(), word.rend()), pref}};
    return straighten(reversed, n, l);
}

WedgeVector bar(const WedgeVector& v, long n, long l) {
    WedgeVector out;
    for (const auto& [word, co] : v) {
        const Laurent barred = co.bar();
        for (const auto& [key, rc] : bar_word(word, n, l)) {
            Laurent& target = out[key];
            target += barred * rc;
            if (target.is_zero()) out.erase(key);
        }
    }
    return out;
}

WedgeVector boson(const WedgeVector& v, long m, long n, long l, Family family,
                  long comp) {
    if (m == 0) throw std::invalid_argument("boson: m must be nonzero");
    const long w = n * l;

    WedgeVector shifted;
    for (const auto& [word, co] : v)
        for (std::size_t j = 0; j < word.size(); ++j) {
            if (family != Family::All) {
                const Slot slot = decompose(word[j], n, l);
                const long have = family == Family::ByD ? slot.d : slot.c;
                if (have != comp) continue;
            }
            Word nw = word;
            nw[j] -= w * m;
            shifted[std::move(nw)] += co;
        }
    return straighten(shifted, n, l);
}

}  // namespace qfock
