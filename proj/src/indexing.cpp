#include "qfock/indexing.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qfock {

Slot decompose(long k, long n, long l) {
    if (n <= 0 || l <= 0) throw std::invalid_argument("decompose: n and l must be positive");
    const long w = n * l;
    const long e = imod(k - 1, w) + 1;
    Slot slot;
    slot.m = (e - k) / w;
    slot.c = imod(e - 1, n) + 1;
    slot.d = (e - slot.c) / n + 1;
    return slot;
}

long compose(const Slot& slot, long n, long l) {
    if (slot.c < 1 || slot.c > n || slot.d < 1 || slot.d > l)
        throw std::invalid_argument("compose: slot coordinates out of range");
    return slot.c + n * (slot.d - 1) - n * l * slot.m;
}

std::vector<long> beta_numbers(const Partition& lambda, long s, long r) {
    if (r < 0) throw std::invalid_argument("beta_numbers: negative length");
    std::vector<long> ks;
    ks.reserve(static_cast<std::size_t>(r));
    for (long i = 1; i <= r; ++i) ks.push_back(lambda.part(i) + s - i + 1);
    return ks;
}

Partition partition_from_beta(const std::vector<long>& ks, long s) {
    std::vector<long> parts;
    parts.reserve(ks.size());
    long i = 1;
    for (long k : ks) {
        if (i > 1 && k >= ks[static_cast<std::size_t>(i) - 2])
            throw std::invalid_argument("partition_from_beta: not strictly decreasing");
        const long part = k - s + i - 1;
        if (part < 0) throw std::invalid_argument("partition_from_beta: negative part");
        parts.push_back(part);
        ++i;
    }
    return Partition(parts);
}

namespace {

// Shared implementation of the two slot readings.  When by_d is set the
// groups are the slow coordinates d in {1..l} (values c - n*m); otherwise
// they are the fast coordinates c in {1..n} (values d - l*m, the classical
// n-quotient).  The window extends two full slot windows past the support
// of lambda, so every group ends with at least two entries from the
// consecutive tail and its charge can be read off the last one.
ChargedMP read_groups(const Partition& lambda, long s, long n, long l, bool by_d) {
    const long w = n * l;
    const long r = lambda.length() + 2 * w;
    const long groups = by_d ? l : n;
    std::vector<std::vector<long>> vals(static_cast<std::size_t>(groups));
    for (long k : beta_numbers(lambda, s, r)) {
        const Slot slot = decompose(k, n, l);
        if (by_d)
            vals[static_cast<std::size_t>(slot.d) - 1].push_back(slot.c - n * slot.m);
        else
            vals[static_cast<std::size_t>(slot.c) - 1].push_back(slot.d - l * slot.m);
    }

    ChargedMP out;
    out.s.resize(static_cast<std::size_t>(groups));
    std::vector<Partition> comps;
    for (long g = 0; g < groups; ++g) {
        const auto& v = vals[static_cast<std::size_t>(g)];
        if (v.size() < 2) throw std::logic_error("read_groups: window too small");
        const long charge = v.back() + static_cast<long>(v.size()) - 1;
        std::vector<long> parts;
        for (std::size_t i = 0; i < v.size(); ++i)
            parts.push_back(v[i] - charge + static_cast<long>(i));
        if (parts[parts.size() - 2] != 0)
            throw std::logic_error("read_groups: group not stabilized");
        comps.emplace_back(parts);
        out.s[static_cast<std::size_t>(g)] = charge;
    }
    out.mp = Multipartition{comps};
    return out;
}

// Shared inverse: regenerates beta entries per group, merges them, and
// decodes the charged partition.  The kept prefix consists of all merged
// entries at least as large as the deepest entry generated in the
// shallowest group; any entry not generated is strictly below that floor,
// so the kept prefix is exact.  The buffer grows until the prefix reaches
// the consecutive tail of the result.
std::pair<Partition, long> merge_groups(const ChargedMP& cm, long n, long l, bool by_d) {
    const long w = n * l;
    const long groups = by_d ? l : n;
    if (static_cast<long>(cm.mp.levels()) != groups || static_cast<long>(cm.s.size()) != groups)
        throw std::invalid_argument("merge_groups: wrong number of components");

    long total = 0;
    long maxlen = 0;
    for (long g = 0; g < groups; ++g) {
        total += cm.s[static_cast<std::size_t>(g)];
        maxlen = std::max(maxlen, static_cast<long>(cm.mp.comp(g + 1).length()));
    }
    const auto [smin, smax] = std::minmax_element(cm.s.begin(), cm.s.end());
    long buffer = 2 * w + 2 * (*smax - *smin) + 2;

    for (int attempt = 0; attempt < 60; ++attempt, buffer *= 2) {
        const long per_group = maxlen + buffer;
        std::vector<long> ks;
        long floor_k = std::numeric_limits<long>::min();
        for (long g = 0; g < groups; ++g) {
            const Partition& mu = cm.mp.comp(g + 1);
            const long charge = cm.s[static_cast<std::size_t>(g)];
            long last = 0;
            for (long i = 1; i <= per_group; ++i) {
                const long v = mu.part(i) + charge - i + 1;
                Slot slot;
                if (by_d) {
                    slot.d = g + 1;
                    slot.c = imod(v - 1, n) + 1;
                    slot.m = (slot.c - v) / n;
                } else {
                    slot.c = g + 1;
                    slot.d = imod(v - 1, l) + 1;
                    slot.m = (slot.d - v) / l;
                }
                last = compose(slot, n, l);
                ks.push_back(last);
            }
            floor_k = std::max(floor_k, last);
        }

        std::sort(ks.begin(), ks.end(), std::greater<long>());
        std::vector<long> kept;
        for (long k : ks)
            if (k >= floor_k) kept.push_back(k);
        if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
            throw std::invalid_argument("merge_groups: colliding slots");

        const Partition lambda = partition_from_beta(kept, total);
        if (lambda.length() < static_cast<long>(kept.size())) return {lambda, total};
    }
    throw std::logic_error("merge_groups: failed to stabilize");
}

}  // namespace

ChargedMP to_l_pair(const Partition& lambda, long s, long n, long l) {
    return read_groups(lambda, s, n, l, true);
}

ChargedMP to_n_pair(const Partition& lambda, long s, long n, long l) {
    return read_groups(lambda, s, n, l, false);
}

std::pair<Partition, long> from_l_pair(const ChargedMP& cm, long n, long l) {
    return merge_groups(cm, n, l, true);
}

std::pair<Partition, long> from_n_pair(const ChargedMP& cm, long n, long l) {
    return merge_groups(cm, n, l, false);
}

Partition sigma_s(const Partition& lambda, long s, long n, long l) {
    const long w = n * l;

    // Cut the beta sequence at the largest k congruent to 1 mod nl that
    // lies at or below the consecutive tail.  Everything below the cut is
    // a union of full slot windows, which the relabeling permutes onto
    // itself, so only the kept prefix needs to be transformed.
    const long tail_top = s - lambda.length();
    const long k0 = tail_top - imod(tail_top - 1, w);
    const long r = s - k0 + 1;

    std::vector<long> relabeled;
    relabeled.reserve(static_cast<std::size_t>(r));
    for (long k : beta_numbers(lambda, s, r)) {
        const Slot slot = decompose(k, n, l);
        relabeled.push_back(slot.d + l * (slot.c - 1) - w * slot.m);
    }
    std::sort(relabeled.begin(), relabeled.end(), std::greater<long>());
    return partition_from_beta(relabeled, s);
}

Charges quotient_charges_from_counts(const Partition& lambda, long s, long n) {
    const Multipartition mp{{lambda}};
    const Charges level_one{s};
    const Counts cnt = counts(mp, level_one, n);

    // Solve s_c - s_{c+1} = N_c for c = 1..n-1 with sum_c s_c = s.
    long weighted = 0;
    for (long c = 1; c < n; ++c) weighted += c * cnt.N[static_cast<std::size_t>(c)];
    const long numer = s - weighted;
    if (imod(numer, n) != 0)
        throw std::invalid_argument("quotient_charges_from_counts: no integer solution");

    Charges out(static_cast<std::size_t>(n));
    out[static_cast<std::size_t>(n) - 1] = numer / n;
    for (long c = n - 1; c >= 1; --c)
        out[static_cast<std::size_t>(c) - 1] =
            out[static_cast<std::size_t>(c)] + cnt.N[static_cast<std::size_t>(c)];
    return out;
}

}  // namespace qfock
