#include "pairsieve/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "pairsieve/families.hpp"

namespace pairsieve {

namespace {

uint64_t isqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) r--;
    while ((r + 1) * (r + 1) <= n) r++;
    return r;
}

// plain byte sieve, only used to enumerate moduli up to sqrt(6*x_limit + c2)
std::vector<uint64_t> primes_upto(uint64_t bound) {
    std::vector<uint64_t> out;
    if (bound < 2) return out;
    std::vector<uint8_t> comp(bound + 1, 0);
    for (uint64_t i = 2; i * i <= bound; ++i)
        if (!comp[i])
            for (uint64_t j = i * i; j <= bound; j += i) comp[j] = 1;
    for (uint64_t i = 2; i <= bound; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

bool trial_prime(uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    if (v % 3 == 0) return v == 3;
    for (uint64_t i = 5; i * i <= v; i += 6)
        if (v % i == 0 || v % (i + 2) == 0) return false;
    return true;
}

// one arithmetic progression to stride: x = d*n + off, n >= 1
struct Row {
    uint64_t d;
    int64_t off;
};

std::vector<Row> expand_rows(const PairClass& pc, uint64_t x_limit, bool literal) {
    const std::vector<FamilySpec> families = derive_families(pc);
    std::vector<Row> rows;
    if (literal) {
        // the quadratic bound: smallest value of a family at modulus index m
        // is at least 5m - 1 - a, so larger m cannot reach [0, x_limit]
        for (const FamilySpec& f : families) {
            const uint64_t m_max = (x_limit + f.a + 1) / 5;
            for (uint64_t m = 1; m <= m_max; ++m)
                rows.push_back({f.modulus(m), f.offset(m)});
        }
    } else {
        // a composite pair member has a prime factor <= its square root,
        // and that factor's own family marks the same index
        const uint64_t bound = isqrt(6 * x_limit + pc.c2);
        const std::vector<uint64_t> ps = primes_upto(bound);
        for (const FamilySpec& f : families) {
            const uint64_t want = f.branch == Branch::Minus ? 5 : 1;
            for (uint64_t p : ps) {
                if (p < 5 || p % 6 != want) continue;
                const uint64_t m = f.branch == Branch::Minus ? (p + 1) / 6 : (p - 1) / 6;
                rows.push_back({p, f.eps * static_cast<int64_t>(m) -
                                       static_cast<int64_t>(f.a)});
            }
        }
    }
    return rows;
}

void mark_segment(ExclusionSet& es, const std::vector<Row>& rows, uint64_t lo,
                  uint64_t hi) {
    for (const Row& row : rows) {
        const int64_t d = static_cast<int64_t>(row.d);
        const int64_t num = static_cast<int64_t>(lo) - row.off;
        int64_t n = num <= 0 ? 1 : (num + d - 1) / d;
        if (n < 1) n = 1;  // n >= 1 keeps the cofactor 6n + eps >= 5
        for (int64_t x = d * n + row.off; x <= static_cast<int64_t>(hi); x += d)
            es.set(static_cast<uint64_t>(x));
    }
}

}  // namespace

uint64_t ExclusionSet::excluded_count() const {
    uint64_t total = 0;
    for (uint64_t w : words_) total += std::popcount(w);
    return total;
}

ExclusionSet build_exclusions(const PairClass& pc, uint64_t x_limit,
                              const SieveOptions& opts) {
    if (!PairClass::valid(pc.k, pc.residue))
        throw std::invalid_argument("invalid pair class");
    if (opts.segment_size < 64)
        throw std::invalid_argument("segment_size must be >= 64");
    if (x_limit > kMaxIndex)
        throw std::overflow_error("x_limit exceeds the 64-bit index domain");
    checked_add(checked_mul(6, x_limit), pc.c2);

    ExclusionSet es(x_limit);
    const std::vector<Row> rows = expand_rows(pc, x_limit, opts.literal);
    if (rows.empty()) return es;

    // word-aligned segments: threads write disjoint word ranges, so the
    // result is a pure function of (pc, x_limit) whatever the thread count
    const uint64_t whole = (x_limit / 64 + 1) * 64;
    const uint64_t seg = (std::min(opts.segment_size, whole) + 63) & ~UINT64_C(63);
    const uint64_t nsegs = (x_limit + seg) / seg;

    uint64_t nthreads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    nthreads = std::clamp<uint64_t>(nthreads, 1, nsegs);

    std::atomic<uint64_t> next{0};
    auto work = [&] {
        for (uint64_t s; (s = next.fetch_add(1, std::memory_order_relaxed)) < nsegs;) {
            const uint64_t lo = s * seg;
            const uint64_t hi = std::min(lo + seg - 1, x_limit);
            mark_segment(es, rows, lo, hi);
        }
    };

    if (nthreads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (uint64_t t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return es;
}

std::vector<uint64_t> complement(const ExclusionSet& es) {
    std::vector<uint64_t> out;
    const uint64_t x_limit = es.x_limit();
    const auto& words = es.words();
    for (uint64_t i = 0; i < words.size(); ++i) {
        uint64_t w = ~words[i];
        while (w) {
            const uint64_t x = i * 64 + std::countr_zero(w);
            if (x > x_limit) return out;
            out.push_back(x);
            w &= w - 1;
        }
    }
    return out;
}

std::vector<PairRecord> enumerate_pairs(uint64_t k, uint64_t p_limit,
                                        const SieveOptions& opts) {
    if (k < 1) throw std::invalid_argument("enumerate_pairs needs k >= 1");
    if (p_limit < 3) throw std::invalid_argument("enumerate_pairs needs p_limit >= 3");
    const uint64_t gap = checked_mul(2, k);
    checked_add(p_limit, gap);  // the larger member must stay in 64 bits

    std::vector<PairRecord> out;
    // the pairs involving 3 sit outside the 6x+c parametrization
    const uint64_t q3 = 3 + gap;
    if (trial_prime(q3)) out.push_back({3, q3});

    std::vector<std::vector<PairRecord>> per_class;
    for (const PairClass& pc : PairClass::valid_classes(k)) {
        if (p_limit < pc.c1) continue;
        const uint64_t x_hi = (p_limit - pc.c1) / 6;
        const ExclusionSet es = build_exclusions(pc, x_hi, opts);
        std::vector<PairRecord> v;
        for (uint64_t x : complement(es))
            v.push_back({6 * x + pc.c1, 6 * x + pc.c2});
        per_class.push_back(std::move(v));
    }

    if (per_class.size() == 1) {
        out.insert(out.end(), per_class[0].begin(), per_class[0].end());
    } else if (per_class.size() == 2) {
        // case A members are 5 mod 6 and case B members 1 mod 6: no ties
        std::vector<PairRecord> merged(per_class[0].size() + per_class[1].size());
        std::merge(per_class[0].begin(), per_class[0].end(), per_class[1].begin(),
                   per_class[1].end(), merged.begin(),
                   [](const PairRecord& l, const PairRecord& r) { return l.p < r.p; });
        out.insert(out.end(), merged.begin(), merged.end());
    }
    return out;
}

std::vector<PairRecord> eratosthenes_pairs(uint64_t k, uint64_t p_limit) {
    if (k < 1) throw std::invalid_argument("eratosthenes_pairs needs k >= 1");
    if (p_limit < 3) throw std::invalid_argument("eratosthenes_pairs needs p_limit >= 3");
    const uint64_t gap = checked_mul(2, k);
    const uint64_t limit = checked_add(p_limit, gap);

    std::vector<uint64_t> comp(limit / 64 + 1, 0);
    auto mark = [&](uint64_t i) { comp[i >> 6] |= UINT64_C(1) << (i & 63); };
    auto marked = [&](uint64_t i) { return (comp[i >> 6] >> (i & 63)) & 1; };

    for (uint64_t i = 3; i * i <= limit; i += 2)
        if (!marked(i))
            for (uint64_t j = i * i; j <= limit; j += 2 * i) mark(j);

    auto is_p = [&](uint64_t v) { return v >= 3 && (v & 1) && !marked(v); };

    std::vector<PairRecord> out;
    for (uint64_t p = 3; p <= p_limit; p += 2)
        if (is_p(p) && is_p(p + gap)) out.push_back({p, p + gap});
    return out;
}

}  // namespace pairsieve
