#include "pairsieve/parity.hpp"

#include <bit>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "pairsieve/families.hpp"

namespace pairsieve {

uint64_t window_x_max(uint64_t n) {
    if (n < 1) throw std::invalid_argument("window needs n >= 1");
    // 6n^2 + 2n - 1
    return checked_add(checked_mul(checked_mul(6, n), n), 2 * n) - 1;
}

std::string ParityReport::ratio_string() const {
    const int64_t num = balance();
    const uint64_t mag = static_cast<uint64_t>(num < 0 ? -num : num);
    unsigned __int128 q = static_cast<unsigned __int128>(mag) * 1000000;
    const uint64_t rem = static_cast<uint64_t>(q % n);
    q /= n;
    if (2 * static_cast<unsigned __int128>(rem) >= n) ++q;  // round half away from zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%llu.%06llu", num < 0 && q != 0 ? "-" : "",
                  static_cast<unsigned long long>(q / 1000000),
                  static_cast<unsigned long long>(q % 1000000));
    return buf;
}

ParityReport parity_report(uint64_t n, const SieveOptions& opts) {
    const uint64_t x_max = window_x_max(n);
    const ExclusionSet es =
        build_exclusions(PairClass::make(1, ResidueCase::A), x_max, opts);

    // even indices sit at even bit positions, since every word starts at
    // a multiple of 64
    constexpr uint64_t kEvenBits = UINT64_C(0x5555555555555555);
    const auto& words = es.words();
    uint64_t even = 0, odd = 0;
    for (uint64_t i = 0; i < words.size(); ++i) {
        uint64_t clear = ~words[i];
        if (i == 0) clear &= ~UINT64_C(1);  // domain is [1, x_max], drop x = 0
        if (i == words.size() - 1) clear &= (UINT64_C(2) << (x_max % 64)) - 1;
        even += std::popcount(clear & kEvenBits);
        odd += std::popcount(clear & ~kEvenBits);
    }
    return ParityReport{n, x_max, even + odd, even, odd};
}

std::vector<ParityReport> parity_sweep(uint64_t n_from, uint64_t n_to, uint64_t step,
                                       const SieveOptions& opts) {
    if (step < 1) throw std::invalid_argument("sweep step must be >= 1");
    if (n_from < 1 || n_from > n_to)
        throw std::invalid_argument("empty sweep range");
    std::vector<ParityReport> out;
    for (uint64_t n = n_from;;) {
        out.push_back(parity_report(n, opts));
        if (n_to - n < step) break;
        n += step;
    }
    return out;
}

std::vector<uint64_t> axis_values(uint64_t n) {
    if (n < 1) throw std::invalid_argument("axis_values needs n >= 1");
    window_x_max(n);  // overflow check once for the largest m
    std::vector<uint64_t> out;
    out.reserve(4 * n);
    for (uint64_t m = 1; m <= n; ++m) {
        const uint64_t sq = 6 * m * m;
        out.push_back(sq - 2 * m - 1);
        out.push_back(sq - 1);
        out.push_back(sq - 1);  // two branches coincide on the diagonal
        out.push_back(sq + 2 * m - 1);
    }
    return out;
}

DuplicateStats duplicate_stats(uint64_t n) {
    const uint64_t x_max = window_x_max(n);
    std::vector<uint32_t> counts(x_max + 1, 0);

    const PairClass twins = PairClass::make(1, ResidueCase::A);
    uint64_t hits = 0;
    for (const FamilySpec& f : derive_families(twins)) {
        const uint64_t m_max = (x_max + f.a + 1) / 5;
        for (uint64_t m = 1; m <= m_max; ++m) {
            const uint64_t d = f.modulus(m);
            const int64_t off = f.offset(m);
            for (int64_t v = static_cast<int64_t>(d) + off;
                 v <= static_cast<int64_t>(x_max); v += static_cast<int64_t>(d)) {
                ++counts[static_cast<uint64_t>(v)];
                ++hits;
            }
        }
    }

    DuplicateStats s{hits, 0, 0, 0};
    for (uint64_t v = 0; v <= x_max; ++v) {
        if (counts[v] == 0) continue;
        ++s.distinct_values;
        if (counts[v] >= 2) (v % 2 ? s.duplicate_odd : s.duplicate_even)++;
    }
    return s;
}

void write_parity_csv(std::ostream& out, const std::vector<ParityReport>& reports) {
    out << "n,x_max,complement_size,even,odd,ratio\n";
    for (const ParityReport& r : reports) {
        out << r.n << ',' << r.x_max << ',' << r.complement_size << ',' << r.even_count
            << ',' << r.odd_count << ',' << r.ratio_string() << '\n';
    }
}

}  // namespace pairsieve
