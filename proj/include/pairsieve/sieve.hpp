#pragma once
// The fast path: mark every excluded candidate index in [0, x_limit] by
// striding the derived families over a segmented bitset, then read prime
// pairs off the complement.
//
// Two modulus-enumeration modes produce the same bitset:
//   fast    - prime moduli d <= sqrt(6*x_limit + c2) only (default)
//   literal - every modulus 6m -/+ 1 up to the quadratic bound
//             m <= (x_limit + a + 1) / 5, composite moduli included
// The fast bound is lossless: a composite member has a prime factor below
// the square root, and that factor's family marks the same index.

#include <cstdint>
#include <vector>

#include "pairsieve/core.hpp"

namespace pairsieve {

struct SieveOptions {
    uint64_t segment_size = UINT64_C(1) << 16;  // indices per segment, >= 64
    unsigned threads = 0;                       // 0 = hardware concurrency
    bool literal = false;
};

// Dense bit-per-index set over [0, x_limit]; bit x set <=> x excluded.
// Identical for a given (PairClass, x_limit) regardless of segmentation,
// thread count, or enumeration mode.
class ExclusionSet {
public:
    explicit ExclusionSet(uint64_t x_limit)
        : x_limit_(x_limit), words_(x_limit / 64 + 1, 0) {}

    uint64_t x_limit() const { return x_limit_; }

    bool excluded(uint64_t x) const {
        return (words_[x >> 6] >> (x & 63)) & 1;
    }
    void set(uint64_t x) { words_[x >> 6] |= UINT64_C(1) << (x & 63); }

    uint64_t excluded_count() const;
    const std::vector<uint64_t>& words() const { return words_; }

    friend bool operator==(const ExclusionSet&, const ExclusionSet&) = default;

private:
    uint64_t x_limit_;
    std::vector<uint64_t> words_;
};

// Union of all four family progressions of pc, clipped to [0, x_limit].
// Bit x ends up set exactly when 6x+c1 or 6x+c2 is composite.
ExclusionSet build_exclusions(const PairClass& pc, uint64_t x_limit,
                              const SieveOptions& opts = {});

// Ascending indices with clear bits.
std::vector<uint64_t> complement(const ExclusionSet& es);

// All prime pairs (p, p+2k) with p <= p_limit, smallest first: the (3, 3+2k)
// prefix, then the complement pairs of every valid residue case of k
// (both cases merged when k % 3 == 0).
std::vector<PairRecord> enumerate_pairs(uint64_t k, uint64_t p_limit,
                                        const SieveOptions& opts = {});

// Baseline: classic prime sieve to p_limit + 2k, then a gap-2k scan.
// Output equals enumerate_pairs exactly.
std::vector<PairRecord> eratosthenes_pairs(uint64_t k, uint64_t p_limit);

}  // namespace pairsieve
