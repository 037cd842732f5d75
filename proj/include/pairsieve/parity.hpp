#pragma once
// Parity balance of the twin (k=1) complement inside the window
// [1, x_max(n)], x_max(n) = 6n^2 + 2n - 1, plus the diagonal structure of
// the family value matrix: axis-of-symmetry values and duplicate counts.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pairsieve/sieve.hpp"

namespace pairsieve {

// x_max(n) = 6n^2 + 2n - 1, the largest family value in the n-th window.
// Itself always a family value (m = n on the Plus branch), hence excluded.
uint64_t window_x_max(uint64_t n);

struct ParityReport {
    uint64_t n;
    uint64_t x_max;
    uint64_t complement_size;  // == even_count + odd_count
    uint64_t even_count;
    uint64_t odd_count;

    int64_t balance() const {
        return static_cast<int64_t>(even_count) - static_cast<int64_t>(odd_count);
    }
    double ratio() const { return static_cast<double>(balance()) / static_cast<double>(n); }
    // exact decimal rendering of balance()/n to 6 places, no float rounding
    std::string ratio_string() const;
};

// Counts the parities of the unexcluded indices in [1, x_max(n)]. The domain
// starts at 1, not 0, so windows of different n nest exactly.
ParityReport parity_report(uint64_t n, const SieveOptions& opts = {});

// One report per n in {n_from, n_from+step, ...} <= n_to.
// Throws std::invalid_argument on an empty range or step == 0.
std::vector<ParityReport> parity_sweep(uint64_t n_from, uint64_t n_to, uint64_t step,
                                       const SieveOptions& opts = {});

// Diagonal (n == m) family values for m = 1..n, with multiplicity:
// {6m^2-2m-1, 6m^2-1, 6m^2-1, 6m^2+2m-1} per m. All odd; the maximum is
// x_max(n).
std::vector<uint64_t> axis_values(uint64_t n);

struct DuplicateStats {
    uint64_t total_family_hits;  // family values <= x_max counted with multiplicity
    uint64_t distinct_values;
    uint64_t duplicate_odd;   // distinct values with multiplicity >= 2, odd
    uint64_t duplicate_even;  // same, even
};

// Multiplicity census of the k=1 family values <= x_max(n), every modulus
// 6m -/+ 1 included. A measurement, not an asserted invariant.
DuplicateStats duplicate_stats(uint64_t n);

// CSV schema: header "n,x_max,complement_size,even,odd,ratio", LF endings.
void write_parity_csv(std::ostream& out, const std::vector<ParityReport>& reports);

}  // namespace pairsieve
