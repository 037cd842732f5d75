#pragma once
// Set-theoretic primality for odd numbers: 2z+1 is composite exactly when
// z = 2xy + x + y has a solution with x, y >= 1. Deliberately the slow,
// literal transcription; used as a cross-check, never as the fast path.

#include <cstdint>
#include <vector>

namespace pairsieve {

// True iff z = 2xy + x + y for some x, y >= 1. Requires z >= 1.
// Search runs over y while 3y + 1 <= z, since x >= 1 forces z >= 3y + 1.
bool is_representable(uint64_t z);

// All representable z <= limit, ascending.
std::vector<uint64_t> representable_set(uint64_t limit);

}  // namespace pairsieve
