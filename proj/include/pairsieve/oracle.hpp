#pragma once
// Independent ground truth used by the equivalence tests. This module must
// not include anything from families.hpp or sieve.hpp: the whole point is
// that it shares no code with the family machinery it checks.

#include <cstdint>
#include <vector>

#include "pairsieve/core.hpp"

namespace pairsieve::oracle {

// Deterministic primality for any 64-bit value: trial division below a
// fixed threshold, Miller-Rabin with a proven witness set above it.
bool is_prime(uint64_t v);

// Brute-force scan p = 3, 5, 7, ... <= p_limit, emitting (p, p + 2k) when
// both members are prime.
std::vector<PairRecord> oracle_pairs(uint64_t k, uint64_t p_limit);

}  // namespace pairsieve::oracle
