#pragma once
// Closed-form derivation of the exclusion families of a pair class.
//
// For a pair member 6x + c (c coprime to 6) and a modulus d = 6m -/+ 1, the
// indices with d | 6x + c form the progression x = d*n + eps*m - a, n >= 1,
// where c = 6a - 1 or 6a + 1 and eps depends on branch and c mod 6. Each
// pair class yields exactly four families: {Minus, Plus} x {c1, c2}.

#include <cstdint>
#include <optional>
#include <vector>

#include "pairsieve/core.hpp"

namespace pairsieve {

struct OffsetForm {
    int eps;
    uint64_t a;
};

// Offset form for one branch and target offset c. Throws std::invalid_argument
// unless c >= 5 and c is coprime to 6.
OffsetForm derive_offset(Branch branch, uint64_t c);

// The four exclusion families of pc, ordered (Minus,c1), (Minus,c2),
// (Plus,c1), (Plus,c2). Throws for an invalid class.
std::vector<FamilySpec> derive_families(const PairClass& pc);

// Arithmetic progression regarded as a set: {stride*t + first : t >= 0}.
struct Progression {
    uint64_t stride;
    uint64_t first;
    friend bool operator==(const Progression&, const Progression&) = default;
};

enum class PairMember : uint8_t { First, Second };

// Fix the cofactor q = 2*x2 + 1 and solve for the indices whose chosen pair
// member equals q * (odd number >= 3). Returns the progression of such
// indices, normalized so `first` is its smallest member, or nullopt when
// 3 | q and the quotient is non-integral for every n.
std::optional<Progression> fixed_cofactor_probe(uint64_t x2, const PairClass& pc,
                                                PairMember member);

}  // namespace pairsieve
