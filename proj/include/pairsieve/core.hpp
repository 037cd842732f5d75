#pragma once
// Domain types and the index <-> odd-number arithmetic shared by all modules.
//
// Candidate pairs live on a mod-6 wheel: index x >= 0 stands for the pair
// (6x + c1, 6x + c2) where c1 is 5 (case A) or 7 (case B) and c2 = c1 + 2k.
// Both members are coprime to 2 and 3 by construction.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pairsieve {

// Largest index for which 6*x + c stays clear of 64-bit overflow.
inline constexpr uint64_t kMaxIndex = ((UINT64_C(1) << 63) - 16) / 6;

uint64_t checked_add(uint64_t a, uint64_t b);
uint64_t checked_mul(uint64_t a, uint64_t b);

// Modulus branch: d(m) = 6m - 1 (Minus) or d(m) = 6m + 1 (Plus).
enum class Branch : uint8_t { Minus, Plus };

// Residue case of a pair class: A puts the smaller member at 6x+5, B at 6x+7.
enum class ResidueCase : uint8_t { A, B };

const char* to_string(Branch b);
const char* to_string(ResidueCase rc);

// Gap class 2k plus residue case; fixes the two odd offsets (c1, c2).
//
// Case A exists iff k % 3 != 2 and case B iff k % 3 != 1: the remaining
// combinations put 3 | c2, so every candidate pair would contain a
// multiple of 3. For k % 3 == 0 both cases exist.
struct PairClass {
    uint64_t k = 1;
    ResidueCase residue = ResidueCase::A;
    uint64_t c1 = 5;
    uint64_t c2 = 7;

    static bool valid(uint64_t k, ResidueCase rc);
    // Throws std::invalid_argument for an impossible (k, case) combination.
    static PairClass make(uint64_t k, ResidueCase rc);
    // The one or two constructible classes for k, case A first.
    static std::vector<PairClass> valid_classes(uint64_t k);

    uint64_t gap() const { return c2 - c1; }  // == 2k
    friend bool operator==(const PairClass&, const PairClass&) = default;
};

// One exclusion family. Every index x(m, n) = d(m)*n + eps*m - a with
// m, n >= 1 has d(m) | 6*x + offset_target, and the cofactor is 6n + eps,
// so the targeted pair member is composite.
struct FamilySpec {
    Branch branch;
    int eps;                 // sign of the m term in the offset
    uint64_t a;              // constant part of the offset
    uint64_t offset_target;  // which of c1/c2 this family divides

    uint64_t modulus(uint64_t m) const {
        return branch == Branch::Minus ? 6 * m - 1 : 6 * m + 1;
    }
    int64_t offset(uint64_t m) const {
        return eps * static_cast<int64_t>(m) - static_cast<int64_t>(a);
    }
    // May be negative at small m, n; the sieve skips those.
    int64_t value(uint64_t m, uint64_t n) const {
        return static_cast<int64_t>(modulus(m) * n) + offset(m);
    }
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// A concrete prime pair (p, p + 2k).
struct PairRecord {
    uint64_t p;
    uint64_t q;
    friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

// Sequence value 3x + 1 of index x.
uint64_t index_to_sequence(uint64_t x);

// The odd number 2s + 1 represented by sequence value s.
uint64_t sequence_to_odd(uint64_t s);

// Candidate pair of index x under class pc. Primality is not implied.
// Throws std::overflow_error when 6x + c2 leaves 64 bits.
std::pair<uint64_t, uint64_t> index_to_pair(uint64_t x, const PairClass& pc);

}  // namespace pairsieve
