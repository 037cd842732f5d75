#include "pairsieve/families.hpp"

#include <stdexcept>

namespace pairsieve {

OffsetForm derive_offset(Branch branch, uint64_t c) {
    if (c < 5 || c % 2 == 0 || c % 3 == 0)
        throw std::invalid_argument("offset target must be >= 5 and coprime to 6");
    const uint64_t rem = c % 6;  // 1 or 5
    const uint64_t a = rem == 5 ? (c + 1) / 6 : (c - 1) / 6;
    // eps = +1 on (Minus, c=6a-1) and (Plus, c=6a+1); -1 on the cross cases.
    // Then 6*x(m,n) + c = d(m) * (6n + eps) identically.
    const int eps = (rem == 5) != (branch == Branch::Plus) ? +1 : -1;
    return {eps, a};
}

std::vector<FamilySpec> derive_families(const PairClass& pc) {
    if (!PairClass::valid(pc.k, pc.residue))
        throw std::invalid_argument("invalid pair class");
    std::vector<FamilySpec> out;
    out.reserve(4);
    // order (Minus,c1), (Minus,c2), (Plus,c1), (Plus,c2)
    for (Branch b : {Branch::Minus, Branch::Plus}) {
        for (uint64_t c : {pc.c1, pc.c2}) {
            OffsetForm f = derive_offset(b, c);
            out.push_back(FamilySpec{b, f.eps, f.a, c});
        }
    }
    return out;
}

std::optional<Progression> fixed_cofactor_probe(uint64_t x2, const PairClass& pc,
                                                PairMember member) {
    if (x2 < 1) throw std::invalid_argument("fixed_cofactor_probe needs x2 >= 1");
    const uint64_t q = checked_add(checked_mul(2, x2), 1);
    if (q % 3 == 0) return std::nullopt;  // 3 | q: q*(2n+1) is 3 mod 6, never c mod 6
    const uint64_t c = member == PairMember::First ? pc.c1 : pc.c2;

    // Solve 6x + c = q * (2n + 1), n >= 1. Units mod 6 are self-inverse,
    // so 2n + 1 must be r = c*q mod 6, i.e. n = 3t + n0 with n0 = (r-1)/2.
    const uint64_t r = (c % 6) * (q % 6) % 6;
    const uint64_t n0 = (r - 1) / 2;  // 0 or 2
    const __int128 base =
        (static_cast<__int128>(q) * (2 * n0 + 1) - static_cast<__int128>(c)) / 6;

    __int128 t = n0 == 0 ? 1 : 0;  // smallest t with n >= 1
    if (static_cast<__int128>(q) * t + base < 0) {
        // advance to the first nonnegative index
        t = (-base + q - 1) / q;
    }
    const __int128 first = static_cast<__int128>(q) * t + base;
    if (first > static_cast<__int128>(kMaxIndex))
        throw std::overflow_error("probe progression start exceeds the index domain");
    return Progression{q, static_cast<uint64_t>(first)};
}

}  // namespace pairsieve
