#include "pairsieve/core.hpp"

namespace pairsieve {

uint64_t checked_add(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in addition");
    return r;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

const char* to_string(Branch b) {
    return b == Branch::Minus ? "minus" : "plus";
}

const char* to_string(ResidueCase rc) {
    return rc == ResidueCase::A ? "A" : "B";
}

bool PairClass::valid(uint64_t k, ResidueCase rc) {
    if (k == 0) return false;
    return rc == ResidueCase::A ? k % 3 != 2 : k % 3 != 1;
}

PairClass PairClass::make(uint64_t k, ResidueCase rc) {
    if (k == 0) throw std::invalid_argument("pair class needs k >= 1");
    if (!valid(k, rc)) {
        // the offending member is 6x + c1 + 2k, divisible by 3
        throw std::invalid_argument(
            rc == ResidueCase::A
                ? "case A requires k mod 3 != 2 (otherwise 3 | 6x+5+2k)"
                : "case B requires k mod 3 != 1 (otherwise 3 | 6x+7+2k)");
    }
    PairClass pc;
    pc.k = k;
    pc.residue = rc;
    pc.c1 = rc == ResidueCase::A ? 5 : 7;
    pc.c2 = checked_add(pc.c1, checked_mul(2, k));
    return pc;
}

std::vector<PairClass> PairClass::valid_classes(uint64_t k) {
    std::vector<PairClass> out;
    if (valid(k, ResidueCase::A)) out.push_back(make(k, ResidueCase::A));
    if (valid(k, ResidueCase::B)) out.push_back(make(k, ResidueCase::B));
    return out;
}

uint64_t index_to_sequence(uint64_t x) {
    return checked_add(checked_mul(3, x), 1);
}

uint64_t sequence_to_odd(uint64_t s) {
    return checked_add(checked_mul(2, s), 1);
}

std::pair<uint64_t, uint64_t> index_to_pair(uint64_t x, const PairClass& pc) {
    uint64_t base = checked_mul(6, x);
    return {checked_add(base, pc.c1), checked_add(base, pc.c2)};
}

}  // namespace pairsieve
