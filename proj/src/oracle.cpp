#include "pairsieve/oracle.hpp"

#include <stdexcept>

namespace pairsieve::oracle {

namespace {

constexpr uint64_t kTrialCutoff = 10000;

bool trial_division(uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    if (v % 3 == 0) return v == 3;
    for (uint64_t i = 5; i * i <= v; i += 6)
        if (v % i == 0 || v % (i + 2) == 0) return false;
    return true;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Sinclair's witness set, deterministic for every 64-bit integer
constexpr uint64_t kWitnesses[] = {2,      325,    9375,      28178,
                                   450775, 9780504, 1795265022};

bool miller_rabin(uint64_t v) {
    uint64_t d = v - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t w : kWitnesses) {
        uint64_t a = w % v;
        if (a == 0) continue;
        uint64_t x = powmod(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(uint64_t v) {
    if (v < kTrialCutoff) return trial_division(v);
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (v % p == 0) return false;
    return miller_rabin(v);
}

std::vector<PairRecord> oracle_pairs(uint64_t k, uint64_t p_limit) {
    if (k < 1) throw std::invalid_argument("oracle_pairs needs k >= 1");
    if (p_limit < 3) throw std::invalid_argument("oracle_pairs needs p_limit >= 3");
    const uint64_t gap = checked_mul(2, k);
    checked_add(p_limit, gap);

    std::vector<PairRecord> out;
    for (uint64_t p = 3; p <= p_limit; p += 2)
        if (is_prime(p) && is_prime(p + gap)) out.push_back({p, p + gap});
    return out;
}

}  // namespace pairsieve::oracle
