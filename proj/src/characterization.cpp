#include "pairsieve/characterization.hpp"

#include <stdexcept>

namespace pairsieve {

bool is_representable(uint64_t z) {
    if (z < 1) throw std::invalid_argument("is_representable needs z >= 1");
    // z = x(2y+1) + y  <=>  (2y+1) | z - y, with x = (z-y)/(2y+1) >= 1
    for (uint64_t y = 1; 3 * y + 1 <= z; ++y) {
        if ((z - y) % (2 * y + 1) == 0) return true;
    }
    return false;
}

std::vector<uint64_t> representable_set(uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("representable_set needs limit >= 1");
    std::vector<uint64_t> out;
    for (uint64_t z = 1; z <= limit; ++z) {
        if (is_representable(z)) out.push_back(z);
    }
    return out;
}

}  // namespace pairsieve
