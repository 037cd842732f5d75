#include "doctest.h"

#include <stdexcept>

#include "pairsieve/characterization.hpp"
#include "reference_program.hpp"

using namespace pairsieve;

namespace {

// same predicate, searched from the other factor; exercises the symmetry
// of z = 2xy + x + y under swapping x and y
bool representable_by_x(uint64_t z) {
    for (uint64_t x = 1; 3 * x + 1 <= z; ++x)
        if ((z - x) % (2 * x + 1) == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("small odd-index representability") {
    CHECK(is_representable(4));    // 9 = 3*3
    CHECK(is_representable(7));    // 15 = 3*5
    CHECK(is_representable(17));   // 35 = 5*7
    CHECK_FALSE(is_representable(1));
    CHECK_FALSE(is_representable(2));
    CHECK_FALSE(is_representable(3));
    CHECK_FALSE(is_representable(5));
    CHECK_FALSE(is_representable(6));
    CHECK_THROWS_AS(is_representable(0), std::invalid_argument);
}

TEST_CASE("representable sets") {
    CHECK(representable_set(10) == std::vector<uint64_t>{4, 7, 10});
    CHECK(representable_set(1).empty());
    CHECK(representable_set(20) ==
          std::vector<uint64_t>{4, 7, 10, 12, 13, 16, 17, 19});
}

TEST_CASE("representability means 2z+1 is composite") {
    for (uint64_t z = 1; z <= 10000; ++z)
        CHECK(is_representable(z) == !testoracle::trial_prime(2 * z + 1));
}

TEST_CASE("search order does not change the answer") {
    for (uint64_t z = 1; z <= 2000; ++z)
        CHECK(is_representable(z) == representable_by_x(z));
}
