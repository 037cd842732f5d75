#include "doctest.h"

#include <random>

#include "pairsieve/core.hpp"

using namespace pairsieve;

TEST_CASE("index maps to the 3x+1 sequence") {
    CHECK(index_to_sequence(1) == 4);
    CHECK(index_to_sequence(4) == 13);
    CHECK(index_to_sequence(0) == 1);
}

TEST_CASE("sequence value maps to its odd number") {
    CHECK(sequence_to_odd(4) == 9);
    CHECK(sequence_to_odd(13) == 27);
    CHECK(sequence_to_odd(1) == 3);
}

TEST_CASE("index maps to the candidate pair") {
    const PairClass twins = PairClass::make(1, ResidueCase::A);
    CHECK(index_to_pair(1, twins) == std::pair<uint64_t, uint64_t>{11, 13});
    CHECK(index_to_pair(0, twins) == std::pair<uint64_t, uint64_t>{5, 7});

    const PairClass cousins = PairClass::make(2, ResidueCase::B);
    CHECK(index_to_pair(0, cousins) == std::pair<uint64_t, uint64_t>{7, 11});
}

TEST_CASE("pair arithmetic rejects 64-bit overflow") {
    const PairClass twins = PairClass::make(1, ResidueCase::A);
    CHECK_THROWS_AS(index_to_pair(UINT64_MAX / 4, twins), std::overflow_error);
    CHECK_NOTHROW(index_to_pair(kMaxIndex, twins));
}

TEST_CASE("twin candidates are the two odd numbers after the sequence value") {
    const PairClass twins = PairClass::make(1, ResidueCase::A);
    for (uint64_t x = 0; x <= 10000; ++x) {
        const uint64_t odd = sequence_to_odd(index_to_sequence(x));
        const auto [p, q] = index_to_pair(x, twins);
        CHECK(p == odd + 2);
        CHECK(q == odd + 4);
    }
}

TEST_CASE("both candidate members are coprime to 6") {
    std::mt19937_64 rng(20240613);
    std::uniform_int_distribution<uint64_t> xs(0, 1'000'000);
    std::uniform_int_distribution<uint64_t> ks(1, 30);
    for (int i = 0; i < 2000; ++i) {
        const uint64_t k = ks(rng);
        for (const PairClass& pc : PairClass::valid_classes(k)) {
            const auto [p, q] = index_to_pair(xs(rng), pc);
            CHECK(p % 2 == 1);
            CHECK(p % 3 != 0);
            CHECK(q % 2 == 1);
            CHECK(q % 3 != 0);
        }
    }
}

TEST_CASE("residue-case validity follows k mod 3") {
    for (uint64_t k = 1; k <= 30; ++k) {
        CHECK(PairClass::valid(k, ResidueCase::A) == (k % 3 != 2));
        CHECK(PairClass::valid(k, ResidueCase::B) == (k % 3 != 1));
        // independent route: the case exists iff c2 = c1 + 2k stays coprime to 6
        CHECK(PairClass::valid(k, ResidueCase::A) == ((5 + 2 * k) % 3 != 0));
        CHECK(PairClass::valid(k, ResidueCase::B) == ((7 + 2 * k) % 3 != 0));
    }
}

TEST_CASE("pair-class construction") {
    CHECK(PairClass::make(1, ResidueCase::A).c2 == 7);
    CHECK(PairClass::make(2, ResidueCase::B).c2 == 11);
    CHECK(PairClass::make(3, ResidueCase::A).gap() == 6);
    CHECK_THROWS_AS(PairClass::make(1, ResidueCase::B), std::invalid_argument);
    CHECK_THROWS_AS(PairClass::make(2, ResidueCase::A), std::invalid_argument);
    CHECK_THROWS_AS(PairClass::make(0, ResidueCase::A), std::invalid_argument);

    CHECK(PairClass::valid_classes(1).size() == 1);
    CHECK(PairClass::valid_classes(2).size() == 1);
    CHECK(PairClass::valid_classes(3).size() == 2);
    CHECK(PairClass::valid_classes(3)[0].residue == ResidueCase::A);
    CHECK(PairClass::valid_classes(3)[1].residue == ResidueCase::B);
}
