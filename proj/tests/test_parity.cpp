#include "doctest.h"

#include <sstream>

#include "pairsieve/parity.hpp"
#include "reference_program.hpp"

using namespace pairsieve;

namespace {

std::vector<uint64_t> window_complement(uint64_t n) {
    const uint64_t x_max = window_x_max(n);
    const ExclusionSet es =
        build_exclusions(PairClass::make(1, ResidueCase::A), x_max);
    std::vector<uint64_t> out;
    for (uint64_t x = 1; x <= x_max; ++x)
        if (!es.excluded(x)) out.push_back(x);
    return out;
}

}  // namespace

TEST_CASE("window bound") {
    CHECK(window_x_max(1) == 7);
    CHECK(window_x_max(2) == 27);
    CHECK(window_x_max(150) == 135299);
    CHECK_THROWS_AS(window_x_max(0), std::invalid_argument);
}

TEST_CASE("small window reports") {
    const ParityReport r1 = parity_report(1);
    CHECK(r1.x_max == 7);
    CHECK(r1.complement_size == 4);  // {1, 2, 4, 6}
    CHECK(r1.even_count == 3);
    CHECK(r1.odd_count == 1);
    CHECK(r1.balance() == 2);
    CHECK(r1.ratio_string() == "2.000000");

    const ParityReport r2 = parity_report(2);
    CHECK(r2.x_max == 27);
    CHECK(window_complement(2) ==
          std::vector<uint64_t>{1, 2, 4, 6, 9, 11, 16, 17, 22, 24});
    CHECK(r2.even_count == 6);
    CHECK(r2.odd_count == 4);
    CHECK(r2.ratio_string() == "1.000000");
}

TEST_CASE("window complement equals the quadratic-bound program output") {
    for (uint64_t n : {1, 2, 10, 50}) {
        CHECK(window_complement(n) == testoracle::window_program_complement(n));
        const ParityReport r = parity_report(n);
        const auto ref = testoracle::window_program_complement(n);
        uint64_t even = 0;
        for (uint64_t q : ref) even += q % 2 == 0;
        CHECK(r.complement_size == ref.size());
        CHECK(r.even_count == even);
    }
}

TEST_CASE("ratio renders as an exact 6-place decimal") {
    auto make = [](uint64_t n, uint64_t even, uint64_t odd) {
        return ParityReport{n, 0, even + odd, even, odd};
    };
    CHECK(make(3, 1, 0).ratio_string() == "0.333333");
    CHECK(make(3, 2, 0).ratio_string() == "0.666667");
    CHECK(make(3, 0, 1).ratio_string() == "-0.333333");
    CHECK(make(4, 0, 2).ratio_string() == "-0.500000");
    CHECK(make(7, 22, 1).ratio_string() == "3.000000");
    CHECK(make(1000000, 1, 0).ratio_string() == "0.000001");
}

TEST_CASE("sweeps walk the range inclusively") {
    const auto reports = parity_sweep(1, 2, 1);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].ratio_string() == "2.000000");
    CHECK(reports[1].ratio_string() == "1.000000");

    CHECK(parity_sweep(1, 10, 4).size() == 3);  // 1, 5, 9
    CHECK_THROWS_AS(parity_sweep(5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(parity_sweep(0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(parity_sweep(1, 3, 0), std::invalid_argument);
}

TEST_CASE("axis values are the diagonal family values") {
    CHECK(axis_values(1) == std::vector<uint64_t>{3, 5, 5, 7});
    CHECK(axis_values(2) == std::vector<uint64_t>{3, 5, 5, 7, 19, 23, 23, 27});
    for (uint64_t n : {1, 2, 3, 17, 100, 2000}) {
        const auto vals = axis_values(n);
        REQUIRE(vals.size() == 4 * n);
        uint64_t max = 0;
        for (uint64_t v : vals) {
            CHECK(v % 2 == 1);
            max = std::max(max, v);
        }
        CHECK(max == window_x_max(n));
    }
}

TEST_CASE("the window endpoint is always excluded") {
    for (uint64_t n = 1; n <= 40; ++n) {
        const uint64_t x_max = window_x_max(n);
        const ExclusionSet es =
            build_exclusions(PairClass::make(1, ResidueCase::A), x_max);
        CHECK(es.excluded(x_max));
        CHECK(window_complement(n).back() < x_max);
    }
}

TEST_CASE("growing the window never flips earlier bits") {
    const PairClass k1 = PairClass::make(1, ResidueCase::A);
    for (uint64_t n = 1; n <= 15; ++n) {
        const ExclusionSet small = build_exclusions(k1, window_x_max(n));
        const ExclusionSet big = build_exclusions(k1, window_x_max(n + 1));
        for (uint64_t x = 0; x <= small.x_limit(); ++x)
            REQUIRE(small.excluded(x) == big.excluded(x));
    }
}

TEST_CASE("duplicate census") {
    const DuplicateStats s1 = duplicate_stats(1);
    CHECK(s1.total_family_hits == 4);  // values 3, 5, 5, 7
    CHECK(s1.distinct_values == 3);
    CHECK(s1.duplicate_odd == 1);  // the value 5
    CHECK(s1.duplicate_even == 0);

    // the diagonal value 6m^2 - 1 always repeats; spot-check it is counted
    const DuplicateStats s10 = duplicate_stats(10);
    CHECK(s10.distinct_values <= s10.total_family_hits);
    CHECK(s10.duplicate_odd >= 10);  // at least the axis values 6m^2 - 1
    CHECK(s10.duplicate_odd + s10.duplicate_even <= s10.distinct_values);
}

TEST_CASE("parity CSV schema and round trip") {
    std::ostringstream out;
    write_parity_csv(out, parity_sweep(1, 2, 1));
    const std::string text = out.str();
    CHECK(text ==
          "n,x_max,complement_size,even,odd,ratio\n"
          "1,7,4,3,1,2.000000\n"
          "2,27,10,6,4,1.000000\n");
    CHECK(text.find('\r') == std::string::npos);

    // parsing the rows back reproduces the records
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    for (const ParityReport& expect : parity_sweep(1, 2, 1)) {
        REQUIRE(std::getline(in, line));
        ParityReport got{};
        char dot;
        uint64_t frac_whole, frac_part;
        std::istringstream row(line);
        char comma;
        row >> got.n >> comma >> got.x_max >> comma >> got.complement_size >> comma >>
            got.even_count >> comma >> got.odd_count >> comma >> frac_whole >> dot >>
            frac_part;
        CHECK(got.n == expect.n);
        CHECK(got.x_max == expect.x_max);
        CHECK(got.complement_size == expect.complement_size);
        CHECK(got.even_count == expect.even_count);
        CHECK(got.odd_count == expect.odd_count);
    }
}
