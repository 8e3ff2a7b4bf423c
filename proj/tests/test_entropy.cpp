#include "doctest.h"
#include "fixtures.hpp"
#include "subshift/entropy.hpp"

#include <cmath>

using namespace subshift;
using namespace subshift::fixtures;

TEST_CASE("certified perron on known matrices") {
    // golden mean transfer matrix
    auto pb = certified_perron({{1, 1}, {1, 0}});
    REQUIRE(!pb.zero);
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(pb.lower.convert_to<double>() <= phi);
    CHECK(pb.upper.convert_to<double>() >= phi);
    CHECK(pb.upper.convert_to<double>() - pb.lower.convert_to<double>() < 1e-10);

    // pure cycle: spectral radius exactly 1
    auto cyc = certified_perron({{0, 1}, {1, 0}});
    CHECK(cyc.lower == 1);
    CHECK(cyc.upper == 1);

    // nilpotent: no cycles
    CHECK(certified_perron({{0, 1}, {0, 0}}).zero);

    // reducible with two components: max wins
    auto red = certified_perron({{2, 1}, {0, 1}});
    CHECK(red.lower.convert_to<double>() == doctest::Approx(2.0));
}

TEST_CASE("entropy_exact_1d golden mean") {
    auto e = entropy_exact_1d(golden_mean());
    REQUIRE(!e.empty_subshift);
    double expect = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(e.lower <= expect + 1e-12);
    CHECK(e.upper >= expect - 1e-12);
    CHECK(std::abs(e.value() - expect) < 1e-9);
    CHECK(e.method == EntropyMethod::TransferExact);
}

TEST_CASE("entropy_exact_1d full 3-shift and degenerate cases") {
    CHECK(std::abs(entropy_exact_1d(full_shift_1d(3)).value() - std::log(3.0)) < 1e-9);
    CHECK(entropy_exact_1d(bbb_only()).value() == 0.0);

    // empty subshift: forbid both symbols as singletons
    auto empty = SftSpec::make(z1(), binary_alphabet(),
                               {make_pattern(FiniteSet({g1(0)}), {0}),
                                make_pattern(FiniteSet({g1(0)}), {1})});
    CHECK(entropy_exact_1d(empty).empty_subshift);
}

TEST_CASE("entropy_upper_bound examples") {
    auto gm = golden_mean();
    auto e = entropy_upper_bound(gm, interval(0, 2));
    CHECK(e.upper == doctest::Approx(std::log(5.0) / 3.0));

    auto hs = hard_square();
    auto e2b = entropy_upper_bound(hs, box2(4, 4));
    CHECK(e2b.upper == doctest::Approx(std::log(1234.0) / 16.0));
    CHECK(e2b.exactness == Exactness::Exact);  // safe symbol: local = global

    auto full = entropy_upper_bound(full_shift_1d(2), interval(0, 4));
    CHECK(full.upper == doctest::Approx(std::log(2.0)));
}

TEST_CASE("box bound dominates exact value") {
    for (const auto& x : {golden_mean(), full_shift_1d(2), colorings_1d(3), bbb_only()}) {
        auto exact = entropy_exact_1d(x);
        for (int n = 1; n <= 8; ++n) {
            auto bound = entropy_upper_bound(x, interval(0, n - 1));
            if (exact.empty_subshift) continue;
            CHECK(bound.upper >= exact.lower - 1e-12);
        }
    }
}

TEST_CASE("strip entropy hard square") {
    auto hs = hard_square();
    auto e1s = strip_entropy(hs, g2(0, 1), 1);
    REQUIRE(!e1s.empty_subshift);
    CHECK(e1s.lower == 0.0);
    CHECK(e1s.upper == 0.0);

    auto e2s = strip_entropy(hs, g2(0, 1), 2);
    double expect = 0.5 * std::log(1.0 + std::sqrt(2.0));
    CHECK(std::abs(e2s.value() - expect) < 1e-9);
}

TEST_CASE("strip entropy full shift is log|A| for every direction") {
    auto full = full_shift_2d(2);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}}) {
        for (std::int64_t n = 1; n <= 3; ++n) {
            auto e = strip_entropy(full, g2(a, b), n);
            CHECK(std::abs(e.value() - std::log(2.0)) < 1e-9);
        }
    }
}

TEST_CASE("strip rejects imprimitive directions") {
    CHECK_THROWS(strip_entropy(hard_square(), g2(2, 0), 1));
    CHECK_THROWS(strip_entropy(hard_square(), g2(0, 0), 1));
}
