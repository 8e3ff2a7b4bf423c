#include "doctest.h"
#include "fixtures.hpp"
#include "subshift/clopen.hpp"

#include <random>

using namespace subshift;
using namespace subshift::fixtures;

namespace {

ClopenSet cyl1(const SftSpec& x, std::int64_t pos, Symbol s) {
    return ClopenSet::cylinder(x, make_pattern(FiniteSet({g1(pos)}), {s}));
}

}  // namespace

TEST_CASE("cylinder basics and renormalization") {
    auto gm = golden_mean();
    auto c = cyl1(gm, 0, 1);
    CHECK(!c.is_empty());
    CHECK(c.patterns().size() == 1);

    // [x0=1] ∩ sigma-shift of itself is empty: "11" forbidden
    auto shifted = clopen_shift(g1(1), c);
    CHECK(clopen_intersect(c, shifted).is_empty());

    // [x0=1] ∪ [x0=0] = whole space
    CHECK(clopen_equal(clopen_union(c, cyl1(gm, 0, 0)), ClopenSet::whole(gm)));

    // double complement
    CHECK(clopen_equal(clopen_complement(clopen_complement(c)), c));
}

TEST_CASE("renormalization drops dead cylinders") {
    auto x = bbb_only();
    // "a" at the origin is locally fine but globally impossible
    auto c = ClopenSet::cylinder(x, make_pattern(FiniteSet({g1(0)}), {0}));
    CHECK(c.is_empty());
}

TEST_CASE("mismatched ambient subshifts rejected") {
    auto a = cyl1(golden_mean(), 0, 1);
    auto b = cyl1(full_shift_1d(2), 0, 1);
    CHECK_THROWS(clopen_union(a, b));
}

TEST_CASE("member on concrete contexts") {
    auto gm = golden_mean();
    auto c = ClopenSet::cylinder(gm, word_pattern(z1(), 0, {1, 0}));
    CHECK(c.member(word_pattern(z1(), -1, {0, 1, 0, 0})));
    CHECK(!c.member(word_pattern(z1(), -1, {0, 0, 1, 0})));
    CHECK_THROWS(c.member(word_pattern(z1(), 5, {1, 0})));
}

TEST_CASE("boolean axioms on random cylinder families") {
    auto gm = golden_mean();
    std::mt19937_64 rng(31);
    auto random_clopen = [&]() {
        std::int64_t pos = static_cast<std::int64_t>(rng() % 3) - 1;
        int len = 1 + static_cast<int>(rng() % 2);
        std::vector<Symbol> w;
        bool prev1 = false;
        for (int i = 0; i < len; ++i) {
            Symbol s = static_cast<Symbol>(rng() % 2);
            if (prev1 && s == 1) s = 0;
            prev1 = (s == 1);
            w.push_back(s);
        }
        return ClopenSet::cylinder(gm, word_pattern(z1(), pos, w));
    };
    for (int t = 0; t < 25; ++t) {
        auto a = random_clopen();
        auto b = random_clopen();
        auto c = random_clopen();
        // de Morgan
        CHECK(clopen_equal(clopen_complement(clopen_union(a, b)),
                           clopen_intersect(clopen_complement(a), clopen_complement(b))));
        // distributivity
        CHECK(clopen_equal(clopen_intersect(a, clopen_union(b, c)),
                           clopen_union(clopen_intersect(a, b), clopen_intersect(a, c))));
        // shift is a boolean homomorphism
        auto v = g1(static_cast<std::int64_t>(rng() % 5) - 2);
        CHECK(clopen_equal(clopen_shift(v, clopen_union(a, b)),
                           clopen_union(clopen_shift(v, a), clopen_shift(v, b))));
        // subset sanity
        CHECK(clopen_subset(clopen_intersect(a, b), a));
        CHECK(clopen_subset(a, clopen_union(a, b)));
    }
}

TEST_CASE("shift composes and inverts") {
    auto gm = golden_mean();
    auto c = ClopenSet::cylinder(gm, word_pattern(z1(), 0, {1, 0}));
    auto s = clopen_shift(g1(3), c);
    auto back = clopen_shift(g1(-3), s);
    CHECK(clopen_equal(back, c));
}
