#include "doctest.h"
#include "fixtures.hpp"
#include "subshift/overlap.hpp"

using namespace subshift;
using namespace subshift::fixtures;

namespace {

Pattern word(const std::string& s, std::int64_t lo = 0) {
    std::vector<Symbol> syms;
    for (char c : s) syms.push_back(c - 'a');
    return word_pattern(z1(), lo, syms);
}

}  // namespace

TEST_CASE("self_overlaps examples") {
    auto range = interval(-2, 2);
    CHECK(self_overlaps(z1(), word("aba"), range) == FiniteSet({g1(-2), g1(0), g1(2)}));
    CHECK(self_overlaps(z1(), word("aab"), range) == FiniteSet({g1(0)}));
    CHECK(self_overlaps(z1(), word("aaa"), range) == range);
}

TEST_CASE("self_overlaps symmetry") {
    for (const auto& s : {std::string("abcab"), std::string("aabab"), std::string("abbba")}) {
        auto so = self_overlaps(z1(), word(s), interval(-4, 4));
        CHECK(so == negate_set(z1(), so));
    }
}

TEST_CASE("find_overlap_free_pattern 1D full shift") {
    auto full = full_shift_1d(2);
    auto res = find_overlap_free_pattern(full, 5, 7);
    CHECK(res.pattern.support == make_annulus(5, z1()));
    // deterministic across reruns
    auto res2 = find_overlap_free_pattern(full, 5, 7);
    CHECK(res.pattern == res2.pattern);
    CHECK(res.attempts == res2.attempts);
    // brute-force re-verification
    auto so = self_overlaps(z1(), res.pattern, make_box(5, z1()));
    CHECK(so == FiniteSet({g1(0)}));
}

TEST_CASE("find_overlap_free_pattern 2D full shift") {
    auto full = full_shift_2d(2);
    auto res = find_overlap_free_pattern(full, 4, 7);
    CHECK(res.pattern.support == make_annulus(4, z2()));
    auto so = self_overlaps(z2(), res.pattern, make_box(4, z2()));
    CHECK(so == FiniteSet({g2(0, 0)}));
    auto res2 = find_overlap_free_pattern(full, 4, 7);
    CHECK(res.pattern == res2.pattern);
}

TEST_CASE("find_overlap_free_pattern on a constrained SFT") {
    auto gm = golden_mean();
    auto res = find_overlap_free_pattern(gm, 6, 11);
    CHECK(is_locally_admissible(gm, res.pattern));
    auto so = self_overlaps(z1(), res.pattern, make_box(6, z1()));
    CHECK(so == FiniteSet({g1(0)}));
}

TEST_CASE("find_overlap_free_pattern rejects trivial subshifts") {
    // single fixed point
    auto x = SftSpec::make(z1(), binary_alphabet(), {make_pattern(FiniteSet({g1(0)}), {1})});
    CHECK_THROWS(find_overlap_free_pattern(x, 4, 1));
}

TEST_CASE("substitute_at_marks") {
    // y = 0 ab 0 ab 0 over positions 0..7, marks at the second occurrence
    auto y = word("cabcabc");  // c=2 plays the role of filler
    auto from = word("ab");
    auto to = word("ba");

    Pattern marks{FiniteSet({g1(1), g1(4)}), {0, 1}};
    auto out = substitute_at_marks(z1(), y, marks, from, to);
    CHECK(out == word("cabcbac"));

    // all-zero marks: unchanged
    Pattern none{FiniteSet({g1(1), g1(4)}), {0, 0}};
    CHECK(substitute_at_marks(z1(), y, none, from, to) == y);

    // w_from = w_to: unchanged for any marks
    CHECK(substitute_at_marks(z1(), y, marks, from, from) == y);

    // substituting back with swapped patterns restores the original
    auto back = substitute_at_marks(z1(), out, marks, to, from);
    CHECK(back == y);
}

TEST_CASE("substitute_at_marks detects overlapping occurrences") {
    auto y = word("aaaa");
    auto from = word("aa");
    auto to = word("ba");
    Pattern marks{FiniteSet({g1(0), g1(1)}), {1, 1}};
    CHECK_THROWS(substitute_at_marks(z1(), y, marks, from, to));
}

TEST_CASE("substitute inverts under swapped patterns on random marks") {
    auto full = full_shift_1d(3);
    (void)full;
    auto y = word("abcabcabcabc");
    auto from = word("abc");
    auto to = word("cba");
    Pattern marks{FiniteSet({g1(0), g1(6)}), {1, 1}};
    auto out = substitute_at_marks(z1(), y, marks, from, to);
    CHECK(substitute_at_marks(z1(), out, marks, to, from) == y);
}
