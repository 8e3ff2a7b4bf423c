#pragma once

#include "subshift/sft.hpp"

namespace subshift::fixtures {

inline GroupSpec z1() { return GroupSpec{1, {}}; }
inline GroupSpec z2() { return GroupSpec{2, {}}; }

inline GroupElement g1(std::int64_t a) { return make_element(z1(), {a}); }
inline GroupElement g2(std::int64_t a, std::int64_t b) { return make_element(z2(), {a, b}); }

inline FiniteSet interval(std::int64_t lo, std::int64_t hi) {
    std::vector<GroupElement> v;
    for (std::int64_t i = lo; i <= hi; ++i) v.push_back(g1(i));
    return FiniteSet(std::move(v));
}

inline FiniteSet box2(std::int64_t w, std::int64_t h) {  // [0,w) x [0,h)
    std::vector<GroupElement> v;
    for (std::int64_t a = 0; a < w; ++a)
        for (std::int64_t b = 0; b < h; ++b) v.push_back(g2(a, b));
    return FiniteSet(std::move(v));
}

/// Z, {0,1}, forbid "11".
inline SftSpec golden_mean() {
    Pattern f = word_pattern(z1(), 0, {1, 1});
    return SftSpec::make(z1(), binary_alphabet(), {f});
}

/// Z^2, {0,1}, no two adjacent 1s (horizontal or vertical).
inline SftSpec hard_square() {
    Pattern fh = make_pattern(FiniteSet({g2(0, 0), g2(1, 0)}), {1, 1});
    Pattern fv = make_pattern(FiniteSet({g2(0, 0), g2(0, 1)}), {1, 1});
    return SftSpec::make(z2(), binary_alphabet(), {fh, fv});
}

inline SftSpec full_shift_1d(int k) { return SftSpec::full_shift(z1(), numbered_alphabet(k)); }
inline SftSpec full_shift_2d(int k) { return SftSpec::full_shift(z2(), numbered_alphabet(k)); }

/// Z, {1..k}, proper colorings of the path graph.
inline SftSpec colorings_1d(int k) {
    std::vector<Pattern> forb;
    for (Symbol c = 0; c < k; ++c)
        forb.push_back(make_pattern(interval(0, 1), {c, c}));
    return SftSpec::make(z1(), numbered_alphabet(k, 1), forb);
}

/// {a,b}, forbid "ab","ba","aa": only b^infinity survives globally.
inline SftSpec bbb_only() {
    Alphabet al{{"a", "b"}};
    auto w01 = interval(0, 1);
    return SftSpec::make(z1(), al,
                         {make_pattern(w01, {0, 1}), make_pattern(w01, {1, 0}),
                          make_pattern(w01, {0, 0})});
}

/// Independent brute-force language enumeration (no pruning); test oracle.
inline std::vector<std::vector<Symbol>> brute_language(const SftSpec& x, const FiniteSet& f) {
    const int n = static_cast<int>(f.size());
    const int k = static_cast<int>(x.alphabet().size());
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> a(n, 0);
    while (true) {
        if (is_locally_admissible(x, make_pattern(f, a))) out.push_back(a);
        int i = n - 1;
        for (; i >= 0; --i) {
            if (a[i] + 1 < k) {
                ++a[i];
                break;
            }
            a[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace subshift::fixtures
