#include "doctest.h"
#include "subshift/group.hpp"

#include <random>

using namespace subshift;

namespace {

GroupSpec z1() { return GroupSpec{1, {}}; }
GroupSpec z2() { return GroupSpec{2, {}}; }

GroupElement e1(std::int64_t a) { return make_element(z1(), {a}); }
GroupElement e2(std::int64_t a, std::int64_t b) { return make_element(z2(), {a, b}); }

FiniteSet interval(std::int64_t lo, std::int64_t hi) {
    std::vector<GroupElement> v;
    for (std::int64_t i = lo; i <= hi; ++i) v.push_back(e1(i));
    return FiniteSet(std::move(v));
}

FiniteSet random_set(std::mt19937_64& rng, const GroupSpec& spec, int max_size, int span) {
    std::vector<GroupElement> v;
    int n = 1 + static_cast<int>(rng() % max_size);
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> free;
        for (int j = 0; j < spec.rank; ++j)
            free.push_back(static_cast<std::int64_t>(rng() % (2 * span + 1)) - span);
        std::vector<std::int64_t> tor;
        for (auto m : spec.moduli) tor.push_back(static_cast<std::int64_t>(rng() % m));
        v.push_back(make_element(spec, free, tor));
    }
    return FiniteSet(std::move(v));
}

std::int64_t sigma(std::int64_t n) {
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

}  // namespace

TEST_CASE("boxes and annuli") {
    CHECK(make_box(2, z1()) == interval(-2, 2));
    CHECK(make_box(2, z1()).size() == 5);

    GroupSpec zz{2, {2}};
    CHECK(make_box(1, zz).size() == 18);

    auto q5 = make_annulus(5, z1());
    CHECK(q5.size() == 10);
    CHECK(!q5.contains(e1(0)));
    CHECK(q5.contains(e1(5)));
    CHECK(q5.contains(e1(-5)));

    CHECK_THROWS(make_box(-1, z1()));
}

TEST_CASE("k_boundary examples") {
    auto b = k_boundary(z1(), interval(0, 1), interval(0, 4));
    CHECK(b == FiniteSet({e1(-1), e1(4)}));

    CHECK(k_boundary(z1(), FiniteSet({e1(0)}), interval(0, 4)).is_empty());

    auto b2 = k_boundary(z1(), interval(-1, 1), FiniteSet({e1(0)}));
    CHECK(b2 == interval(-1, 1));

    CHECK_THROWS(k_boundary(z1(), FiniteSet(), interval(0, 2)));
}

TEST_CASE("k_boundary translation equivariance") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto K = random_set(rng, z2(), 4, 3);
        auto F = random_set(rng, z2(), 6, 5);
        auto v = e2(static_cast<std::int64_t>(rng() % 9) - 4, static_cast<std::int64_t>(rng() % 9) - 4);
        auto lhs = k_boundary(z2(), K, translate(z2(), v, F));
        auto rhs = translate(z2(), v, k_boundary(z2(), K, F));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("is_invariant examples") {
    CHECK(is_invariant(z1(), interval(0, 1), Rational{1, 2}, interval(0, 4)));
    CHECK(!is_invariant(z1(), interval(0, 1), Rational{2, 5}, interval(0, 4)));
    CHECK(is_invariant(z1(), FiniteSet({e1(0)}), Rational{1, 100}, interval(0, 4)));
    CHECK_THROWS(is_invariant(z1(), interval(0, 1), Rational{1, 2}, FiniteSet()));
}

TEST_CASE("is_separated examples and symmetry") {
    CHECK(is_separated(z1(), FiniteSet({e1(0), e1(5)}), interval(0, 2)));
    CHECK(!is_separated(z1(), FiniteSet({e1(0), e1(2)}), interval(0, 2)));
    CHECK(is_separated(z1(), FiniteSet({e1(0)}), FiniteSet({e1(0)})));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        auto A = random_set(rng, z1(), 5, 8);
        auto B = random_set(rng, z1(), 5, 8);
        CHECK(is_separated(z1(), A, B) == is_separated(z1(), B, A));
    }
}

TEST_CASE("separated composition (triples)") {
    std::mt19937_64 rng(13);
    int checked = 0;
    for (int t = 0; t < 3000 && checked < 40; ++t) {
        auto A = random_set(rng, z1(), 4, 12);
        auto B = random_set(rng, z1(), 3, 3);
        auto C = random_set(rng, z1(), 3, 3);
        if (!is_separated(z1(), A, B)) continue;
        if (!is_separated(z1(), sumset(z1(), A, B), C)) continue;
        ++checked;
        CHECK(is_separated(z1(), A, sumset(z1(), B, C)));
    }
    CHECK(checked > 0);
}

TEST_CASE("maximal_separated greedy") {
    auto K = interval(-1, 1);
    CHECK(maximal_separated(z1(), FiniteSet({e1(0)}), interval(0, 4)) == interval(0, 4));
    CHECK(maximal_separated(z1(), K, interval(0, 6)) == FiniteSet({e1(0), e1(3), e1(6)}));

    GroupSpec spec = z1();
    auto g12 = Subgroup::from_generators(spec, {e1(12)});
    auto F = maximal_separated_quotient(spec, K, g12);
    CHECK(F == FiniteSet({e1(0), e1(3), e1(6), e1(9)}));

    // Lemma-style coverage: F+K+K covers the quotient
    auto fkk = sumset(spec, F, sumset(spec, K, K));
    std::vector<GroupElement> reduced;
    for (const auto& g : fkk) reduced.push_back(g12.reduce(g));
    CHECK(FiniteSet(std::move(reduced)).size() == 12);
}

TEST_CASE("maximal_separated quotient coverage property") {
    std::mt19937_64 rng(17);
    GroupSpec spec = z1();
    for (int t = 0; t < 30; ++t) {
        std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 3);
        std::int64_t n = 6 + static_cast<std::int64_t>(rng() % 12);
        auto K = make_box(r, spec);  // symmetric nonempty
        auto g = Subgroup::from_generators(spec, {e1(n)});
        auto F = maximal_separated_quotient(spec, K, g);
        CHECK(is_separated_quotient(spec, F, K, g));
        auto fkk = sumset(spec, F, sumset(spec, K, K));
        std::vector<GroupElement> reduced;
        for (const auto& x : fkk) reduced.push_back(g.reduce(x));
        CHECK(FiniteSet(std::move(reduced)).size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("subgroup canonicalization and index") {
    auto s1 = Subgroup::from_generators(z2(), {e2(2, 0), e2(0, 2)});
    CHECK(s1.index() == 4);

    auto s2 = Subgroup::from_generators(z2(), {e2(1, 1), e2(2, 0)});
    CHECK(s2.index() == 2);
    CHECK(s2.hnf() == std::vector<std::vector<std::int64_t>>{{1, 1}, {0, 2}});

    auto s3 = Subgroup::from_generators(z1(), {e1(3)});
    CHECK(s3.index() == 3);

    auto s4 = Subgroup::from_generators(z2(), {e2(1, 0)});
    CHECK(!s4.index().has_value());

    // idempotent + generator-order independent
    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        std::vector<GroupElement> gens;
        int n = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < n; ++i)
            gens.push_back(e2(static_cast<std::int64_t>(rng() % 11) - 5,
                              static_cast<std::int64_t>(rng() % 11) - 5));
        auto a = Subgroup::from_generators(z2(), gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        auto b = Subgroup::from_generators(z2(), gens);
        CHECK(a == b);
        auto c = Subgroup::from_generators(z2(), a.generators());
        CHECK(a == c);
    }
}

TEST_CASE("mixed subgroup of Z x Z/2") {
    GroupSpec spec{1, {2}};
    auto h = Subgroup::from_generators(spec, {make_element(spec, {1}, {1})});
    CHECK(h.index() == 2);
    CHECK(h.member(make_element(spec, {2}, {0})));
    CHECK(h.member(make_element(spec, {3}, {1})));
    CHECK(!h.member(make_element(spec, {1}, {0})));
    CHECK(h.fundamental_domain().size() == 2);
}

TEST_CASE("subgroup counting sigma(n)") {
    auto subs = enumerate_subgroups(12, z2());
    for (std::int64_t n = 1; n <= 12; ++n) {
        std::int64_t count = 0;
        for (const auto& s : subs)
            if (s.index() == n) ++count;
        CHECK(count == sigma(n));
    }
    auto subs1 = enumerate_subgroups(3, z1());
    CHECK(subs1.size() == 3);  // Z, 2Z, 3Z

    CHECK_THROWS(enumerate_subgroups(2, GroupSpec{3, {}}));
}

TEST_CASE("fundamental domains") {
    auto d1 = Subgroup::from_generators(z1(), {e1(3)}).fundamental_domain();
    CHECK(d1 == interval(0, 2));

    auto d2 = Subgroup::from_generators(z2(), {e2(2, 0), e2(0, 2)}).fundamental_domain();
    CHECK(d2 == FiniteSet({e2(0, 0), e2(0, 1), e2(1, 0), e2(1, 1)}));

    auto g = Subgroup::from_generators(z2(), {e2(1, 1), e2(0, 2)});
    auto d3 = g.fundamental_domain();
    CHECK(d3.size() == 2);
    // transversal: distinct cosets, and reduce() maps everything into it
    CHECK(g.reduce(e2(5, -3)) == g.reduce(add(z2(), e2(5, -3), e2(1, 1))));
    CHECK(d3.contains(g.reduce(e2(7, 2))));

    CHECK_THROWS(Subgroup::from_generators(z2(), {e2(1, 0)}).fundamental_domain());
}

TEST_CASE("overgroups") {
    auto g = Subgroup::from_generators(z2(), {e2(2, 0), e2(0, 2)});
    auto over = overgroups(g);
    CHECK(over.size() == 5);  // itself, three index-2 overgroups, Z^2
}

TEST_CASE("metric and order") {
    GroupSpec spec{1, {2}};
    auto a = make_element(spec, {0}, {0});
    auto b = make_element(spec, {3}, {1});
    auto m = metric(spec, a, b);
    CHECK(m.squared_euclidean == 9);
    CHECK(m.torsion_delta == 1);
    // sqrt(9)+1 = 4 exactly
    CHECK(compare_metric(m, MetricValue{16, 0}) == 0);
    CHECK(compare_metric(m, MetricValue{15, 0}) == 1);
    CHECK(compare_metric(m, MetricValue{17, 0}) == -1);

    CHECK(compare_metric(metric(z1(), e1(2), e1(2)), MetricValue{0, 0}) == 0);

    auto m5 = metric(z1(), e1(5), e1(0));
    auto mm5 = metric(z1(), e1(-5), e1(0));
    CHECK(compare_metric(m5, mm5) == 0);
    CHECK(precedes(e1(-5), e1(5)));

    CHECK(metric_le_radius(MetricValue{36, 0}, 36));
    CHECK(!metric_le_radius(MetricValue{37, 0}, 36));
    CHECK(metric_le_radius(MetricValue{25, 1}, 36));   // 5+1 = 6 <= 6
    CHECK(!metric_le_radius(MetricValue{26, 1}, 36));  // sqrt(26)+1 > 6
    CHECK(!metric_le_radius(MetricValue{0, 1}, 0));
    CHECK(metric_le_radius(MetricValue{0, 1}, 1));
}

TEST_CASE("order compatibility on free parts") {
    GroupSpec spec{1, {3}};
    auto a0 = make_element(spec, {1}, {2});
    auto a1 = make_element(spec, {1}, {0});
    auto b0 = make_element(spec, {2}, {1});
    // same free parts on each side: order decided by free part only
    CHECK(precedes(a0, b0));
    CHECK(precedes(a1, b0));
}
