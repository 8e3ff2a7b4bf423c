#include "subshift/clopen.hpp"

#include <algorithm>

namespace subshift {

namespace {

void require_same_ambient(const ClopenSet& a, const ClopenSet& b) {
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("clopen: operands have different ambient subshifts");
}

}  // namespace

PatternSet translate_pattern_set(const GroupSpec& spec, const GroupElement& delta,
                                 const PatternSet& ps) {
    std::vector<GroupElement> moved;
    moved.reserve(ps.window.size());
    for (const auto& g : ps.window) moved.push_back(add(spec, delta, g));
    FiniteSet win(moved);
    std::vector<std::size_t> perm(ps.window.size());
    for (std::size_t i = 0; i < ps.window.size(); ++i) perm[i] = *win.index_of(moved[i]);
    PatternSet out;
    out.window = std::move(win);
    out.rows.reserve(ps.rows.size());
    for (const auto& r : ps.rows) {
        std::vector<Symbol> nr(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) nr[perm[i]] = r[i];
        out.rows.push_back(std::move(nr));
    }
    out.canonicalize();
    return out;
}

ClopenSet ClopenSet::from_patterns(const SftSpec& ambient, PatternSet ps, Budget budget) {
    ClopenSet c;
    c.ambient_ = ambient;
    auto lang = language(ambient, ps.window, budget);
    ps.canonicalize();
    PatternSet norm;
    norm.window = ps.window;
    for (const auto& r : lang.rows)
        if (ps.contains_row(r)) norm.rows.push_back(r);
    c.set_ = std::move(norm);
    return c;
}

ClopenSet ClopenSet::cylinder(const SftSpec& ambient, const Pattern& p, Budget budget) {
    PatternSet ps;
    ps.window = p.support;
    ps.rows.push_back(p.symbols);
    return from_patterns(ambient, std::move(ps), budget);
}

ClopenSet ClopenSet::whole(const SftSpec& ambient, Budget budget) {
    FiniteSet w({zero_element(ambient.group())});
    ClopenSet c;
    c.ambient_ = ambient;
    c.set_ = language(ambient, w, budget);
    return c;
}

ClopenSet ClopenSet::none(const SftSpec& ambient) {
    ClopenSet c;
    c.ambient_ = ambient;
    c.set_.window = FiniteSet({zero_element(ambient.group())});
    return c;
}

ClopenSet ClopenSet::refined(const FiniteSet& w, Budget budget) const {
    FiniteSet big = set_union(set_.window, w);
    if (big == set_.window) return *this;
    auto lang = language(ambient_, big, budget);
    std::vector<std::size_t> proj;  // indices of old window inside big
    for (const auto& g : set_.window) proj.push_back(*big.index_of(g));
    ClopenSet out;
    out.ambient_ = ambient_;
    out.set_.window = big;
    for (const auto& r : lang.rows) {
        std::vector<Symbol> sub;
        sub.reserve(proj.size());
        for (auto i : proj) sub.push_back(r[i]);
        if (set_.contains_row(sub)) out.set_.rows.push_back(r);
    }
    out.set_.canonicalize();
    return out;
}

bool ClopenSet::member(const Pattern& context) const {
    std::vector<Symbol> row;
    row.reserve(set_.window.size());
    for (const auto& g : set_.window) {
        auto s = context.find(g);
        if (!s) throw std::invalid_argument("clopen member: context does not cover window");
        row.push_back(*s);
    }
    return set_.contains_row(row);
}

ClopenSet clopen_union(const ClopenSet& a, const ClopenSet& b, Budget budget) {
    require_same_ambient(a, b);
    FiniteSet w = set_union(a.window(), b.window());
    auto ra = a.refined(w, budget);
    auto rb = b.refined(w, budget);
    PatternSet ps;
    ps.window = w;
    ps.rows = ra.patterns().rows;
    ps.rows.insert(ps.rows.end(), rb.patterns().rows.begin(), rb.patterns().rows.end());
    ps.canonicalize();
    return ClopenSet::from_patterns(a.ambient(), std::move(ps), budget);
}

ClopenSet clopen_intersect(const ClopenSet& a, const ClopenSet& b, Budget budget) {
    require_same_ambient(a, b);
    FiniteSet w = set_union(a.window(), b.window());
    auto ra = a.refined(w, budget);
    auto rb = b.refined(w, budget);
    PatternSet ps;
    ps.window = w;
    std::set_intersection(ra.patterns().rows.begin(), ra.patterns().rows.end(),
                          rb.patterns().rows.begin(), rb.patterns().rows.end(),
                          std::back_inserter(ps.rows));
    return ClopenSet::from_patterns(a.ambient(), std::move(ps), budget);
}

ClopenSet clopen_minus(const ClopenSet& a, const ClopenSet& b, Budget budget) {
    require_same_ambient(a, b);
    FiniteSet w = set_union(a.window(), b.window());
    auto ra = a.refined(w, budget);
    auto rb = b.refined(w, budget);
    PatternSet ps;
    ps.window = w;
    std::set_difference(ra.patterns().rows.begin(), ra.patterns().rows.end(),
                        rb.patterns().rows.begin(), rb.patterns().rows.end(),
                        std::back_inserter(ps.rows));
    return ClopenSet::from_patterns(a.ambient(), std::move(ps), budget);
}

ClopenSet clopen_complement(const ClopenSet& a, Budget budget) {
    auto lang = language(a.ambient(), a.window(), budget);
    PatternSet ps;
    ps.window = a.window();
    for (const auto& r : lang.rows)
        if (!a.patterns().contains_row(r)) ps.rows.push_back(r);
    return ClopenSet::from_patterns(a.ambient(), std::move(ps), budget);
}

ClopenSet clopen_shift(const GroupElement& gamma, const ClopenSet& a, Budget budget) {
    // y in sigma_gamma(A) iff sigma_{-gamma}(y) in A iff y restricted to window - gamma matches
    auto moved = translate_pattern_set(a.ambient().group(), neg(a.ambient().group(), gamma),
                                       a.patterns());
    return ClopenSet::from_patterns(a.ambient(), std::move(moved), budget);
}

bool clopen_subset(const ClopenSet& a, const ClopenSet& b, Budget budget) {
    return clopen_minus(a, b, budget).is_empty();
}

bool clopen_equal(const ClopenSet& a, const ClopenSet& b, Budget budget) {
    return clopen_subset(a, b, budget) && clopen_subset(b, a, budget);
}

}  // namespace subshift
