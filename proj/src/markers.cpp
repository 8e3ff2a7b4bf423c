#include "subshift/markers.hpp"

#include <algorithm>

namespace subshift {

bool is_p_marker(const ClopenSet& a, const FiniteSet& p, Budget budget) {
    for (const auto& gamma : p)
        if (!clopen_intersect(a, clopen_shift(gamma, a, budget), budget).is_empty()) return false;
    return true;
}

ClopenSet merge_markers(const ClopenSet& a, const ClopenSet& b, const FiniteSet& p,
                        Budget budget) {
    const auto& spec = a.ambient().group();
    if (p.is_empty() || p.contains(zero_element(spec)))
        throw MarkerError("merge_markers: P must be finite, nonempty and avoid 0");
    if (!is_symmetric(spec, p)) throw MarkerError("merge_markers: P must be symmetric");
    if (!is_p_marker(a, p, budget)) throw MarkerError("merge_markers: A is not a P-marker");
    if (!is_p_marker(b, p, budget)) throw MarkerError("merge_markers: B is not a P-marker");

    ClopenSet shifted_union = ClopenSet::none(a.ambient());
    for (const auto& gamma : p)
        shifted_union = clopen_union(shifted_union, clopen_shift(gamma, a, budget), budget);
    ClopenSet c = clopen_union(a, clopen_minus(b, shifted_union, budget), budget);

    if (!is_p_marker(c, p, budget)) throw MarkerError("merge_markers: C is not a P-marker");
    if (!clopen_subset(a, c, budget)) throw MarkerError("merge_markers: A not contained in C");
    if (!clopen_subset(c, clopen_union(a, b, budget), budget))
        throw MarkerError("merge_markers: C not contained in A + B");
    ClopenSet c_halo = c;
    for (const auto& gamma : p)
        c_halo = clopen_union(c_halo, clopen_shift(gamma, c, budget), budget);
    if (!clopen_subset(b, c_halo, budget))
        throw MarkerError("merge_markers: B not covered by C and its P-shifts");
    return c;
}

namespace {

FiniteSet p_hull_window(const GroupSpec& spec, const FiniteSet& base, const FiniteSet& p) {
    FiniteSet zero({zero_element(spec)});
    return sumset(spec, base, set_union(zero, p));
}

std::string pattern_text(const SftSpec& x, const Pattern& o) {
    std::string s;
    for (std::size_t i = 0; i < o.support.size(); ++i)
        s += to_string(o.support[i]) + "=" + x.alphabet().name(o.symbols[i]) + " ";
    return s;
}

}  // namespace

MarkerLemmaResult marker_lemma(const SftSpec& x, const ClopenSet& v, const FiniteSet& p,
                               Budget budget, int max_scale_doublings) {
    const auto& spec = x.group();
    if (p.is_empty() || p.contains(zero_element(spec)))
        throw MarkerError("marker_lemma: P must be finite, nonempty and avoid 0");
    if (!is_symmetric(spec, p)) throw MarkerError("marker_lemma: P must be symmetric");

    // refine V's window until every V-cylinder is a pattern-level P-marker;
    // start from V's own window so covers stay as coarse as possible
    FiniteSet window = v.window();
    for (int round = 0;; ++round) {
        auto refined = v.refined(window, budget);
        std::vector<Pattern> offenders;
        for (const auto& row : refined.patterns().rows) {
            auto cyl = ClopenSet::from_patterns(x, PatternSet{window, {row}}, budget);
            if (!is_p_marker(cyl, p, budget)) offenders.push_back(make_pattern(window, row));
        }
        if (offenders.empty()) break;
        if (round >= max_scale_doublings)
            throw MarkerError("marker_lemma: P-periodic pattern survives at scale limit: " +
                              pattern_text(x, offenders.front()));
        window = p_hull_window(spec, window, p);
    }

    auto refined = v.refined(window, budget);
    MarkerLemmaResult res;
    res.verification_window = window;
    res.c = ClopenSet::none(x);

    auto halo_covers = [&](const ClopenSet& c) {
        ClopenSet halo = c;
        for (const auto& gamma : p)
            halo = clopen_union(halo, clopen_shift(gamma, c, budget), budget);
        return clopen_subset(refined, halo, budget);
    };

    bool first = true;
    for (const auto& row : refined.patterns().rows) {
        auto cyl = ClopenSet::from_patterns(x, PatternSet{window, {row}}, budget);
        if (first) {
            res.c = cyl;
            first = false;
        } else {
            res.c = merge_markers(res.c, cyl, p, budget);
        }
        ++res.merges_used;
        if (halo_covers(res.c)) break;  // remaining cylinders are already swallowed
    }

    // postconditions, re-verified independently of the construction path
    if (!clopen_subset(res.c, refined, budget)) throw MarkerError("marker_lemma: C escapes V");
    if (!is_p_marker(res.c, p, budget)) throw MarkerError("marker_lemma: C is not a P-marker");
    if (!first && !halo_covers(res.c))
        throw MarkerError("marker_lemma: V not covered by C and its P-shifts");
    return res;
}

}  // namespace subshift
