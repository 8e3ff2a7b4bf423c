#pragma once

#include "subshift/sft.hpp"

namespace subshift {

/// Union of cylinders over a common window, renormalized against the ambient
/// subshift's language (exact in 1D, locally admissible otherwise).
class ClopenSet {
public:
    ClopenSet() = default;

    static ClopenSet cylinder(const SftSpec& ambient, const Pattern& p, Budget budget = {});
    static ClopenSet from_patterns(const SftSpec& ambient, PatternSet ps, Budget budget = {});
    static ClopenSet whole(const SftSpec& ambient, Budget budget = {});
    static ClopenSet none(const SftSpec& ambient);

    const SftSpec& ambient() const { return ambient_; }
    const FiniteSet& window() const { return set_.window; }
    const PatternSet& patterns() const { return set_; }
    bool is_empty() const { return set_.rows.empty(); }
    Exactness exactness() const { return language_exactness(ambient_); }

    /// Same set re-expressed over window() ∪ w.
    ClopenSet refined(const FiniteSet& w, Budget budget = {}) const;

    /// Cylinder membership of a concrete context (support must cover window()).
    bool member(const Pattern& context) const;

private:
    SftSpec ambient_;
    PatternSet set_;
};

PatternSet translate_pattern_set(const GroupSpec& spec, const GroupElement& delta,
                                 const PatternSet& ps);

ClopenSet clopen_union(const ClopenSet& a, const ClopenSet& b, Budget budget = {});
ClopenSet clopen_intersect(const ClopenSet& a, const ClopenSet& b, Budget budget = {});
ClopenSet clopen_minus(const ClopenSet& a, const ClopenSet& b, Budget budget = {});
ClopenSet clopen_complement(const ClopenSet& a, Budget budget = {});
/// Image sigma_gamma(A) = { sigma_gamma(x) : x in A }.
ClopenSet clopen_shift(const GroupElement& gamma, const ClopenSet& a, Budget budget = {});
bool clopen_subset(const ClopenSet& a, const ClopenSet& b, Budget budget = {});
bool clopen_equal(const ClopenSet& a, const ClopenSet& b, Budget budget = {});

}  // namespace subshift
