#pragma once

#include "subshift/sft.hpp"

namespace subshift {

/// Shifts v in the range under which w agrees with itself wherever both
/// u and u+v lie in the support; vacuous agreements count.
FiniteSet self_overlaps(const GroupSpec& spec, const Pattern& w, const FiniteSet& range);

struct OverlapFreeResult {
    Pattern pattern;        // on Q_n
    int attempts = 0;
    std::uint64_t seed = 0;
    FiniteSet allowed;      // kernel-certified shifts that unavoidably overlap
};

/// Randomized block-planting search for a locally admissible Q_n-pattern with
/// no self-overlaps in B_n outside the kernel; verification is deterministic
/// and exhaustive over B_n.
OverlapFreeResult find_overlap_free_pattern(const SftSpec& y, std::int64_t n, std::uint64_t seed,
                                            int max_attempts = 400, Budget budget = {});

/// Replace w_from by w_to at every marked occurrence (z = 1); occurrences at
/// marked positions must be pairwise support-disjoint.
Pattern substitute_at_marks(const GroupSpec& spec, const Pattern& y, const Pattern& z,
                            const Pattern& w_from, const Pattern& w_to);

}  // namespace subshift
