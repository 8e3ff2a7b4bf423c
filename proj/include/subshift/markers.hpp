#pragma once

#include "subshift/clopen.hpp"

namespace subshift {

struct MarkerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A ∩ sigma_gamma(A) = ∅ for every gamma in P.
bool is_p_marker(const ClopenSet& a, const FiniteSet& p, Budget budget = {});

/// C := A ∪ (B \ ⋃_{gamma in P} sigma_gamma(A)). Preconditions (P symmetric,
/// 0 ∉ P, A and B markers) and all four postconditions are checked.
ClopenSet merge_markers(const ClopenSet& a, const ClopenSet& b, const FiniteSet& p,
                        Budget budget = {});

struct MarkerLemmaResult {
    ClopenSet c;
    int merges_used = 0;
    FiniteSet verification_window;
};

/// Clopen C ⊆ V with C ∩ sigma_gamma(C) = ∅ for gamma in P and
/// V ⊆ C ∪ ⋃ sigma_gamma(C): finite cylinder cover + sequential merges.
/// Rejects (with the offending pattern) if a P-periodic pattern of V survives
/// the window-scale aperiodicity check.
MarkerLemmaResult marker_lemma(const SftSpec& x, const ClopenSet& v, const FiniteSet& p,
                               Budget budget = {}, int max_scale_doublings = 3);

}  // namespace subshift
