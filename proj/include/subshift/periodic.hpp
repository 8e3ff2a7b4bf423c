#pragma once

#include "subshift/entropy.hpp"
#include "subshift/sft.hpp"

namespace subshift {

/// Configurations on a fundamental domain of gamma0 with wraparound
/// constraints; exactly the points fixed by gamma0 (bracket form), optionally
/// filtered down to exact stabilizers.
struct PeriodicPointSet {
    Subgroup gamma0;
    bool exact_stab = false;
    FiniteSet domain;
    std::vector<std::vector<Symbol>> configs;

    std::size_t size() const { return configs.size(); }
};

PeriodicPointSet periodic_points(const SftSpec& x, const Subgroup& gamma0, bool exact_stab,
                                 Budget budget = {});

/// Full stabilizer of a gamma0-periodic configuration.
Subgroup stabilizer_of(const SftSpec& x, const Subgroup& gamma0, const FiniteSet& domain,
                       const std::vector<Symbol>& config);

/// |X_{gamma0}| computed by inclusion-exclusion over overgroups; oracle for
/// the direct per-configuration stabilizer filter.
std::int64_t exact_count_via_overgroups(const SftSpec& x, const Subgroup& gamma0,
                                        Budget budget = {});

/// q_n for n = 1..N: points of least period n, sieved from tr(M^n).
std::vector<BigInt> least_period_counts(const SftSpec& x, int n_max, Budget budget = {});

/// tr(M^n) for n = 1..N (number of n-periodic points of a 1D SFT).
std::vector<BigInt> trace_powers(const SftSpec& x, int n_max, Budget budget = {});

enum class KernelStatus { Excluded, Supported, Inconclusive };

struct KernelEvidence {
    GroupElement gamma;
    KernelStatus status = KernelStatus::Inconclusive;
    Exactness exactness = Exactness::Exact;
    std::string witness;  // excluding periodic point, or the implication scale
};

struct KernelCertificate {
    Subgroup kernel;
    std::vector<KernelEvidence> evidence;
};

/// Membership evidence for every candidate translation in B_searchBound:
/// excluded by a periodic point not fixed by it, or supported by a
/// window-implication check at a finite scale.
KernelCertificate kernel_of(const SftSpec& x, std::int64_t search_bound, Budget budget = {});

/// Replay a certificate's evidence against the subshift; true if every entry
/// checks out.
bool replay_kernel_certificate(const SftSpec& x, const KernelCertificate& cert,
                               Budget budget = {});

}  // namespace subshift
