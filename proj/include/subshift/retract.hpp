#pragma once

#include "subshift/periodic.hpp"
#include "subshift/sft.hpp"

namespace subshift {

/// Window-level safety check: substituting the symbol into any position of
/// any forbidden pattern must never leave a forbidden occurrence behind.
bool is_safe_symbol(const SftSpec& x, Symbol a);

struct SafeRetractResult {
    Pattern output;     // on the evaluated sites
    FiniteSet omitted;  // sites without full window context
};

/// r(y)_v = y_v when no forbidden occurrence covers v, else the safe symbol.
SafeRetractResult safe_symbol_retract(const SftSpec& x, Symbol a, const Pattern& p);

/// Proper colorings: x_gamma != x_{gamma+v} for v in F. Alphabet {1..k}.
SftSpec coloring_shift(int k, const FiniteSet& f, const GroupSpec& spec);

struct ColoringRetractResult {
    Pattern output;      // full input support; recolored on evaluated sites
    FiniteSet evaluated; // sites whose marker phase and neighbors were available
};

/// The |F|+1-pass recoloring retraction onto the coloring shift, driven by a
/// marker cascade over a canonical cylinder cover of the ambient subshift.
ColoringRetractResult coloring_retract(int k, const FiniteSet& f, const SftSpec& ambient,
                                       const Pattern& p, Budget budget = {});

struct SubgroupFamily {
    std::vector<Subgroup> groups;
    std::vector<FiniteSet> generating_sets;  // symmetric, one per group

    void validate(const GroupSpec& spec) const;  // sets must generate their groups
};

SubgroupFamily cyclic_family(const GroupSpec& spec, const FiniteSet& f);

struct GfreeWitness {
    enum class Kind { Witness, Counterexample, Inconclusive };
    Kind kind = Kind::Inconclusive;
    FiniteSet window;        // witness window when kind == Witness
    Pattern counterexample;  // a periodic point's repeating pattern otherwise
    std::string note;
};

/// Smallest rectangular window such that every admissible pattern breaks every
/// family member via some generator, or a confirmed periodic counterexample.
GfreeWitness gfree_witness(const SftSpec& x, const SubgroupFamily& gs, int max_window,
                           Budget budget = {});

/// Y^(K,D): every K+D window must contain a D-translated admissible K-block.
SftSpec build_padded(const SftSpec& y, const FiniteSet& k, const FiniteSet& d,
                     Budget budget = {});

/// Source alphabet is {0,1} x A x A, encoded as z * |A|^2 + a * |A| + b.
struct HomotopyCandidate {
    SlidingBlockCode code;
    bool strong = true;
};

Symbol triple_symbol(int asz, Symbol z, Symbol a, Symbol b);
SftSpec homotopy_product_sft(const SftSpec& y);
HomotopyCandidate pointwise_selector(const SftSpec& y);

struct HomotopyVerdict {
    bool outputs_in_target = true;   // (a)
    bool endpoints_ok = true;        // (b): psi(0,y0,y1)=y0 and psi(1,y0,y1)=y1
    bool strong_ok = true;           // (c): psi(z,y,y)=y
    Exactness exactness = Exactness::Exact;
    std::string counterexample;

    bool pass() const { return outputs_in_target && endpoints_ok && strong_ok; }
};

HomotopyVerdict verify_homotopy(const SftSpec& y, const HomotopyCandidate& psi,
                                std::int64_t period_bound, Budget budget = {});

struct SquigRow {
    Subgroup gamma0;
    bool x_nonempty = false;
    bool y_nonempty = false;
    bool pass = true;
};

struct SquigReport {
    std::vector<SquigRow> rows;
    bool all_pass = true;
};

/// Finite-scale necessary battery for "stabilizers extend": wherever X has a
/// gamma0-fixed point, Y must have one too.
SquigReport squig_check(const SftSpec& x, const SftSpec& y, std::int64_t max_index,
                        Budget budget = {});

}  // namespace subshift
