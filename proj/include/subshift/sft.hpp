#pragma once

#include "subshift/group.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace subshift {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Budget {
    std::uint64_t max_nodes = 200'000'000;
};

using Symbol = int;

struct Alphabet {
    std::vector<std::string> names;

    std::size_t size() const { return names.size(); }
    Symbol index_of(const std::string& name) const;  // throws if absent
    const std::string& name(Symbol s) const { return names.at(s); }
    void validate() const;
    bool operator==(const Alphabet&) const = default;
};

Alphabet binary_alphabet();
Alphabet numbered_alphabet(int k, int first = 0);  // "first", ..., "first+k-1"

/// Finite configuration: total assignment on its support.
struct Pattern {
    FiniteSet support;
    std::vector<Symbol> symbols;  // aligned with the canonical support order

    Symbol at(const GroupElement& g) const;
    std::optional<Symbol> find(const GroupElement& g) const;
    bool operator==(const Pattern&) const = default;
    bool operator<(const Pattern& o) const;
};

Pattern make_pattern(const FiniteSet& support, const std::vector<Symbol>& symbols);
Pattern translate_pattern(const GroupSpec& spec, const GroupElement& v, const Pattern& p);
/// Restriction to sub \cap support.
Pattern restrict_pattern(const Pattern& p, const FiniteSet& sub);
/// 1D convenience: symbols at lo, lo+1, ... of a word given by alphabet indices.
Pattern word_pattern(const GroupSpec& spec, std::int64_t lo, const std::vector<Symbol>& word);

/// Set of patterns over one common window, rows sorted; the canonical
/// representation for languages and for unions of cylinders.
struct PatternSet {
    FiniteSet window;
    std::vector<std::vector<Symbol>> rows;

    std::size_t size() const { return rows.size(); }
    bool contains_row(const std::vector<Symbol>& r) const;
    void canonicalize();  // sort + dedupe rows
    bool operator==(const PatternSet&) const = default;
};

enum class Exactness { Exact, LocalUpper };

/// SFT presented by forbidden patterns. Each forbidden pattern keeps its own
/// support (contained in the window); admissibility tests translates of each
/// pattern over its own support, so boundary-straddling violations inside
/// finite windows are caught.
class SftSpec {
public:
    static SftSpec make(GroupSpec group, Alphabet alphabet, std::vector<Pattern> forbidden);
    static SftSpec full_shift(GroupSpec group, Alphabet alphabet);

    const GroupSpec& group() const { return group_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const FiniteSet& window() const { return window_; }
    const std::vector<Pattern>& forbidden() const { return forbidden_; }

    bool operator==(const SftSpec&) const = default;

private:
    GroupSpec group_;
    Alphabet alphabet_;
    FiniteSet window_;  // union of forbidden supports, plus 0
    std::vector<Pattern> forbidden_;  // supports translated to start at their canonical min
};

/// True iff no translate of a forbidden pattern fully inside p's support matches p.
bool is_locally_admissible(const SftSpec& x, const Pattern& p);

/// All locally admissible F-patterns (backtracking with forward checking).
/// Superset of the true F-language; exact when language_exactness() says so.
PatternSet local_language(const SftSpec& x, const FiniteSet& f, Budget budget = {});

/// Globally admissible patterns for 1D SFTs with trivial torsion: recode to a
/// vertex shift, trim states off bi-infinite paths, read off path words.
PatternSet exact_language_1d(const SftSpec& x, const FiniteSet& f, Budget budget = {});

/// Exact if 1D with trivial torsion, or if a window-checked safe symbol
/// certifies local = global; otherwise a local upper approximation.
Exactness language_exactness(const SftSpec& x);

/// Best available language at the exactness level reported by language_exactness.
PatternSet language(const SftSpec& x, const FiniteSet& f, Budget budget = {});

/// SFT presenting { x in X : no translate of w occurs in x }.
SftSpec forbid_pattern(const SftSpec& x, const Pattern& w);

/// De Bruijn recoding of a 1D SFT: states are (m-1)-words, edges are
/// admissible m-words, then trimmed to the bi-infinite part.
struct VertexShift {
    int block_len = 2;  // m
    std::vector<std::vector<Symbol>> states;  // surviving (m-1)-words
    std::vector<std::vector<int>> adj;        // adjacency lists
    std::vector<std::vector<std::int64_t>> matrix() const;
};

VertexShift build_vertex_shift(const SftSpec& x, Budget budget = {});

struct SlidingBlockCode {
    Alphabet source_alphabet;
    Alphabet target_alphabet;
    FiniteSet window;  // W0
    std::map<std::vector<Symbol>, Symbol> table;
};

/// Output pattern on E with values Phi(p restricted to v + W0).
Pattern apply_block_code(const GroupSpec& spec, const SlidingBlockCode& code, const Pattern& p,
                         const FiniteSet& e);

}  // namespace subshift
