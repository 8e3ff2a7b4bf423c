#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subshift {

/// The ambient group Z^d x Z/m1 x ... x Z/mt.
struct GroupSpec {
    int rank = 0;
    std::vector<std::int64_t> moduli;

    int torsion_size() const { return static_cast<int>(moduli.size()); }
    std::int64_t torsion_order() const;
    int lifted_dim() const { return rank + torsion_size(); }
    bool operator==(const GroupSpec&) const = default;

    void validate() const;  // throws on rank < 0 or moduli < 2
};

struct GroupElement {
    std::vector<std::int64_t> free;     // length = spec.rank
    std::vector<std::int64_t> torsion;  // length = spec.moduli.size(), reduced

    // lexicographic on (free, torsion): agrees with the canonical order
    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;
};

GroupElement zero_element(const GroupSpec& spec);
GroupElement make_element(const GroupSpec& spec, std::vector<std::int64_t> free,
                          std::vector<std::int64_t> torsion = {});
GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement sub(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& spec, const GroupElement& a);

/// Canonical total order: lexicographic on the free part, then on the torsion
/// residues. Elements with distinct free parts compare by free parts alone.
bool precedes(const GroupElement& a, const GroupElement& b);
int compare_elements(const GroupElement& a, const GroupElement& b);

std::string to_string(const GroupElement& g);

/// Sorted, deduplicated set of group elements under the canonical order.
class FiniteSet {
public:
    FiniteSet() = default;
    explicit FiniteSet(std::vector<GroupElement> elems);  // sorts + dedups

    static FiniteSet empty() { return FiniteSet(); }

    const std::vector<GroupElement>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool is_empty() const { return elems_.empty(); }
    const GroupElement& operator[](std::size_t i) const { return elems_[i]; }
    bool contains(const GroupElement& g) const;
    std::optional<std::size_t> index_of(const GroupElement& g) const;

    bool operator==(const FiniteSet&) const = default;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

private:
    std::vector<GroupElement> elems_;
};

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_intersect(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_minus(const FiniteSet& a, const FiniteSet& b);
FiniteSet translate(const GroupSpec& spec, const GroupElement& v, const FiniteSet& a);
FiniteSet negate_set(const GroupSpec& spec, const FiniteSet& a);
FiniteSet sumset(const GroupSpec& spec, const FiniteSet& a, const FiniteSet& b);
/// a - b = { x - y : x in a, y in b }
FiniteSet difference_set(const GroupSpec& spec, const FiniteSet& a, const FiniteSet& b);
bool is_symmetric(const GroupSpec& spec, const FiniteSet& a);

/// B_k = {-k..k}^d x G.
FiniteSet make_box(std::int64_t k, const GroupSpec& spec);
/// Q_n = B_n \ B_{floor(n/10)}.
FiniteSet make_annulus(std::int64_t n, const GroupSpec& spec);

/// { gamma : (gamma+K) meets F and (gamma+K) not contained in F }.
FiniteSet k_boundary(const GroupSpec& spec, const FiniteSet& K, const FiniteSet& F);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// |k_boundary(K,F)| < eps * |F|, compared exactly.
bool is_invariant(const GroupSpec& spec, const FiniteSet& K, Rational eps, const FiniteSet& F);

/// Translates a+B, a in A, pairwise disjoint; decided via (A-A) ∩ (B-B) ⊆ {0}.
bool is_separated(const GroupSpec& spec, const FiniteSet& a, const FiniteSet& b);

/// Greedy scan of the domain in canonical order.
FiniteSet maximal_separated(const GroupSpec& spec, const FiniteSet& K, const FiniteSet& domain);

/// Subgroup of Z^d x G in canonical form.
///
/// Internally the subgroup is the image of an integer lattice L <= Z^(d+t)
/// that contains the rows m_i * e_(d+i); the lattice is stored as its unique
/// row Hermite normal form. This representation covers "mixed" subgroups such
/// as <(1,1)> <= Z x Z/2 that are not products of a free and a torsion part.
class Subgroup {
public:
    Subgroup() = default;

    static Subgroup from_generators(const GroupSpec& spec, const std::vector<GroupElement>& gens);
    static Subgroup trivial(const GroupSpec& spec);
    static Subgroup full(const GroupSpec& spec);

    const GroupSpec& spec() const { return spec_; }
    /// Echelon rows of the lifted lattice (zero rows dropped).
    const std::vector<std::vector<std::int64_t>>& hnf() const { return hnf_; }

    bool member(const GroupElement& g) const;
    bool contains(const Subgroup& other) const;
    std::optional<std::int64_t> index() const;  // nullopt = infinite
    bool is_trivial() const;

    /// Canonical coset representative of g modulo this subgroup.
    GroupElement reduce(const GroupElement& g) const;

    /// Transversal D with |D| = index; requires finite index.
    FiniteSet fundamental_domain() const;

    /// Generators of the subgroup as group elements (HNF rows pushed down).
    std::vector<GroupElement> generators() const;

    bool operator==(const Subgroup&) const = default;
    bool operator<(const Subgroup& other) const;  // canonical order on HNF rows

    std::string to_string() const;

private:
    GroupSpec spec_;
    std::vector<std::vector<std::int64_t>> hnf_;

    friend std::vector<Subgroup> enumerate_subgroups(std::int64_t, const GroupSpec&);
};

/// All subgroups of index <= maxIndex, each once, canonical form. Requires rank <= 2.
std::vector<Subgroup> enumerate_subgroups(std::int64_t max_index, const GroupSpec& spec);

/// Subgroups L with sub <= L <= Gamma (finite index); includes sub itself.
std::vector<Subgroup> overgroups(const Subgroup& sub);

/// Intersection of two finite-index subgroups (rank <= 2).
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);

/// Maximal K-separated subset of the quotient by a finite-index subgroup,
/// greedy over the fundamental domain in canonical order.
FiniteSet maximal_separated_quotient(const GroupSpec& spec, const FiniteSet& K, const Subgroup& gamma0);

/// K-separation inside the quotient by gamma0.
bool is_separated_quotient(const GroupSpec& spec, const FiniteSet& a, const FiniteSet& K,
                           const Subgroup& gamma0);

/// dist(g1,g2) = sqrt(squared_euclidean) + torsion_delta, never materialized
/// as a float: comparisons are exact integer case analysis.
struct MetricValue {
    std::int64_t squared_euclidean = 0;
    int torsion_delta = 0;  // 0 iff the two elements are equal
};

MetricValue metric(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
/// -1, 0, 1 comparison of sqrt(a.sq)+a.delta vs sqrt(b.sq)+b.delta.
int compare_metric(const MetricValue& a, const MetricValue& b);
/// sqrt(m.sq) + m.delta <= sqrt(radius2)?
bool metric_le_radius(const MetricValue& m, std::int64_t radius2);

}  // namespace subshift
