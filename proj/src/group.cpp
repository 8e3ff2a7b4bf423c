#include "subshift/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace subshift {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

std::int64_t GroupSpec::torsion_order() const {
    std::int64_t p = 1;
    for (auto m : moduli) p *= m;
    return p;
}

void GroupSpec::validate() const {
    if (rank < 0) throw std::invalid_argument("GroupSpec: rank must be nonnegative");
    for (auto m : moduli)
        if (m < 2) throw std::invalid_argument("GroupSpec: moduli must be >= 2");
}

GroupElement zero_element(const GroupSpec& spec) {
    GroupElement g;
    g.free.assign(spec.rank, 0);
    g.torsion.assign(spec.moduli.size(), 0);
    return g;
}

GroupElement make_element(const GroupSpec& spec, std::vector<std::int64_t> free,
                          std::vector<std::int64_t> torsion) {
    if (static_cast<int>(free.size()) != spec.rank)
        throw std::invalid_argument("make_element: free part has wrong length");
    torsion.resize(spec.moduli.size(), 0);
    for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = mod_reduce(torsion[i], spec.moduli[i]);
    return GroupElement{std::move(free), std::move(torsion)};
}

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    GroupElement r = a;
    for (int i = 0; i < spec.rank; ++i) r.free[i] += b.free[i];
    for (std::size_t i = 0; i < r.torsion.size(); ++i)
        r.torsion[i] = mod_reduce(r.torsion[i] + b.torsion[i], spec.moduli[i]);
    return r;
}

GroupElement sub(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    GroupElement r = a;
    for (int i = 0; i < spec.rank; ++i) r.free[i] -= b.free[i];
    for (std::size_t i = 0; i < r.torsion.size(); ++i)
        r.torsion[i] = mod_reduce(r.torsion[i] - b.torsion[i], spec.moduli[i]);
    return r;
}

GroupElement neg(const GroupSpec& spec, const GroupElement& a) {
    return sub(spec, zero_element(spec), a);
}

int compare_elements(const GroupElement& a, const GroupElement& b) {
    if (a.free != b.free) return a.free < b.free ? -1 : 1;
    if (a.torsion != b.torsion) return a.torsion < b.torsion ? -1 : 1;
    return 0;
}

bool precedes(const GroupElement& a, const GroupElement& b) { return compare_elements(a, b) < 0; }

std::string to_string(const GroupElement& g) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < g.free.size(); ++i) {
        if (i) os << ",";
        os << g.free[i];
    }
    if (!g.torsion.empty()) {
        os << ";";
        for (std::size_t i = 0; i < g.torsion.size(); ++i) {
            if (i) os << ",";
            os << g.torsion[i];
        }
    }
    os << ")";
    return os.str();
}

FiniteSet::FiniteSet(std::vector<GroupElement> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end(), precedes);
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FiniteSet::contains(const GroupElement& g) const {
    return std::binary_search(elems_.begin(), elems_.end(), g, precedes);
}

std::optional<std::size_t> FiniteSet::index_of(const GroupElement& g) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), g, precedes);
    if (it != elems_.end() && *it == g) return static_cast<std::size_t>(it - elems_.begin());
    return std::nullopt;
}

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
    std::vector<GroupElement> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), precedes);
    return FiniteSet(std::move(out));
}

FiniteSet set_intersect(const FiniteSet& a, const FiniteSet& b) {
    std::vector<GroupElement> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), precedes);
    return FiniteSet(std::move(out));
}

FiniteSet set_minus(const FiniteSet& a, const FiniteSet& b) {
    std::vector<GroupElement> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), precedes);
    return FiniteSet(std::move(out));
}

FiniteSet translate(const GroupSpec& spec, const GroupElement& v, const FiniteSet& a) {
    std::vector<GroupElement> out;
    out.reserve(a.size());
    for (const auto& g : a) out.push_back(add(spec, v, g));
    return FiniteSet(std::move(out));
}

FiniteSet negate_set(const GroupSpec& spec, const FiniteSet& a) {
    std::vector<GroupElement> out;
    out.reserve(a.size());
    for (const auto& g : a) out.push_back(neg(spec, g));
    return FiniteSet(std::move(out));
}

FiniteSet sumset(const GroupSpec& spec, const FiniteSet& a, const FiniteSet& b) {
    std::vector<GroupElement> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(add(spec, x, y));
    return FiniteSet(std::move(out));
}

FiniteSet difference_set(const GroupSpec& spec, const FiniteSet& a, const FiniteSet& b) {
    std::vector<GroupElement> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(sub(spec, x, y));
    return FiniteSet(std::move(out));
}

bool is_symmetric(const GroupSpec& spec, const FiniteSet& a) {
    return a == negate_set(spec, a);
}

FiniteSet make_box(std::int64_t k, const GroupSpec& spec) {
    if (k < 0) throw std::invalid_argument("make_box: k must be nonnegative");
    spec.validate();
    std::vector<GroupElement> out;
    std::vector<std::int64_t> free(spec.rank, -k);
    std::vector<std::int64_t> tor(spec.moduli.size(), 0);
    while (true) {
        out.push_back(GroupElement{free, tor});
        int i = 0;
        for (; i < spec.rank; ++i) {
            if (free[i] < k) {
                ++free[i];
                break;
            }
            free[i] = -k;
        }
        if (i < spec.rank) continue;
        std::size_t j = 0;
        for (; j < tor.size(); ++j) {
            if (tor[j] + 1 < spec.moduli[j]) {
                ++tor[j];
                break;
            }
            tor[j] = 0;
        }
        if (j == tor.size()) break;
    }
    return FiniteSet(std::move(out));
}

FiniteSet make_annulus(std::int64_t n, const GroupSpec& spec) {
    if (n < 0) throw std::invalid_argument("make_annulus: n must be nonnegative");
    return set_minus(make_box(n, spec), make_box(n / 10, spec));
}

FiniteSet k_boundary(const GroupSpec& spec, const FiniteSet& K, const FiniteSet& F) {
    if (K.is_empty()) throw std::invalid_argument("k_boundary: K must be nonempty");
    FiniteSet candidates = difference_set(spec, F, K);
    std::vector<GroupElement> out;
    for (const auto& g : candidates) {
        bool meets = false, escapes = false;
        for (const auto& k : K) {
            if (F.contains(add(spec, g, k)))
                meets = true;
            else
                escapes = true;
            if (meets && escapes) break;
        }
        if (meets && escapes) out.push_back(g);
    }
    return FiniteSet(std::move(out));
}

bool is_invariant(const GroupSpec& spec, const FiniteSet& K, Rational eps, const FiniteSet& F) {
    if (F.is_empty()) throw std::invalid_argument("is_invariant: F must be nonempty");
    if (eps.num <= 0 || eps.den <= 0) throw std::invalid_argument("is_invariant: eps must be positive");
    auto bd = k_boundary(spec, K, F);
    // |bd| < (num/den) * |F|
    return static_cast<__int128>(bd.size()) * eps.den <
           static_cast<__int128>(eps.num) * static_cast<__int128>(F.size());
}

bool is_separated(const GroupSpec& spec, const FiniteSet& a, const FiniteSet& b) {
    FiniteSet d = set_intersect(difference_set(spec, a, a), difference_set(spec, b, b));
    for (const auto& g : d)
        if (!(g == zero_element(spec))) return false;
    return true;
}

FiniteSet maximal_separated(const GroupSpec& spec, const FiniteSet& K, const FiniteSet& domain) {
    FiniteSet kk = difference_set(spec, K, K);
    std::vector<GroupElement> chosen;
    for (const auto& g : domain) {
        bool ok = true;
        for (const auto& c : chosen) {
            if (kk.contains(sub(spec, g, c))) {
                ok = false;
                break;
            }
        }
        if (ok) chosen.push_back(g);
    }
    return FiniteSet(std::move(chosen));
}

// ---- Subgroup ----------------------------------------------------------

namespace {

// Unique row Hermite normal form: echelon rows, positive pivots, entries
// above each pivot reduced into [0, pivot).
std::vector<std::vector<std::int64_t>> hermite_rows(std::vector<std::vector<std::int64_t>> rows,
                                                    int dim) {
    std::vector<std::vector<std::int64_t>> h;
    int pivot_row = 0;
    (void)dim;
    int ncols = rows.empty() ? dim : static_cast<int>(rows[0].size());
    for (int col = 0; col < ncols; ++col) {
        // eliminate below pivot_row in this column via gcd steps
        while (true) {
            int best = -1;
            for (std::size_t r = pivot_row; r < rows.size(); ++r) {
                if (rows[r][col] != 0 &&
                    (best < 0 || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
                    best = static_cast<int>(r);
            }
            if (best < 0) break;
            std::swap(rows[pivot_row], rows[best]);
            if (rows[pivot_row][col] < 0)
                for (auto& x : rows[pivot_row]) x = -x;
            bool all_zero = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][col] != 0) {
                    std::int64_t q = floor_div(rows[r][col], rows[pivot_row][col]);
                    for (int c = 0; c < ncols; ++c) rows[r][c] -= q * rows[pivot_row][c];
                    if (rows[r][col] != 0) all_zero = false;
                }
            }
            if (all_zero) break;
        }
        if (static_cast<std::size_t>(pivot_row) < rows.size() && rows[pivot_row][col] != 0) {
            // reduce entries above the pivot
            for (int r = 0; r < pivot_row; ++r) {
                std::int64_t q = floor_div(rows[r][col], rows[pivot_row][col]);
                if (q != 0)
                    for (int c = 0; c < ncols; ++c) rows[r][c] -= q * rows[pivot_row][c];
            }
            ++pivot_row;
        }
        if (static_cast<std::size_t>(pivot_row) >= rows.size()) break;
    }
    for (int r = 0; r < pivot_row; ++r) h.push_back(rows[r]);
    return h;
}

std::vector<std::int64_t> lift(const GroupSpec& spec, const GroupElement& g) {
    std::vector<std::int64_t> v = g.free;
    v.insert(v.end(), g.torsion.begin(), g.torsion.end());
    return v;
}

GroupElement unlift(const GroupSpec& spec, const std::vector<std::int64_t>& v) {
    GroupElement g;
    g.free.assign(v.begin(), v.begin() + spec.rank);
    g.torsion.assign(v.begin() + spec.rank, v.end());
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        g.torsion[i] = mod_reduce(g.torsion[i], spec.moduli[i]);
    return g;
}

}  // namespace

Subgroup Subgroup::from_generators(const GroupSpec& spec, const std::vector<GroupElement>& gens) {
    spec.validate();
    Subgroup s;
    s.spec_ = spec;
    int dim = spec.lifted_dim();
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& g : gens) {
        if (static_cast<int>(g.free.size()) != spec.rank ||
            g.torsion.size() != spec.moduli.size())
            throw std::invalid_argument("Subgroup: generator has wrong shape");
        rows.push_back(lift(spec, g));
    }
    for (int i = 0; i < spec.torsion_size(); ++i) {
        std::vector<std::int64_t> r(dim, 0);
        r[spec.rank + i] = spec.moduli[i];
        rows.push_back(r);
    }
    s.hnf_ = hermite_rows(std::move(rows), dim);
    return s;
}

Subgroup Subgroup::trivial(const GroupSpec& spec) { return from_generators(spec, {}); }

Subgroup Subgroup::full(const GroupSpec& spec) {
    std::vector<GroupElement> gens;
    for (int i = 0; i < spec.rank; ++i) {
        auto g = zero_element(spec);
        g.free[i] = 1;
        gens.push_back(g);
    }
    for (int i = 0; i < spec.torsion_size(); ++i) {
        auto g = zero_element(spec);
        g.torsion[i] = 1;
        gens.push_back(g);
    }
    return from_generators(spec, gens);
}

bool Subgroup::member(const GroupElement& g) const {
    auto v = lift(spec_, g);
    for (const auto& row : hnf_) {
        int col = 0;
        while (row[col] == 0) ++col;
        std::int64_t q = floor_div(v[col], row[col]);
        if (q != 0)
            for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * row[c];
    }
    // torsion columns only need to vanish mod their modulus
    for (int i = 0; i < spec_.rank; ++i)
        if (v[i] != 0) return false;
    for (int i = 0; i < spec_.torsion_size(); ++i)
        if (mod_reduce(v[spec_.rank + i], spec_.moduli[i]) != 0) return false;
    return true;
}

bool Subgroup::contains(const Subgroup& other) const {
    for (const auto& row : other.hnf_)
        if (!member(unlift(spec_, row))) return false;
    return true;
}

std::optional<std::int64_t> Subgroup::index() const {
    int dim = spec_.lifted_dim();
    if (static_cast<int>(hnf_.size()) < dim) return std::nullopt;
    std::int64_t prod = 1;
    for (int i = 0; i < dim; ++i) prod *= hnf_[i][i];
    return prod;
}

bool Subgroup::is_trivial() const {
    auto idx = Subgroup::trivial(spec_).hnf_;
    return hnf_ == idx;
}

GroupElement Subgroup::reduce(const GroupElement& g) const {
    auto v = lift(spec_, g);
    for (const auto& row : hnf_) {
        int col = 0;
        while (row[col] == 0) ++col;
        std::int64_t q = floor_div(v[col], row[col]);
        if (q != 0)
            for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * row[c];
    }
    return unlift(spec_, v);
}

FiniteSet Subgroup::fundamental_domain() const {
    auto idx = index();
    if (!idx) throw std::invalid_argument("fundamental_domain: subgroup has infinite index");
    int dim = spec_.lifted_dim();
    std::vector<GroupElement> out;
    std::vector<std::int64_t> v(dim, 0);
    while (true) {
        out.push_back(unlift(spec_, v));
        int i = 0;
        for (; i < dim; ++i) {
            if (v[i] + 1 < hnf_[i][i]) {
                ++v[i];
                break;
            }
            v[i] = 0;
        }
        if (i == dim) break;
    }
    return FiniteSet(std::move(out));
}

std::vector<GroupElement> Subgroup::generators() const {
    std::vector<GroupElement> out;
    for (const auto& row : hnf_) out.push_back(unlift(spec_, row));
    return out;
}

bool Subgroup::operator<(const Subgroup& other) const { return hnf_ < other.hnf_; }

std::string Subgroup::to_string() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < hnf_.size(); ++i) {
        if (i) os << "; ";
        os << subshift::to_string(unlift(spec_, hnf_[i]));
    }
    os << ">";
    return os.str();
}

std::vector<Subgroup> enumerate_subgroups(std::int64_t max_index, const GroupSpec& spec) {
    spec.validate();
    if (spec.rank > 2)
        throw std::invalid_argument("enumerate_subgroups: rank must be <= 2");
    if (max_index < 1) return {};
    int dim = spec.lifted_dim();
    std::vector<Subgroup> out;

    // Enumerate upper-triangular HNF matrices with product of diagonal <= max_index,
    // keep those whose lattice contains the torsion relation rows.
    std::vector<std::vector<std::int64_t>> mat(dim, std::vector<std::int64_t>(dim, 0));
    std::vector<std::int64_t> diag(dim, 1);

    auto emit = [&]() {
        Subgroup s;
        s.spec_ = spec;
        s.hnf_ = mat;
        // must contain the relation rows m_i e_{rank+i}
        for (int i = 0; i < spec.torsion_size(); ++i) {
            std::vector<std::int64_t> v(dim, 0);
            v[spec.rank + i] = spec.moduli[i];
            // reduce v by the rows
            for (const auto& row : s.hnf_) {
                int col = 0;
                while (row[col] == 0) ++col;
                std::int64_t q = floor_div(v[col], row[col]);
                if (q != 0)
                    for (int c = 0; c < dim; ++c) v[c] -= q * row[c];
            }
            for (int c = 0; c < dim; ++c)
                if (v[c] != 0) return;
        }
        out.push_back(std::move(s));
    };

    std::vector<std::pair<int, int>> positions;  // above-diagonal slots
    for (int r = 0; r < dim; ++r)
        for (int c = r + 1; c < dim; ++c) positions.emplace_back(r, c);

    std::function<void(std::size_t)> fill_offdiag = [&](std::size_t p) {
        if (p == positions.size()) {
            emit();
            return;
        }
        auto [r, c] = positions[p];
        for (std::int64_t x = 0; x < diag[c]; ++x) {
            mat[r][c] = x;
            fill_offdiag(p + 1);
        }
        mat[r][c] = 0;
    };

    std::function<void(int, std::int64_t)> fill_diag = [&](int i, std::int64_t prod) {
        if (i == dim) {
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) mat[r][c] = (r == c) ? diag[r] : 0;
            fill_offdiag(0);
            return;
        }
        for (std::int64_t a = 1; prod * a <= max_index; ++a) {
            diag[i] = a;
            fill_diag(i + 1, prod * a);
        }
        diag[i] = 1;
    };

    fill_diag(0, 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Subgroup> overgroups(const Subgroup& sub) {
    auto idx = sub.index();
    if (!idx) throw std::invalid_argument("overgroups: subgroup must have finite index");
    std::vector<Subgroup> out;
    for (auto& s : enumerate_subgroups(*idx, sub.spec()))
        if (s.contains(sub)) out.push_back(std::move(s));
    return out;
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
    auto ia = a.index(), ib = b.index();
    if (!ia || !ib)
        throw std::invalid_argument("subgroup_intersection: finite index required");
    Subgroup best;
    bool have = false;
    for (const auto& s : enumerate_subgroups(*ia * *ib, a.spec())) {
        if (!a.contains(s) || !b.contains(s)) continue;
        if (!have || *s.index() < *best.index()) {
            best = s;
            have = true;
        }
    }
    if (!have) throw std::runtime_error("subgroup_intersection: not found within bound");
    return best;
}

FiniteSet maximal_separated_quotient(const GroupSpec& spec, const FiniteSet& K,
                                     const Subgroup& gamma0) {
    FiniteSet dom = gamma0.fundamental_domain();
    FiniteSet kk = difference_set(spec, K, K);
    // reduce K-K into canonical representatives once
    std::vector<GroupElement> kkred;
    for (const auto& g : kk) kkred.push_back(gamma0.reduce(g));
    FiniteSet kkq(std::move(kkred));
    std::vector<GroupElement> chosen;
    for (const auto& g : dom) {
        bool ok = true;
        for (const auto& c : chosen) {
            if (kkq.contains(gamma0.reduce(sub(spec, g, c)))) {
                ok = false;
                break;
            }
        }
        if (ok) chosen.push_back(g);
    }
    return FiniteSet(std::move(chosen));
}

bool is_separated_quotient(const GroupSpec& spec, const FiniteSet& a, const FiniteSet& K,
                           const Subgroup& gamma0) {
    FiniteSet kk = difference_set(spec, K, K);
    std::vector<GroupElement> kkred;
    for (const auto& g : kk) kkred.push_back(gamma0.reduce(g));
    FiniteSet kkq(std::move(kkred));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (kkq.contains(gamma0.reduce(sub(spec, a[i], a[j])))) return false;
    return true;
}

// ---- metric ------------------------------------------------------------

MetricValue metric(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    MetricValue m;
    for (int i = 0; i < spec.rank; ++i) {
        std::int64_t d = a.free[i] - b.free[i];
        m.squared_euclidean += d * d;
    }
    m.torsion_delta = (a.torsion == b.torsion) ? 0 : 1;
    return m;
}

int compare_metric(const MetricValue& a, const MetricValue& b) {
    if (a.torsion_delta == b.torsion_delta) {
        if (a.squared_euclidean != b.squared_euclidean)
            return a.squared_euclidean < b.squared_euclidean ? -1 : 1;
        return 0;
    }
    // wlog a.delta = 0, b.delta = 1: compare sqrt(A) vs sqrt(B) + 1
    bool flipped = a.torsion_delta > b.torsion_delta;
    std::int64_t A = flipped ? b.squared_euclidean : a.squared_euclidean;
    std::int64_t B = flipped ? a.squared_euclidean : b.squared_euclidean;
    int result;
    std::int64_t t = A - B - 1;
    if (t < 0) {
        result = -1;
    } else {
        __int128 lhs = static_cast<__int128>(t) * t;
        __int128 rhs = static_cast<__int128>(4) * B;
        result = lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
    }
    return flipped ? -result : result;
}

bool metric_le_radius(const MetricValue& m, std::int64_t radius2) {
    if (radius2 < 0) return false;
    if (m.torsion_delta == 0) return m.squared_euclidean <= radius2;
    // sqrt(a) + 1 <= sqrt(r2)
    if (radius2 < 1) return false;
    std::int64_t s = radius2 + 1 - m.squared_euclidean;
    if (s < 0) return false;
    __int128 lhs = static_cast<__int128>(4) * radius2;
    __int128 rhs = static_cast<__int128>(s) * s;
    return lhs <= rhs;
}

}  // namespace subshift
