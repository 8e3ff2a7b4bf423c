#include "subshift/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace subshift {

std::string method_name(EntropyMethod m) {
    switch (m) {
        case EntropyMethod::BoxUpper: return "BOX-UPPER";
        case EntropyMethod::TransferExact: return "TRANSFER-EXACT";
        case EntropyMethod::StripExact: return "STRIP-EXACT";
        case EntropyMethod::PeriodicLower: return "PERIODIC-LOWER";
    }
    return "?";
}

namespace {

// strongly connected components, iterative Tarjan
std::vector<std::vector<int>> scc_decompose(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    struct Frame {
        int v;
        std::size_t ei;
    };
    for (int s = 0; s < n; ++s) {
        if (index[s] >= 0) continue;
        std::vector<Frame> call{{s, 0}};
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!call.empty()) {
            auto& fr = call.back();
            if (fr.ei < adj[fr.v].size()) {
                int w = adj[fr.v][fr.ei++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
            } else {
                int v = fr.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<int> comp;
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    comps.push_back(std::move(comp));
                }
            }
        }
    }
    return comps;
}

}  // namespace

PerronBounds certified_perron(const std::vector<std::vector<std::int64_t>>& m, const BigRat& tol,
                              int max_iter) {
    const int n = static_cast<int>(m.size());
    PerronBounds best;
    best.zero = true;

    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] > 0) adj[i].push_back(j);

    for (const auto& comp : scc_decompose(adj)) {
        bool has_edge = false;
        for (int u : comp)
            for (int v : comp)
                if (m[u][v] > 0) has_edge = true;
        if (!has_edge) continue;

        const int k = static_cast<int>(comp.size());
        std::vector<std::vector<std::int64_t>> a(k, std::vector<std::int64_t>(k, 0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) a[i][j] = m[comp[i]][comp[j]];

        std::vector<BigInt> v(k, 1);
        BigRat lo(0), hi(0);
        for (int iter = 0; iter < max_iter; ++iter) {
            std::vector<BigInt> w(k, BigInt(0));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (a[i][j]) w[i] += a[i][j] * v[j];
            // Collatz-Wielandt quotients at the strictly positive vector v
            lo = BigRat(w[0], v[0]);
            hi = lo;
            for (int i = 1; i < k; ++i) {
                BigRat q(w[i], v[i]);
                if (q < lo) lo = q;
                if (q > hi) hi = q;
            }
            if (hi - lo <= tol) break;
            for (int i = 0; i < k; ++i) v[i] += w[i];  // v <- (I + A) v, keeps v > 0
        }
        if (best.zero) {
            best.zero = false;
            best.lower = lo;
            best.upper = hi;
        } else if (lo > best.lower) {
            best.lower = lo;
            best.upper = std::max(best.upper, hi);
        } else {
            best.upper = std::max(best.upper, hi);
        }
    }
    return best;
}

EntropyEstimate entropy_upper_bound(const SftSpec& x, const FiniteSet& f, Budget budget) {
    if (f.is_empty()) throw std::invalid_argument("entropy_upper_bound: empty window");
    auto lang = language(x, f, budget);
    EntropyEstimate e;
    e.method = EntropyMethod::BoxUpper;
    e.exactness = language_exactness(x);
    e.detail = "window size " + std::to_string(f.size()) + ", patterns " +
               std::to_string(lang.size());
    if (lang.rows.empty()) {
        e.empty_subshift = true;
        return e;
    }
    double bound = std::log(static_cast<double>(lang.size())) / static_cast<double>(f.size());
    e.upper = bound;
    e.lower = 0.0;
    return e;
}

EntropyEstimate entropy_exact_1d(const SftSpec& x, Budget budget) {
    auto vs = build_vertex_shift(x, budget);
    EntropyEstimate e;
    e.method = EntropyMethod::TransferExact;
    e.exactness = Exactness::Exact;
    if (vs.states.empty()) {
        e.empty_subshift = true;
        e.detail = "empty subshift";
        return e;
    }
    auto pb = certified_perron(vs.matrix());
    if (pb.zero) {
        e.empty_subshift = true;
        e.detail = "no cycles after trimming";
        return e;
    }
    e.lower = std::log(pb.lower.convert_to<double>());
    e.upper = std::log(pb.upper.convert_to<double>());
    e.detail = std::to_string(vs.states.size()) + " states";
    return e;
}

namespace {

struct Basis2 {
    // w = alpha * u + beta * v with (u, v) unimodular
    std::int64_t u0, u1, v0, v1;
    std::pair<std::int64_t, std::int64_t> coords(std::int64_t w0, std::int64_t w1) const {
        std::int64_t det = u0 * v1 - v0 * u1;
        std::int64_t alpha = (w0 * v1 - v0 * w1) / det;
        std::int64_t beta = (u0 * w1 - w0 * u1) / det;
        return {alpha, beta};
    }
};

Basis2 complete_basis(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp;
        tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    if (old_r != 1) throw std::invalid_argument("strip: direction vector must be primitive");
    Basis2 bs{-old_t, old_s, a, b};
    // shear u by multiples of v to keep coordinate widths of unit vectors small
    auto width = [&](const Basis2& basis) {
        auto [a1, b1] = basis.coords(1, 0);
        auto [a2, b2] = basis.coords(0, 1);
        (void)b1;
        (void)b2;
        return std::max(std::llabs(a1), std::llabs(a2));
    };
    Basis2 bestb = bs;
    for (std::int64_t k = -4; k <= 4; ++k) {
        Basis2 cand{bs.u0 + k * bs.v0, bs.u1 + k * bs.v1, bs.v0, bs.v1};
        if (width(cand) < width(bestb)) bestb = cand;
    }
    return bestb;
}

}  // namespace

SftSpec strip_quotient_sft(const SftSpec& x, const GroupElement& v, std::int64_t n, Budget budget) {
    const auto& spec = x.group();
    if (spec.rank != 2 || !spec.moduli.empty())
        throw std::invalid_argument("strip: needs a Z^2-SFT with trivial torsion");
    if (n < 1) throw std::invalid_argument("strip: n must be >= 1");
    std::int64_t a = v.free[0], b = v.free[1];
    if (a == 0 && b == 0) throw std::invalid_argument("strip: zero direction");
    Basis2 basis = complete_basis(a, b);

    const int asz = static_cast<int>(x.alphabet().size());
    std::uint64_t col_count = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        col_count *= asz;
        if (col_count > (1u << 20)) throw BudgetExceeded("strip: column alphabet too large");
    }

    GroupSpec zspec{1, {}};
    Alphabet cols = numbered_alphabet(static_cast<int>(col_count));

    auto col_sym = [&](const std::vector<Symbol>& column) {
        std::int64_t code = 0;
        for (std::int64_t r = 0; r < n; ++r) code = code * asz + column[r];
        return static_cast<Symbol>(code);
    };

    std::vector<Pattern> forbidden;
    std::uint64_t emitted = 0;
    for (const auto& f : x.forbidden()) {
        for (std::int64_t t = 0; t < n; ++t) {
            std::vector<std::int64_t> colpos;
            std::vector<std::int64_t> rowpos;
            for (const auto& s : f.support) {
                auto [alpha, beta] = basis.coords(s.free[0], s.free[1]);
                colpos.push_back(alpha);
                std::int64_t r = (t + beta) % n;
                if (r < 0) r += n;
                rowpos.push_back(r);
            }
            std::int64_t clo = *std::min_element(colpos.begin(), colpos.end());
            std::int64_t chi = *std::max_element(colpos.begin(), colpos.end());
            const int width = static_cast<int>(chi - clo + 1);

            std::vector<std::vector<Symbol>> grid(width, std::vector<Symbol>(n, -1));
            bool consistent = true;
            for (std::size_t j = 0; j < colpos.size(); ++j) {
                auto& cell = grid[colpos[j] - clo][rowpos[j]];
                if (cell >= 0 && cell != f.symbols[j]) consistent = false;
                cell = f.symbols[j];
            }
            if (!consistent) continue;

            std::vector<std::pair<int, int>> free_cells;
            for (int c = 0; c < width; ++c)
                for (int r = 0; r < n; ++r)
                    if (grid[c][r] < 0) free_cells.push_back({c, r});

            std::vector<GroupElement> win;
            for (int c = 0; c < width; ++c) win.push_back(make_element(zspec, {c}));
            FiniteSet window(win);

            std::vector<int> choice(free_cells.size(), 0);
            while (true) {
                for (std::size_t i = 0; i < free_cells.size(); ++i)
                    grid[free_cells[i].first][free_cells[i].second] = choice[i];
                std::vector<Symbol> row;
                for (int c = 0; c < width; ++c) row.push_back(col_sym(grid[c]));
                forbidden.push_back(make_pattern(window, row));
                if (++emitted > budget.max_nodes)
                    throw BudgetExceeded("strip: forbidden pattern expansion too large");
                int i = static_cast<int>(free_cells.size()) - 1;
                for (; i >= 0; --i) {
                    if (choice[i] + 1 < asz) {
                        ++choice[i];
                        break;
                    }
                    choice[i] = 0;
                }
                if (i < 0) break;
                for (std::size_t j = i + 1; j < free_cells.size(); ++j)
                    grid[free_cells[j].first][free_cells[j].second] = -1;
            }
        }
    }
    return SftSpec::make(zspec, cols, std::move(forbidden));
}

EntropyEstimate strip_entropy(const SftSpec& x, const GroupElement& v, std::int64_t n,
                              Budget budget) {
    auto quotient = strip_quotient_sft(x, v, n, budget);
    auto e = entropy_exact_1d(quotient, budget);
    e.method = EntropyMethod::StripExact;
    if (!e.empty_subshift) {
        e.lower /= static_cast<double>(n);
        e.upper /= static_cast<double>(n);
    }
    e.detail = "strip n=" + std::to_string(n) + ", " + e.detail;
    return e;
}

}  // namespace subshift
