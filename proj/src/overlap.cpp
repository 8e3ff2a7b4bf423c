#include "subshift/overlap.hpp"

#include "subshift/periodic.hpp"

#include <algorithm>

namespace subshift {

FiniteSet self_overlaps(const GroupSpec& spec, const Pattern& w, const FiniteSet& range) {
    std::vector<GroupElement> out;
    for (const auto& v : range) {
        bool agree = true;
        for (std::size_t i = 0; i < w.support.size() && agree; ++i) {
            auto other = w.find(add(spec, w.support[i], v));
            if (other && *other != w.symbols[i]) agree = false;
        }
        if (agree) out.push_back(v);
    }
    return FiniteSet(std::move(out));
}

namespace {

// deterministic generator; distributions are hand-rolled so results are
// identical across platforms
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace

OverlapFreeResult find_overlap_free_pattern(const SftSpec& y, std::int64_t n, std::uint64_t seed,
                                            int max_attempts, Budget budget) {
    const auto& spec = y.group();
    if (n < 1) throw std::invalid_argument("find_overlap_free_pattern: n must be >= 1");
    auto qn = make_annulus(n, spec);
    auto bn = make_box(n, spec);

    auto point_lang = language(y, make_box(0, spec), budget);
    if (point_lang.rows.size() <= 1) {
        // at most one choice everywhere: every pattern overlaps itself
        auto probe = language(y, make_box(1, spec), budget);
        if (probe.rows.size() <= 1)
            throw std::invalid_argument("find_overlap_free_pattern: subshift is trivial");
    }

    auto kernel = kernel_of(y, std::min<std::int64_t>(n, 2), budget);
    std::vector<GroupElement> allowed_elems;
    for (const auto& ev : kernel.evidence)
        if (ev.status == KernelStatus::Supported) allowed_elems.push_back(ev.gamma);
    FiniteSet allowed(allowed_elems);

    const int nsym = static_cast<int>(y.alphabet().size());
    const int nsites = static_cast<int>(qn.size());

    // constraint table over Q_n, as in the language enumeration
    struct Constraint {
        std::vector<int> idx;
        std::vector<Symbol> syms;
    };
    std::vector<Constraint> constraints;
    std::vector<std::vector<int>> by_site(nsites);
    for (const auto& fp : y.forbidden()) {
        for (const auto& base : qn) {
            GroupElement gamma = sub(spec, base, fp.support[0]);
            Constraint c;
            bool ok = true;
            for (std::size_t j = 0; j < fp.support.size(); ++j) {
                auto site = add(spec, gamma, fp.support[j]);
                auto i = qn.index_of(site);
                if (!i) {
                    ok = false;
                    break;
                }
                c.idx.push_back(static_cast<int>(*i));
                c.syms.push_back(fp.symbols[j]);
            }
            if (!ok) continue;
            int trigger = *std::max_element(c.idx.begin(), c.idx.end());
            by_site[trigger].push_back(static_cast<int>(constraints.size()));
            constraints.push_back(std::move(c));
        }
    }

    // block-planting net: disjoint B_m-blocks inside Q_n, m = window reach
    std::int64_t m = 0;
    for (const auto& g : y.window())
        for (int i = 0; i < spec.rank; ++i) m = std::max<std::int64_t>(m, std::llabs(g.free[i]));
    auto block_box = make_box(m, spec);
    std::vector<GroupElement> eligible_sites;
    for (const auto& p : qn) {
        bool inside = true;
        for (const auto& d : block_box)
            if (!qn.contains(add(spec, p, d))) {
                inside = false;
                break;
            }
        if (inside) eligible_sites.push_back(p);
    }
    FiniteSet net = maximal_separated(spec, block_box, FiniteSet(std::move(eligible_sites)));
    auto block_lang = language(y, block_box, budget);
    if (block_lang.rows.empty())
        throw std::invalid_argument("find_overlap_free_pattern: empty subshift");

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));

        std::vector<Symbol> fixed(nsites, -1);
        for (const auto& p : net) {
            const auto& row = block_lang.rows[rng.below(block_lang.rows.size())];
            for (std::size_t j = 0; j < block_box.size(); ++j)
                fixed[*qn.index_of(add(spec, p, block_box[j]))] = row[j];
        }

        // randomized backtracking fill consistent with the planted blocks
        std::vector<std::vector<Symbol>> order(nsites);
        for (int i = 0; i < nsites; ++i) {
            if (fixed[i] >= 0) {
                order[i] = {fixed[i]};
            } else {
                order[i].resize(nsym);
                for (int s = 0; s < nsym; ++s) order[i][s] = s;
                for (int s = nsym - 1; s > 0; --s)
                    std::swap(order[i][s], order[i][rng.below(s + 1)]);
            }
        }

        std::vector<Symbol> assign(nsites, -1);
        std::vector<int> pos(nsites, -1);
        std::uint64_t nodes = 0;
        int depth = 0;
        bool found = true;
        while (true) {
            ++pos[depth];
            if (pos[depth] >= static_cast<int>(order[depth].size())) {
                pos[depth] = -1;
                --depth;
                if (depth < 0) {
                    found = false;
                    break;
                }
                continue;
            }
            if (++nodes > budget.max_nodes / 64 + 100000) {
                found = false;
                break;  // this attempt is stuck; try fresh randomness
            }
            assign[depth] = order[depth][pos[depth]];
            bool ok = true;
            for (int ci : by_site[depth]) {
                const auto& c = constraints[ci];
                bool match = true;
                for (std::size_t j = 0; j < c.idx.size(); ++j) {
                    if (assign[c.idx[j]] != c.syms[j]) {
                        match = false;
                        break;
                    }
                }
                if (match) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (depth == nsites - 1) break;
            ++depth;
        }
        if (!found) continue;

        Pattern w{qn, assign};
        // deterministic exhaustive verification over B_n
        bool good = true;
        for (const auto& v : self_overlaps(spec, w, bn)) {
            if (v == zero_element(spec)) continue;
            if (!allowed.contains(v)) {
                good = false;
                break;
            }
        }
        if (!good) continue;

        OverlapFreeResult res;
        res.pattern = std::move(w);
        res.attempts = attempt + 1;
        res.seed = seed;
        res.allowed = allowed;
        return res;
    }
    throw std::runtime_error("find_overlap_free_pattern: search exhausted after " +
                             std::to_string(max_attempts) + " attempts");
}

Pattern substitute_at_marks(const GroupSpec& spec, const Pattern& y, const Pattern& z,
                            const Pattern& w_from, const Pattern& w_to) {
    if (!(w_from.support == w_to.support))
        throw std::invalid_argument("substitute_at_marks: patterns must share their support");

    std::vector<GroupElement> marked;
    for (std::size_t i = 0; i < z.support.size(); ++i) {
        if (z.symbols[i] != 1) continue;
        const auto& v = z.support[i];
        bool occurs = true;
        for (std::size_t j = 0; j < w_from.support.size() && occurs; ++j) {
            auto s = y.find(add(spec, v, w_from.support[j]));
            if (!s || *s != w_from.symbols[j]) occurs = false;
        }
        if (occurs) marked.push_back(v);
    }

    // marked occurrences must be support-disjoint
    for (std::size_t i = 0; i < marked.size(); ++i)
        for (std::size_t j = i + 1; j < marked.size(); ++j) {
            auto a = translate(spec, marked[i], w_from.support);
            auto b = translate(spec, marked[j], w_from.support);
            if (!set_intersect(a, b).is_empty())
                throw std::invalid_argument("substitute_at_marks: overlapping occurrences");
        }

    Pattern out = y;
    for (const auto& v : marked)
        for (std::size_t j = 0; j < w_to.support.size(); ++j) {
            auto idx = out.support.index_of(add(spec, v, w_to.support[j]));
            out.symbols[*idx] = w_to.symbols[j];
        }
    return out;
}

}  // namespace subshift
