#include "subshift/retract.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace subshift {

bool is_safe_symbol(const SftSpec& x, Symbol a) {
    if (a < 0 || static_cast<std::size_t>(a) >= x.alphabet().size())
        throw std::invalid_argument("is_safe_symbol: symbol outside alphabet");
    for (const auto& f : x.forbidden()) {
        for (std::size_t u = 0; u < f.support.size(); ++u) {
            Pattern g = f;
            g.symbols[u] = a;
            if (!is_locally_admissible(x, g)) return false;
        }
    }
    return true;
}

SafeRetractResult safe_symbol_retract(const SftSpec& x, Symbol a, const Pattern& p) {
    if (!is_safe_symbol(x, a))
        throw std::invalid_argument("safe_symbol_retract: symbol is not safe");
    const auto& spec = x.group();

    SafeRetractResult res;
    std::vector<GroupElement> sites, omitted;
    std::vector<Symbol> values;
    for (const auto& v : p.support) {
        bool decidable = true;
        bool covered = false;
        for (const auto& f : x.forbidden()) {
            for (const auto& s : f.support) {
                GroupElement gamma = sub(spec, v, s);  // occurrence position covering v
                bool inside = true;
                bool match = true;
                for (std::size_t j = 0; j < f.support.size(); ++j) {
                    auto q = p.find(add(spec, gamma, f.support[j]));
                    if (!q) {
                        inside = false;
                        break;
                    }
                    if (*q != f.symbols[j]) match = false;
                }
                if (!inside) {
                    decidable = false;
                } else if (match) {
                    covered = true;
                }
            }
        }
        if (!decidable) {
            omitted.push_back(v);
            continue;
        }
        sites.push_back(v);
        values.push_back(covered ? a : p.at(v));
    }
    FiniteSet dom(sites);
    std::vector<Symbol> ordered(dom.size());
    for (std::size_t i = 0; i < sites.size(); ++i) ordered[*dom.index_of(sites[i])] = values[i];
    res.output = Pattern{std::move(dom), std::move(ordered)};
    res.omitted = FiniteSet(std::move(omitted));
    return res;
}

SftSpec coloring_shift(int k, const FiniteSet& f, const GroupSpec& spec) {
    if (f.is_empty() || f.contains(zero_element(spec)))
        throw std::invalid_argument("coloring_shift: F must avoid 0 and be nonempty");
    if (!is_symmetric(spec, f))
        throw std::invalid_argument("coloring_shift: F must be symmetric");
    std::vector<Pattern> forb;
    for (const auto& v : f) {
        FiniteSet sup({zero_element(spec), v});
        for (Symbol c = 0; c < k; ++c) forb.push_back(make_pattern(sup, {c, c}));
    }
    return SftSpec::make(spec, numbered_alphabet(k, 1), forb);
}

namespace {

// cylinder family over a common window; one layer of the marker cascade
struct CoverSet {
    FiniteSet window;
    std::vector<std::vector<Symbol>> rows;  // sorted
};

bool rows_contain(const std::vector<std::vector<Symbol>>& rows, const std::vector<Symbol>& r) {
    return std::binary_search(rows.begin(), rows.end(), r);
}

// pattern-level marker test: no locally admissible joint realization of the
// family and its gamma-shift
bool cover_is_marker(const SftSpec& ambient, const CoverSet& g, const FiniteSet& p,
                     Budget budget) {
    const auto& spec = ambient.group();
    for (const auto& gamma : p) {
        FiniteSet shifted = translate(spec, neg(spec, gamma), g.window);
        FiniteSet joint = set_union(g.window, shifted);
        auto lang = language(ambient, joint, budget);
        for (const auto& row : lang.rows) {
            std::vector<Symbol> at_base, at_shift;
            for (const auto& s : g.window) at_base.push_back(row[*joint.index_of(s)]);
            for (const auto& s : g.window)
                at_shift.push_back(row[*joint.index_of(sub(spec, s, gamma))]);
            if (rows_contain(g.rows, at_base) && rows_contain(g.rows, at_shift)) return false;
        }
    }
    return true;
}

struct MarkerCascade {
    std::vector<CoverSet> cover;  // merge order
    FiniteSet p;

    std::int64_t reach(const GroupSpec& spec) const {
        std::int64_t r = 0;
        for (const auto& g : p)
            for (int i = 0; i < spec.rank; ++i) r = std::max<std::int64_t>(r, std::llabs(g.free[i]));
        std::int64_t m = 0;
        for (const auto& c : cover)
            for (const auto& s : c.window)
                for (int i = 0; i < spec.rank; ++i)
                    m = std::max<std::int64_t>(m, std::llabs(s.free[i]));
        return m + r * static_cast<std::int64_t>(cover.size());
    }
};

enum class Tri { False, True, Unknown };

struct CascadeEval {
    const GroupSpec* spec;
    const Pattern* context;
    const MarkerCascade* cascade;
    std::map<std::pair<int, GroupElement>, Tri> memo;

    Tri matches(const CoverSet& g, const GroupElement& v) {
        std::vector<Symbol> row;
        row.reserve(g.window.size());
        for (const auto& s : g.window) {
            auto q = context->find(add(*spec, v, s));
            if (!q) return Tri::Unknown;
            row.push_back(*q);
        }
        return rows_contain(g.rows, row) ? Tri::True : Tri::False;
    }

    // membership of sigma_v(x) in the j-th partial merge C_j (1-based)
    Tri is_c(int j, const GroupElement& v) {
        if (j <= 0) return Tri::False;
        auto key = std::make_pair(j, v);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        memo[key] = Tri::Unknown;  // cycles cannot occur; placeholder for reentry safety

        Tri prev = is_c(j - 1, v);
        Tri result;
        if (prev == Tri::True) {
            result = Tri::True;
        } else {
            Tri m = matches(cascade->cover[j - 1], v);
            if (m == Tri::False) {
                result = prev;  // False or Unknown
            } else {
                // sigma_v(x) in D_j \ union of gamma-shifts of C_{j-1}
                Tri blocked = Tri::False;
                for (const auto& gamma : cascade->p) {
                    Tri s = is_c(j - 1, sub(*spec, v, gamma));
                    if (s == Tri::True) {
                        blocked = Tri::True;
                        break;
                    }
                    if (s == Tri::Unknown) blocked = Tri::Unknown;
                }
                if (m == Tri::Unknown || blocked == Tri::Unknown)
                    result = (prev == Tri::Unknown) ? Tri::Unknown
                                                    : (blocked == Tri::True ? prev : Tri::Unknown);
                else if (blocked == Tri::True)
                    result = prev;
                else
                    result = Tri::True;
            }
        }
        memo[key] = result;
        return result;
    }

    Tri in_marker(const GroupElement& v) {
        return is_c(static_cast<int>(cascade->cover.size()), v);
    }
};

// canonical cover for the retraction: over a two-site window {0,u}, the
// "domino" sets [x_u = c, x_0 = c] and the "descent" sets [x_u = c, x_0 != c];
// falls back to singleton-row cylinders on wider windows
std::optional<MarkerCascade> find_cascade(const SftSpec& ambient, const FiniteSet& f,
                                          Budget budget) {
    const auto& spec = ambient.group();
    const int k = static_cast<int>(ambient.alphabet().size());
    MarkerCascade cas;
    cas.p = f;

    std::vector<FiniteSet> candidate_windows;
    candidate_windows.push_back(FiniteSet({zero_element(spec)}));
    for (int i = 0; i < spec.rank; ++i) {
        auto u = zero_element(spec);
        u.free[i] = 1;
        candidate_windows.push_back(FiniteSet({zero_element(spec), u}));
    }
    for (int i = 0; i < spec.torsion_size(); ++i) {
        auto u = zero_element(spec);
        u.torsion[i] = 1;
        candidate_windows.push_back(FiniteSet({zero_element(spec), u}));
    }
    candidate_windows.push_back(make_box(1, spec));

    for (const auto& m : candidate_windows) {
        // grouped cover on two-site windows
        if (m.size() == 2) {
            const auto& u = (m[0] == zero_element(spec)) ? m[1] : m[0];
            std::vector<CoverSet> groups;
            bool ok = true;
            for (Symbol c = 0; c < k && ok; ++c) {
                CoverSet dom{m, {}};   // both cells = c
                CoverSet desc{m, {}};  // cell at u = c, cell at 0 != c
                std::size_t iu = *m.index_of(u), i0 = *m.index_of(zero_element(spec));
                for (Symbol a = 0; a < k; ++a) {
                    std::vector<Symbol> row(2);
                    row[iu] = c;
                    row[i0] = a;
                    if (a == c)
                        dom.rows.push_back(row);
                    else
                        desc.rows.push_back(row);
                }
                std::sort(dom.rows.begin(), dom.rows.end());
                std::sort(desc.rows.begin(), desc.rows.end());
                if (!cover_is_marker(ambient, dom, f, budget) ||
                    !cover_is_marker(ambient, desc, f, budget))
                    ok = false;
                groups.push_back(std::move(dom));
                groups.push_back(std::move(desc));
            }
            if (ok) {
                cas.cover = std::move(groups);
                return cas;
            }
        }
        // singleton-row cover
        auto lang = language(ambient, m, budget);
        bool ok = !lang.rows.empty();
        std::vector<CoverSet> singles;
        for (const auto& row : lang.rows) {
            CoverSet g{m, {row}};
            if (!cover_is_marker(ambient, g, f, budget)) {
                ok = false;
                break;
            }
            singles.push_back(std::move(g));
        }
        if (ok && singles.size() <= 64) {
            cas.cover = std::move(singles);
            return cas;
        }
    }
    return std::nullopt;
}

}  // namespace

ColoringRetractResult coloring_retract(int k, const FiniteSet& f, const SftSpec& ambient,
                                       const Pattern& p, Budget budget) {
    const auto& spec = ambient.group();
    if (k <= static_cast<int>(f.size()))
        throw std::invalid_argument("coloring_retract: requires k > |F|");
    if (static_cast<int>(ambient.alphabet().size()) != k)
        throw std::invalid_argument("coloring_retract: ambient alphabet must have k symbols");
    if (!is_symmetric(spec, f) || f.contains(zero_element(spec)))
        throw std::invalid_argument("coloring_retract: F must be symmetric and avoid 0");
    if (!is_locally_admissible(ambient, p))
        throw std::invalid_argument("coloring_retract: input not admissible in the ambient SFT");
    {
        auto free_check = gfree_witness(ambient, cyclic_family(spec, f), 4, budget);
        if (free_check.kind != GfreeWitness::Kind::Witness)
            throw std::invalid_argument(
                "coloring_retract: ambient SFT not verified free of F-cyclic stabilizers");
    }

    auto cascade = find_cascade(ambient, f, budget);
    if (!cascade)
        throw std::runtime_error("coloring_retract: no marker cover found for the ambient SFT");

    // enumeration of F + {0} in canonical order: the pass order
    std::vector<GroupElement> phases_order;
    {
        FiniteSet fz = set_union(f, FiniteSet({zero_element(spec)}));
        for (const auto& g : fz) phases_order.push_back(g);
    }

    CascadeEval eval{&spec, &p, &*cascade, {}};

    // frozen phases from the input configuration
    struct Cmp {
        bool operator()(const GroupElement& a, const GroupElement& b) const {
            return precedes(a, b);
        }
    };
    std::map<GroupElement, int, Cmp> phase_of;
    std::vector<GroupElement> evaluated_sites;
    for (const auto& v : p.support) {
        bool neighbors_ok = true;
        for (const auto& g : f)
            if (!p.support.contains(add(spec, v, g))) neighbors_ok = false;
        if (!neighbors_ok) continue;
        int ph = -1;
        for (std::size_t j = 0; j < phases_order.size(); ++j) {
            Tri t = eval.in_marker(add(spec, v, phases_order[j]));
            if (t == Tri::Unknown) {
                ph = -1;
                break;
            }
            if (t == Tri::True) {
                ph = static_cast<int>(j);
                break;
            }
        }
        if (ph >= 0) {
            phase_of[v] = ph;
            evaluated_sites.push_back(v);
        }
    }

    Pattern out = p;
    for (std::size_t pass = 0; pass < phases_order.size(); ++pass) {
        std::vector<std::pair<std::size_t, Symbol>> updates;
        for (const auto& v : evaluated_sites) {
            if (phase_of[v] != static_cast<int>(pass)) continue;
            Symbol cur = out.at(v);
            std::vector<bool> used(k, false);
            for (const auto& g : f) used[out.at(add(spec, v, g))] = true;
            if (!used[cur]) continue;  // already proper here
            Symbol fresh = 0;
            while (used[fresh]) ++fresh;
            updates.emplace_back(*out.support.index_of(v), fresh);
        }
        for (auto [idx, sym] : updates) out.symbols[idx] = sym;
    }

    ColoringRetractResult res;
    res.output = std::move(out);
    res.evaluated = FiniteSet(std::move(evaluated_sites));
    return res;
}

void SubgroupFamily::validate(const GroupSpec& spec) const {
    if (groups.size() != generating_sets.size())
        throw std::invalid_argument("SubgroupFamily: sizes mismatch");
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (!is_symmetric(spec, generating_sets[i]))
            throw std::invalid_argument("SubgroupFamily: generating set must be symmetric");
        std::vector<GroupElement> gens(generating_sets[i].begin(), generating_sets[i].end());
        if (!(Subgroup::from_generators(spec, gens) == groups[i]))
            throw std::invalid_argument("SubgroupFamily: set does not generate its subgroup");
    }
}

SubgroupFamily cyclic_family(const GroupSpec& spec, const FiniteSet& f) {
    SubgroupFamily fam;
    std::vector<Subgroup> seen;
    for (const auto& v : f) {
        auto g = Subgroup::from_generators(spec, {v});
        if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
        seen.push_back(g);
        fam.groups.push_back(g);
        fam.generating_sets.push_back(FiniteSet({v, neg(spec, v)}));
    }
    return fam;
}

namespace {

FiniteSet rect_window(const GroupSpec& spec, int r) {
    // [0, r)^d times full torsion
    std::vector<GroupElement> out;
    std::vector<std::int64_t> free(spec.rank, 0);
    std::vector<std::int64_t> tor(spec.moduli.size(), 0);
    while (true) {
        out.push_back(make_element(spec, free, tor));
        int i = 0;
        for (; i < spec.rank; ++i) {
            if (free[i] + 1 < r) {
                ++free[i];
                break;
            }
            free[i] = 0;
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

bool row_breaks_group(const GroupSpec& spec, const FiniteSet& window,
                      const std::vector<Symbol>& row, const FiniteSet& gens) {
    for (const auto& gamma : gens) {
        for (std::size_t i = 0; i < window.size(); ++i) {
            auto j = window.index_of(add(spec, window[i], gamma));
            if (j && row[i] != row[*j]) return true;
        }
    }
    return false;
}

}  // namespace

GfreeWitness gfree_witness(const SftSpec& x, const SubgroupFamily& gs, int max_window,
                           Budget budget) {
    const auto& spec = x.group();
    gs.validate(spec);
    GfreeWitness res;

    std::vector<Symbol> survivor_row;
    FiniteSet survivor_window;
    std::size_t survivor_group = 0;
    for (int r = 1; r <= max_window; ++r) {
        FiniteSet window = rect_window(spec, r);
        auto lang = language(x, window, budget);
        bool all_break = true;
        for (const auto& row : lang.rows) {
            for (std::size_t gi = 0; gi < gs.groups.size(); ++gi) {
                if (!row_breaks_group(spec, window, row, gs.generating_sets[gi])) {
                    all_break = false;
                    survivor_row = row;
                    survivor_window = window;
                    survivor_group = gi;
                    break;
                }
            }
            if (!all_break) break;
        }
        if (all_break) {
            res.kind = GfreeWitness::Kind::Witness;
            res.window = window;
            return res;
        }
    }

    // try to confirm the surviving pattern as a genuine periodic point
    const auto& g0 = gs.groups[survivor_group];
    for (std::int64_t pad = 1; pad <= 4; ++pad) {
        std::vector<GroupElement> gens = g0.generators();
        for (int i = 0; i < spec.rank; ++i) {
            auto e = zero_element(spec);
            e.free[i] = pad;
            gens.push_back(e);
        }
        auto lam = Subgroup::from_generators(spec, gens);
        if (!lam.index()) continue;
        auto pts = periodic_points(x, lam, false, budget);
        if (!pts.configs.empty()) {
            res.kind = GfreeWitness::Kind::Counterexample;
            res.counterexample = Pattern{pts.domain, pts.configs.front()};
            res.note = "periodic point fixed by " + g0.to_string() + " exists (period " +
                       lam.to_string() + ")";
            return res;
        }
    }
    res.kind = GfreeWitness::Kind::Inconclusive;
    res.counterexample = Pattern{survivor_window, survivor_row};
    res.note = "surviving pattern at the window cap was not confirmed as a periodic point";
    return res;
}

SftSpec build_padded(const SftSpec& y, const FiniteSet& k, const FiniteSet& d, Budget budget) {
    const auto& spec = y.group();
    if (k.is_empty() || d.is_empty())
        throw std::invalid_argument("build_padded: K and D must be nonempty");
    auto lang_k = language(y, k, budget);
    FiniteSet window = sumset(spec, k, d);
    const int asz = static_cast<int>(y.alphabet().size());

    std::uint64_t count = 1;
    for (std::size_t i = 0; i < window.size(); ++i) {
        count *= asz;
        if (count > budget.max_nodes)
            throw BudgetExceeded("build_padded: window enumeration exceeds budget");
    }

    // index maps for the D-translated K-blocks
    std::vector<std::vector<std::size_t>> block_idx;
    for (const auto& w : d) {
        std::vector<std::size_t> idx;
        for (const auto& u : k) idx.push_back(*window.index_of(add(spec, w, u)));
        block_idx.push_back(std::move(idx));
    }

    std::vector<Pattern> forbidden;
    std::vector<Symbol> row(window.size(), 0);
    while (true) {
        bool some_admissible = false;
        for (const auto& idx : block_idx) {
            std::vector<Symbol> blk;
            blk.reserve(idx.size());
            for (auto i : idx) blk.push_back(row[i]);
            if (lang_k.contains_row(blk)) {
                some_admissible = true;
                break;
            }
        }
        if (!some_admissible) forbidden.push_back(make_pattern(window, row));
        int i = static_cast<int>(row.size()) - 1;
        for (; i >= 0; --i) {
            if (row[i] + 1 < asz) {
                ++row[i];
                break;
            }
            row[i] = 0;
        }
        if (i < 0) break;
    }
    return SftSpec::make(spec, y.alphabet(), std::move(forbidden));
}

Symbol triple_symbol(int asz, Symbol z, Symbol a, Symbol b) {
    return z * asz * asz + a * asz + b;
}

SftSpec homotopy_product_sft(const SftSpec& y) {
    const auto& spec = y.group();
    const int asz = static_cast<int>(y.alphabet().size());
    Alphabet prod;
    for (int z = 0; z < 2; ++z)
        for (int a = 0; a < asz; ++a)
            for (int b = 0; b < asz; ++b)
                prod.names.push_back(std::to_string(z) + "|" + y.alphabet().name(a) + "|" +
                                     y.alphabet().name(b));

    std::vector<Pattern> forbidden;
    for (const auto& f : y.forbidden()) {
        const std::size_t n = f.support.size();
        // lift into component 1 (the y0 layer) and component 2 (the y1 layer)
        for (int comp = 0; comp < 2; ++comp) {
            std::vector<int> other(n, 0);
            while (true) {
                std::vector<Symbol> row(n);
                for (std::size_t i = 0; i < n; ++i) {
                    int z = other[i] % 2;
                    int o = other[i] / 2;
                    row[i] = comp == 0 ? triple_symbol(asz, z, f.symbols[i], o)
                                       : triple_symbol(asz, z, o, f.symbols[i]);
                }
                forbidden.push_back(make_pattern(f.support, row));
                std::size_t i = 0;
                for (; i < n; ++i) {
                    if (other[i] + 1 < 2 * asz) {
                        ++other[i];
                        break;
                    }
                    other[i] = 0;
                }
                if (i == n) break;
            }
        }
    }
    return SftSpec::make(spec, prod, std::move(forbidden));
}

HomotopyCandidate pointwise_selector(const SftSpec& y) {
    const int asz = static_cast<int>(y.alphabet().size());
    HomotopyCandidate psi;
    psi.code.source_alphabet = homotopy_product_sft(y).alphabet();
    psi.code.target_alphabet = y.alphabet();
    psi.code.window = FiniteSet({zero_element(y.group())});
    for (int z = 0; z < 2; ++z)
        for (int a = 0; a < asz; ++a)
            for (int b = 0; b < asz; ++b)
                psi.code.table[{triple_symbol(asz, z, a, b)}] = z ? b : a;
    psi.strong = true;
    return psi;
}

namespace {

std::string describe_row(const SftSpec& x, const FiniteSet& window,
                         const std::vector<Symbol>& row) {
    std::string s;
    for (std::size_t i = 0; i < window.size(); ++i)
        s += to_string(window[i]) + "=" + x.alphabet().name(row[i]) + " ";
    return s;
}

}  // namespace

HomotopyVerdict verify_homotopy(const SftSpec& y, const HomotopyCandidate& psi,
                                std::int64_t period_bound, Budget budget) {
    const auto& spec = y.group();
    const int asz = static_cast<int>(y.alphabet().size());
    auto product = homotopy_product_sft(y);
    if (!(psi.code.source_alphabet == product.alphabet()))
        throw std::invalid_argument("verify_homotopy: source alphabet mismatch");

    HomotopyVerdict verdict;
    verdict.exactness = language_exactness(product);

    // (a) images avoid every forbidden pattern of the target
    for (const auto& f : y.forbidden()) {
        FiniteSet domain = sumset(spec, f.support, psi.code.window);
        auto lang = language(product, domain, budget);
        for (const auto& row : lang.rows) {
            Pattern p{domain, row};
            auto img = apply_block_code(spec, psi.code, p, f.support);
            if (img.symbols == f.symbols) {
                verdict.outputs_in_target = false;
                verdict.counterexample =
                    "image hits forbidden pattern: " + describe_row(product, domain, row);
                break;
            }
        }
        if (!verdict.outputs_in_target) break;
    }

    // periodic points of Y up to the index bound
    std::vector<std::pair<Subgroup, PeriodicPointSet>> pools;
    for (const auto& g : enumerate_subgroups(period_bound, spec))
        pools.emplace_back(g, periodic_points(y, g, false, budget));

    auto eval_code = [&](const std::function<Symbol(const GroupElement&)>& conf,
                         const GroupElement& v) {
        std::vector<Symbol> key;
        for (const auto& w : psi.code.window) key.push_back(conf(add(spec, v, w)));
        auto it = psi.code.table.find(key);
        if (it == psi.code.table.end())
            throw std::invalid_argument("verify_homotopy: table incomplete");
        return it->second;
    };

    // (b) endpoint conditions on pairs of periodic points with constant z
    for (std::size_t i = 0; i < pools.size() && verdict.endpoints_ok; ++i) {
        for (std::size_t j = 0; j < pools.size() && verdict.endpoints_ok; ++j) {
            auto common = subgroup_intersection(pools[i].first, pools[j].first);
            auto dom = common.fundamental_domain();
            for (const auto& c0 : pools[i].second.configs) {
                for (const auto& c1 : pools[j].second.configs) {
                    auto y0 = [&](const GroupElement& g) {
                        return c0[*pools[i].second.domain.index_of(pools[i].first.reduce(g))];
                    };
                    auto y1 = [&](const GroupElement& g) {
                        return c1[*pools[j].second.domain.index_of(pools[j].first.reduce(g))];
                    };
                    for (int z = 0; z < 2 && verdict.endpoints_ok; ++z) {
                        auto conf = [&](const GroupElement& g) {
                            return triple_symbol(asz, z, y0(g), y1(g));
                        };
                        for (const auto& v : dom) {
                            Symbol expect = z ? y1(v) : y0(v);
                            if (eval_code(conf, v) != expect) {
                                verdict.endpoints_ok = false;
                                verdict.counterexample =
                                    "endpoint condition fails at " + to_string(v) +
                                    " with z = " + std::to_string(z);
                                break;
                            }
                        }
                    }
                    if (!verdict.endpoints_ok) break;
                }
                if (!verdict.endpoints_ok) break;
            }
        }
    }

    // (c) strong condition: psi(z, y, y) = y over all z-window assignments
    if (psi.strong && verdict.strong_ok) {
        std::vector<GroupElement> wsites(psi.code.window.begin(), psi.code.window.end());
        const std::size_t nw = wsites.size();
        for (const auto& [g, pts] : pools) {
            auto dom = g.fundamental_domain();
            for (const auto& c : pts.configs) {
                auto yv = [&](const GroupElement& u) {
                    return c[*pts.domain.index_of(g.reduce(u))];
                };
                for (const auto& v : dom) {
                    for (std::uint64_t mask = 0; mask < (1ull << nw); ++mask) {
                        std::vector<Symbol> key;
                        for (std::size_t wi = 0; wi < nw; ++wi) {
                            auto site = add(spec, v, wsites[wi]);
                            int z = (mask >> wi) & 1;
                            key.push_back(triple_symbol(asz, z, yv(site), yv(site)));
                        }
                        auto it = psi.code.table.find(key);
                        if (it == psi.code.table.end())
                            throw std::invalid_argument("verify_homotopy: table incomplete");
                        if (it->second != yv(v)) {
                            verdict.strong_ok = false;
                            verdict.counterexample = "strong condition fails at " + to_string(v);
                            break;
                        }
                    }
                    if (!verdict.strong_ok) break;
                }
                if (!verdict.strong_ok) break;
            }
            if (!verdict.strong_ok) break;
        }
    }
    return verdict;
}

SquigReport squig_check(const SftSpec& x, const SftSpec& y, std::int64_t max_index,
                        Budget budget) {
    if (!(x.group() == y.group()))
        throw std::invalid_argument("squig_check: subshifts over different groups");
    SquigReport rep;
    for (const auto& g : enumerate_subgroups(max_index, x.group())) {
        SquigRow row;
        row.gamma0 = g;
        row.x_nonempty = !periodic_points(x, g, false, budget).configs.empty();
        row.y_nonempty = !periodic_points(y, g, false, budget).configs.empty();
        row.pass = !row.x_nonempty || row.y_nonempty;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace subshift
