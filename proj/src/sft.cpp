#include "subshift/sft.hpp"

#include <algorithm>
#include <set>

namespace subshift {

Symbol Alphabet::index_of(const std::string& nm) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == nm) return static_cast<Symbol>(i);
    throw std::invalid_argument("alphabet: unknown symbol '" + nm + "'");
}

void Alphabet::validate() const {
    if (names.empty()) throw std::invalid_argument("alphabet: must be nonempty");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("alphabet: duplicate symbol '" + names[i] + "'");
}

Alphabet binary_alphabet() { return Alphabet{{"0", "1"}}; }

Alphabet numbered_alphabet(int k, int first) {
    Alphabet a;
    for (int i = 0; i < k; ++i) a.names.push_back(std::to_string(first + i));
    return a;
}

Symbol Pattern::at(const GroupElement& g) const {
    auto i = support.index_of(g);
    if (!i) throw std::out_of_range("pattern: site not in support");
    return symbols[*i];
}

std::optional<Symbol> Pattern::find(const GroupElement& g) const {
    auto i = support.index_of(g);
    if (!i) return std::nullopt;
    return symbols[*i];
}

bool Pattern::operator<(const Pattern& o) const {
    if (!(support == o.support)) {
        return std::lexicographical_compare(support.begin(), support.end(), o.support.begin(),
                                            o.support.end(), precedes);
    }
    return symbols < o.symbols;
}

Pattern make_pattern(const FiniteSet& support, const std::vector<Symbol>& symbols) {
    if (support.size() != symbols.size())
        throw std::invalid_argument("pattern: support/symbol size mismatch");
    return Pattern{support, symbols};
}

Pattern translate_pattern(const GroupSpec& spec, const GroupElement& v, const Pattern& p) {
    std::vector<GroupElement> sup;
    sup.reserve(p.support.size());
    for (const auto& g : p.support) sup.push_back(add(spec, v, g));
    FiniteSet moved(sup);
    std::vector<Symbol> syms(p.symbols.size());
    for (std::size_t i = 0; i < sup.size(); ++i) syms[*moved.index_of(sup[i])] = p.symbols[i];
    return Pattern{std::move(moved), std::move(syms)};
}

Pattern restrict_pattern(const Pattern& p, const FiniteSet& sub) {
    std::vector<GroupElement> sup;
    std::vector<Symbol> syms;
    for (std::size_t i = 0; i < p.support.size(); ++i) {
        if (sub.contains(p.support[i])) {
            sup.push_back(p.support[i]);
            syms.push_back(p.symbols[i]);
        }
    }
    return Pattern{FiniteSet(std::move(sup)), std::move(syms)};
}

Pattern word_pattern(const GroupSpec& spec, std::int64_t lo, const std::vector<Symbol>& word) {
    if (spec.rank != 1 || !spec.moduli.empty())
        throw std::invalid_argument("word_pattern: needs Z");
    std::vector<GroupElement> sup;
    for (std::size_t i = 0; i < word.size(); ++i)
        sup.push_back(make_element(spec, {lo + static_cast<std::int64_t>(i)}));
    return Pattern{FiniteSet(std::move(sup)), word};
}

bool PatternSet::contains_row(const std::vector<Symbol>& r) const {
    return std::binary_search(rows.begin(), rows.end(), r);
}

void PatternSet::canonicalize() {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

SftSpec SftSpec::make(GroupSpec group, Alphabet alphabet, std::vector<Pattern> forbidden) {
    group.validate();
    alphabet.validate();
    SftSpec x;
    x.group_ = group;
    x.alphabet_ = std::move(alphabet);

    std::vector<Pattern> normalized;
    for (auto& f : forbidden) {
        if (f.support.is_empty()) throw std::invalid_argument("forbidden pattern: empty support");
        for (auto s : f.symbols)
            if (s < 0 || static_cast<std::size_t>(s) >= x.alphabet_.size())
                throw std::invalid_argument("forbidden pattern: symbol outside alphabet");
        // translate so the canonical-least support element is 0
        normalized.push_back(translate_pattern(group, neg(group, f.support[0]), f));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    x.forbidden_ = std::move(normalized);

    FiniteSet win({zero_element(group)});
    for (const auto& f : x.forbidden_) win = set_union(win, f.support);
    x.window_ = win;
    return x;
}

SftSpec SftSpec::full_shift(GroupSpec group, Alphabet alphabet) {
    return make(std::move(group), std::move(alphabet), {});
}

bool is_locally_admissible(const SftSpec& x, const Pattern& p) {
    const auto& spec = x.group();
    for (auto s : p.symbols)
        if (s < 0 || static_cast<std::size_t>(s) >= x.alphabet().size())
            throw std::invalid_argument("pattern symbol outside alphabet");
    for (const auto& f : x.forbidden()) {
        for (const auto& base : p.support) {
            GroupElement gamma = sub(spec, base, f.support[0]);
            bool match = true;
            for (std::size_t j = 0; j < f.support.size(); ++j) {
                auto site = add(spec, gamma, f.support[j]);
                auto sym = p.find(site);
                if (!sym || *sym != f.symbols[j]) {
                    match = false;
                    break;
                }
            }
            if (match) return false;
        }
    }
    return true;
}

PatternSet local_language(const SftSpec& x, const FiniteSet& f, Budget budget) {
    const auto& spec = x.group();
    const int nsites = static_cast<int>(f.size());
    const int nsym = static_cast<int>(x.alphabet().size());

    struct Constraint {
        std::vector<int> idx;
        std::vector<Symbol> syms;
    };
    std::vector<Constraint> constraints;
    std::vector<std::vector<int>> by_trigger(nsites);
    for (const auto& fp : x.forbidden()) {
        for (const auto& base : f) {
            GroupElement gamma = sub(spec, base, fp.support[0]);
            Constraint c;
            bool ok = true;
            int trigger = -1;
            for (std::size_t j = 0; j < fp.support.size(); ++j) {
                auto site = add(spec, gamma, fp.support[j]);
                auto i = f.index_of(site);
                if (!i) {
                    ok = false;
                    break;
                }
                c.idx.push_back(static_cast<int>(*i));
                c.syms.push_back(fp.symbols[j]);
                trigger = std::max(trigger, static_cast<int>(*i));
            }
            if (!ok) continue;
            by_trigger[trigger].push_back(static_cast<int>(constraints.size()));
            constraints.push_back(std::move(c));
        }
    }

    PatternSet out;
    out.window = f;
    if (nsites == 0) {
        out.rows.push_back({});
        return out;
    }

    std::vector<Symbol> assign(nsites, 0);
    std::uint64_t nodes = 0;
    int depth = 0;
    assign[0] = -1;
    while (depth >= 0) {
        ++assign[depth];
        if (assign[depth] >= nsym) {
            --depth;
            continue;
        }
        if (++nodes > budget.max_nodes) throw BudgetExceeded("local_language: node budget exceeded");
        bool ok = true;
        for (int ci : by_trigger[depth]) {
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
        if (depth == nsites - 1) {
            out.rows.push_back(assign);
        } else {
            ++depth;
            assign[depth] = -1;
        }
    }
    out.canonicalize();
    return out;
}

VertexShift build_vertex_shift(const SftSpec& x, Budget budget) {
    const auto& spec = x.group();
    if (spec.rank != 1 || !spec.moduli.empty())
        throw std::invalid_argument("build_vertex_shift: needs a Z-SFT with trivial torsion");
    std::int64_t span = 2;
    for (const auto& f : x.forbidden()) {
        std::int64_t lo = f.support[0].free[0], hi = f.support[f.support.size() - 1].free[0];
        span = std::max(span, hi - lo + 1);
    }
    const int m = static_cast<int>(span);
    const int nsym = static_cast<int>(x.alphabet().size());

    std::uint64_t count = 1;
    for (int i = 0; i < m - 1; ++i) {
        count *= nsym;
        if (count > budget.max_nodes)
            throw BudgetExceeded("build_vertex_shift: state space exceeds budget");
    }
    auto adm_word = [&](const std::vector<Symbol>& w) {
        return is_locally_admissible(x, word_pattern(spec, 0, w));
    };
    std::vector<std::vector<Symbol>> states;
    std::vector<Symbol> w(m - 1, 0);
    while (true) {
        if (adm_word(w)) states.push_back(w);
        int i = m - 2;
        for (; i >= 0; --i) {
            if (w[i] + 1 < nsym) {
                ++w[i];
                break;
            }
            w[i] = 0;
        }
        if (i < 0) break;
    }

    auto state_index = [&](const std::vector<Symbol>& s) -> int {
        auto it = std::lower_bound(states.begin(), states.end(), s);
        if (it != states.end() && *it == s) return static_cast<int>(it - states.begin());
        return -1;
    };

    std::vector<std::vector<int>> adj(states.size());
    for (std::size_t u = 0; u < states.size(); ++u) {
        for (Symbol a = 0; a < nsym; ++a) {
            std::vector<Symbol> word = states[u];
            word.push_back(a);
            if (!adm_word(word)) continue;
            std::vector<Symbol> v(word.begin() + 1, word.end());
            int vi = state_index(v);
            if (vi >= 0) adj[u].push_back(vi);
        }
    }

    std::vector<bool> alive(states.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<bool> has_in(states.size(), false), has_out(states.size(), false);
        for (std::size_t u = 0; u < states.size(); ++u) {
            if (!alive[u]) continue;
            for (int v : adj[u]) {
                if (!alive[v]) continue;
                has_out[u] = true;
                has_in[v] = true;
            }
        }
        for (std::size_t u = 0; u < states.size(); ++u) {
            if (alive[u] && (!has_in[u] || !has_out[u])) {
                alive[u] = false;
                changed = true;
            }
        }
    }

    VertexShift vs;
    vs.block_len = m;
    std::vector<int> remap(states.size(), -1);
    for (std::size_t u = 0; u < states.size(); ++u) {
        if (alive[u]) {
            remap[u] = static_cast<int>(vs.states.size());
            vs.states.push_back(states[u]);
        }
    }
    vs.adj.resize(vs.states.size());
    for (std::size_t u = 0; u < states.size(); ++u) {
        if (!alive[u]) continue;
        for (int v : adj[u])
            if (alive[v]) vs.adj[remap[u]].push_back(remap[v]);
    }
    return vs;
}

std::vector<std::vector<std::int64_t>> VertexShift::matrix() const {
    std::vector<std::vector<std::int64_t>> m(states.size(),
                                             std::vector<std::int64_t>(states.size(), 0));
    for (std::size_t u = 0; u < states.size(); ++u)
        for (int v : adj[u]) m[u][v] += 1;
    return m;
}

PatternSet exact_language_1d(const SftSpec& x, const FiniteSet& f, Budget budget) {
    const auto& spec = x.group();
    if (spec.rank != 1 || !spec.moduli.empty())
        throw std::invalid_argument("exact_language_1d: needs a Z-SFT with trivial torsion");
    PatternSet out;
    out.window = f;
    if (f.is_empty()) {
        out.rows.push_back({});
        return out;
    }
    VertexShift vs = build_vertex_shift(x, budget);
    if (vs.states.empty()) return out;  // empty subshift

    std::int64_t lo = f[0].free[0], hi = f[f.size() - 1].free[0];
    const int n = static_cast<int>(hi - lo + 1);
    const int sl = vs.block_len - 1;

    std::vector<int> keep;
    for (const auto& g : f) keep.push_back(static_cast<int>(g.free[0] - lo));

    std::set<std::vector<Symbol>> rows;
    std::uint64_t nodes = 0;
    auto push_row = [&](const std::vector<Symbol>& hullword) {
        std::vector<Symbol> r;
        r.reserve(keep.size());
        for (int k : keep) r.push_back(hullword[k]);
        rows.insert(std::move(r));
    };

    if (n <= sl) {
        for (const auto& s : vs.states)
            for (int o = 0; o + n <= sl; ++o)
                push_row(std::vector<Symbol>(s.begin() + o, s.begin() + o + n));
    } else {
        const int steps = n - sl;
        struct Frame {
            int state;
            int next;
        };
        for (std::size_t start = 0; start < vs.states.size(); ++start) {
            std::vector<Symbol> word = vs.states[start];
            std::vector<Frame> stack{{static_cast<int>(start), 0}};
            while (!stack.empty()) {
                if (++nodes > budget.max_nodes)
                    throw BudgetExceeded("exact_language_1d: path budget exceeded");
                auto& top = stack.back();
                if (static_cast<int>(stack.size()) - 1 == steps) {
                    push_row(word);
                    word.resize(word.size() - 1);
                    stack.pop_back();
                    continue;
                }
                if (top.next >= static_cast<int>(vs.adj[top.state].size())) {
                    if (stack.size() > 1) word.resize(word.size() - 1);
                    stack.pop_back();
                    continue;
                }
                int v = vs.adj[top.state][top.next++];
                word.push_back(vs.states[v][sl - 1]);
                stack.push_back({v, 0});
            }
        }
    }
    out.rows.assign(rows.begin(), rows.end());
    return out;
}

namespace {

// A symbol passes the window-level safety check when substituting it into any
// position of any forbidden pattern never yields a pattern that still carries
// a forbidden occurrence. Such a symbol occurs in no forbidden pattern, so
// safe-filling extends locally admissible patterns to points: local = global.
bool window_safe(const SftSpec& x, Symbol a) {
    for (const auto& f : x.forbidden()) {
        for (std::size_t u = 0; u < f.support.size(); ++u) {
            Pattern g = f;
            g.symbols[u] = a;
            if (!is_locally_admissible(x, g)) return false;
        }
    }
    return true;
}

}  // namespace

Exactness language_exactness(const SftSpec& x) {
    if (x.group().rank == 1 && x.group().moduli.empty()) return Exactness::Exact;
    for (Symbol a = 0; a < static_cast<Symbol>(x.alphabet().size()); ++a)
        if (window_safe(x, a)) return Exactness::Exact;
    return Exactness::LocalUpper;
}

PatternSet language(const SftSpec& x, const FiniteSet& f, Budget budget) {
    if (x.group().rank == 1 && x.group().moduli.empty()) return exact_language_1d(x, f, budget);
    return local_language(x, f, budget);
}

SftSpec forbid_pattern(const SftSpec& x, const Pattern& w) {
    if (w.support.is_empty()) throw std::invalid_argument("forbid_pattern: empty support");
    auto forb = x.forbidden();
    forb.push_back(w);
    return SftSpec::make(x.group(), x.alphabet(), std::move(forb));
}

Pattern apply_block_code(const GroupSpec& spec, const SlidingBlockCode& code, const Pattern& p,
                         const FiniteSet& e) {
    std::vector<Symbol> out;
    out.reserve(e.size());
    for (const auto& v : e) {
        std::vector<Symbol> key;
        key.reserve(code.window.size());
        for (const auto& w : code.window) {
            auto s = p.find(add(spec, v, w));
            if (!s) throw std::invalid_argument("apply_block_code: support too small at " +
                                                to_string(add(spec, v, w)));
            key.push_back(*s);
        }
        auto it = code.table.find(key);
        if (it == code.table.end())
            throw std::invalid_argument("apply_block_code: table missing entry");
        out.push_back(it->second);
    }
    return Pattern{e, std::move(out)};
}

}  // namespace subshift
