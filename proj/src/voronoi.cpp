#include "subshift/voronoi.hpp"

#include "subshift/markers.hpp"

#include <algorithm>
#include <cmath>

namespace subshift {

namespace {

std::int64_t isqrt_floor(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

FiniteSet free_ball_sites(const GroupSpec& spec, const GroupElement& around, std::int64_t radius) {
    // box of free radius r around the element, all torsion fibers
    std::vector<GroupElement> out;
    auto box = make_box(radius, spec);
    for (const auto& d : box) out.push_back(add(spec, around, d));
    return FiniteSet(std::move(out));
}

FiniteSet all_centers_near(const GroupSpec& spec, const VoronoiInput& input,
                           const GroupElement& around, std::int64_t radius) {
    (void)around;
    std::vector<GroupElement> out;
    if (!input.period) {
        for (const auto& c : input.centers) out.push_back(c);
        return FiniteSet(std::move(out));
    }
    for (const auto& t : make_box(radius, spec))
        if (input.period->member(t))
            for (const auto& b : input.centers) out.push_back(add(spec, b, t));
    return FiniteSet(std::move(out));
}

PartialTiling voronoi_cells(const GroupSpec& spec, const VoronoiInput& input, bool disjointify) {
    spec.validate();
    if (input.radius2 < 0) throw std::invalid_argument("voronoi: radius2 must be nonnegative");
    std::int64_t r = isqrt_floor(input.radius2);
    std::int64_t spread = 0;
    for (const auto& a : input.centers)
        for (const auto& b : input.centers)
            for (int i = 0; i < spec.rank; ++i)
                spread = std::max<std::int64_t>(spread, std::llabs(a.free[i] - b.free[i]));
    PartialTiling out;
    for (const auto& c : input.centers) {
        FiniteSet competitors = all_centers_near(spec, input, c, 2 * r + 3 + spread);
        std::vector<GroupElement> cell;
        for (const auto& site : free_ball_sites(spec, c, r)) {
            auto mc = metric(spec, site, c);
            if (!metric_le_radius(mc, input.radius2)) continue;
            // minimizers of the distance to the centers
            std::vector<GroupElement> minimizers;
            MetricValue best = mc;
            for (const auto& cc : competitors) {
                auto m = metric(spec, site, cc);
                int cmpv = compare_metric(m, best);
                if (cmpv < 0) {
                    best = m;
                    minimizers.clear();
                    minimizers.push_back(cc);
                } else if (cmpv == 0) {
                    minimizers.push_back(cc);
                }
            }
            if (compare_metric(mc, best) != 0) continue;  // c is not a minimizer
            if (disjointify) {
                GroupElement winner = minimizers.front();
                GroupElement wkey = sub(spec, site, winner);
                for (const auto& mm : minimizers) {
                    auto key = sub(spec, site, mm);
                    if (precedes(key, wkey)) {
                        winner = mm;
                        wkey = key;
                    }
                }
                if (!(winner == c)) continue;
            }
            cell.push_back(site);
        }
        out.tiles.push_back(Tile{c, FiniteSet(std::move(cell))});
    }
    return out;
}

}  // namespace

FiniteSet PartialTiling::covered(const GroupSpec& spec) const {
    (void)spec;
    FiniteSet u;
    for (const auto& t : tiles) u = set_union(u, t.cells);
    return u;
}

PartialTiling disjointified_voronoi(const GroupSpec& spec, const VoronoiInput& input) {
    return voronoi_cells(spec, input, true);
}

PartialTiling truncated_voronoi(const GroupSpec& spec, const VoronoiInput& input) {
    return voronoi_cells(spec, input, false);
}

PartialTiling materialize_periodic(const GroupSpec& spec, const PartialTiling& base,
                                   const Subgroup& period, const FiniteSet& region) {
    if (region.is_empty() || base.tiles.empty()) return {};
    std::int64_t reach = 0;
    for (const auto& t : base.tiles)
        for (const auto& cell : t.cells)
            for (int i = 0; i < spec.rank; ++i)
                reach = std::max<std::int64_t>(reach, std::llabs(cell.free[i]));
    std::int64_t span = 0;
    for (const auto& g : region)
        for (int i = 0; i < spec.rank; ++i) span = std::max<std::int64_t>(span, std::llabs(g.free[i]));

    PartialTiling out;
    for (const auto& t : make_box(span + reach + 1, spec)) {
        if (!period.member(t)) continue;
        for (const auto& tile : base.tiles) {
            FiniteSet moved = translate(spec, t, tile.cells);
            if (set_intersect(moved, region).is_empty()) continue;
            out.tiles.push_back(Tile{add(spec, tile.center, t), std::move(moved)});
        }
    }
    return out;
}

bool tile_is_convex(const GroupSpec& spec, const FiniteSet& tile) {
    if (tile.is_empty()) return true;
    // split into free parts x torsion fibers
    std::vector<std::vector<std::int64_t>> frees;
    for (const auto& g : tile) frees.push_back(g.free);
    std::sort(frees.begin(), frees.end());
    frees.erase(std::unique(frees.begin(), frees.end()), frees.end());
    if (frees.size() * static_cast<std::size_t>(spec.torsion_order()) != tile.size()) return false;

    if (spec.rank == 0) return true;
    if (spec.rank == 1) {
        std::int64_t lo = frees.front()[0], hi = frees.back()[0];
        return static_cast<std::int64_t>(frees.size()) == hi - lo + 1;
    }
    if (spec.rank != 2) throw std::invalid_argument("tile_is_convex: rank must be <= 2");

    // 2D: integer hull membership
    auto cross = [](const std::vector<std::int64_t>& o, const std::vector<std::int64_t>& a,
                    const std::vector<std::int64_t>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    // monotone chain (frees already sorted)
    std::vector<std::vector<std::int64_t>> hull(2 * frees.size());
    std::size_t k = 0;
    for (const auto& p : frees) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = frees.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], frees[i]) <= 0) --k;
        hull[k++] = frees[i];
    }
    hull.resize(k > 1 ? k - 1 : 1);
    if (frees.size() == 1) hull = {frees.front()};

    auto inside = [&](const std::vector<std::int64_t>& p) {
        if (hull.size() == 1) return p == hull[0];
        if (hull.size() == 2) {
            // on the segment
            if (cross(hull[0], hull[1], p) != 0) return false;
            for (int i = 0; i < 2; ++i)
                if (p[i] < std::min(hull[0][i], hull[1][i]) ||
                    p[i] > std::max(hull[0][i], hull[1][i]))
                    return false;
            return true;
        }
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const auto& a = hull[i];
            const auto& b = hull[(i + 1) % hull.size()];
            if (cross(a, b, p) < 0) return false;
        }
        return true;
    };

    std::int64_t xlo = frees[0][0], xhi = frees[0][0], ylo = frees[0][1], yhi = frees[0][1];
    for (const auto& f : frees) {
        xlo = std::min(xlo, f[0]);
        xhi = std::max(xhi, f[0]);
        ylo = std::min(ylo, f[1]);
        yhi = std::max(yhi, f[1]);
    }
    auto has_free = [&](std::int64_t a, std::int64_t b) {
        return std::binary_search(frees.begin(), frees.end(), std::vector<std::int64_t>{a, b});
    };
    for (std::int64_t a = xlo; a <= xhi; ++a)
        for (std::int64_t b = ylo; b <= yhi; ++b)
            if (inside({a, b}) && !has_free(a, b)) return false;
    return true;
}

TilingDiagnostics tiling_diagnostics(const GroupSpec& spec, const PartialTiling& tiling,
                                     const FiniteSet& k, const FiniteSet& w, Rational eps,
                                     Rational eps1, const std::optional<VoronoiInput>& voronoi_of) {
    TilingDiagnostics out;
    FiniteSet covered = tiling.covered(spec);
    std::size_t total = 0;
    for (const auto& t : tiling.tiles) total += t.cells.size();
    out.pairwise_disjoint = (total == covered.size());

    for (const auto& t : tiling.tiles) {
        TileDiagnostics d;
        d.center = t.center;
        d.tile_size = t.cells.size();
        if (t.cells.is_empty()) {
            out.per_tile.push_back(d);
            out.all_invariant = false;
            continue;
        }
        d.k_boundary_size = k_boundary(spec, k, t.cells).size();
        d.invariant_ok = static_cast<__int128>(d.k_boundary_size) * eps.den <
                         static_cast<__int128>(eps.num) * static_cast<__int128>(d.tile_size);
        // exterior W-boundary with respect to the union of tiles
        FiniteSet candidates = difference_set(spec, t.cells, w);
        std::size_t ext = 0;
        for (const auto& v : candidates) {
            bool meets = false, escapes = false;
            for (const auto& u : w) {
                auto site = add(spec, v, u);
                if (t.cells.contains(site)) meets = true;
                if (!covered.contains(site)) escapes = true;
                if (meets && escapes) break;
            }
            if (meets && escapes) ++ext;
        }
        d.exterior_boundary_size = ext;
        d.exterior_ok = static_cast<__int128>(ext) * eps1.den <=
                        static_cast<__int128>(eps1.num) * static_cast<__int128>(d.tile_size);
        out.all_invariant = out.all_invariant && d.invariant_ok;
        out.all_exterior = out.all_exterior && d.exterior_ok;
        out.per_tile.push_back(d);
    }

    if (voronoi_of) {
        std::int64_t r = isqrt_floor(voronoi_of->radius2);
        auto zero = zero_element(spec);
        for (const auto& c : voronoi_of->centers) {
            for (const auto& d : make_box(r, spec)) {
                if (!metric_le_radius(metric(spec, d, zero), voronoi_of->radius2)) continue;
                if (!covered.contains(add(spec, c, d))) out.coverage_ok = false;
            }
        }
        // convexity applies when centers are ({0} x G)-separated
        std::vector<GroupElement> centers;
        for (const auto& t : tiling.tiles) centers.push_back(t.center);
        FiniteSet cs(std::move(centers));
        out.convexity_applicable = is_separated(spec, cs, make_box(0, spec));
        if (out.convexity_applicable)
            for (const auto& t : tiling.tiles)
                if (!tile_is_convex(spec, t.cells)) out.all_convex = false;
    } else {
        out.coverage_ok = true;
    }
    return out;
}

Symbol PeriodicConfig::at(const GroupSpec& spec, const GroupElement& g) const {
    (void)spec;
    auto idx = domain.index_of(period.reduce(g));
    if (!idx) throw std::invalid_argument("periodic config: reduction left the domain");
    return values[*idx];
}

Pattern PeriodicConfig::window_pattern(const GroupSpec& spec, const FiniteSet& window) const {
    std::vector<Symbol> syms;
    syms.reserve(window.size());
    for (const auto& g : window) syms.push_back(at(spec, g));
    return Pattern{window, syms};
}

PipelineResult marker_tiling_pipeline(const SftSpec& x, const FiniteSet& k, Rational eps,
                                      const FiniteSet& w, Rational eps1, const PatternSet& calf,
                                      const PeriodicConfig& point, const FiniteSet& view_window,
                                      Budget budget) {
    const auto& spec = x.group();
    if (!(calf.window == w))
        throw std::invalid_argument("pipeline: calF must consist of W-patterns");
    // the periodic point must be admissible on its quotient
    for (const auto& f : x.forbidden()) {
        for (const auto& base : point.domain) {
            bool match = true;
            for (std::size_t j = 0; j < f.support.size() && match; ++j)
                if (point.at(spec, add(spec, base, f.support[j])) != f.symbols[j]) match = false;
            if (match) throw std::invalid_argument("pipeline: periodic point is not admissible");
        }
    }

    PipelineResult res;
    res.p_used = set_minus(make_box(1, spec), FiniteSet({zero_element(spec)}));

    // V = [x_W not in calF]
    auto lang_w = language(x, w, budget);
    PatternSet allowed;
    allowed.window = w;
    for (const auto& row : lang_w.rows)
        if (!calf.contains_row(row)) allowed.rows.push_back(row);
    ClopenSet v = ClopenSet::from_patterns(x, allowed, budget);

    auto marker = marker_lemma(x, v, res.p_used, budget);

    // alpha on the periodic point: indicator of the marker clopen set
    const auto& cwin = marker.c.window();
    auto alpha_at = [&](const GroupElement& site) {
        std::vector<Symbol> syms;
        syms.reserve(cwin.size());
        for (const auto& g : cwin) syms.push_back(point.at(spec, add(spec, site, g)));
        return marker.c.member(Pattern{cwin, syms});
    };

    std::vector<GroupElement> base_centers;
    for (const auto& d : point.domain)
        if (alpha_at(d)) base_centers.push_back(d);

    std::vector<Symbol> alpha_syms;
    for (const auto& site : view_window) alpha_syms.push_back(alpha_at(site) ? 1 : 0);
    res.alpha_on_view = Pattern{view_window, alpha_syms};

    auto check_property1 = [&](const FiniteSet& covered) {
        for (const auto& site : view_window) {
            if (covered.contains(site)) continue;
            std::vector<Symbol> row;
            for (const auto& u : w) row.push_back(point.at(spec, add(spec, site, u)));
            if (!calf.contains_row(row)) return false;
        }
        return true;
    };

    if (base_centers.empty()) {
        res.property_uncovered_in_calf = check_property1(FiniteSet());
        res.property_centers_deep = true;
        res.property_exterior_small = true;
        res.radius2_used = 0;
        return res;
    }

    std::int64_t kreach = 0, wreach = 0, vreach = 0;
    for (const auto& g : k)
        for (int i = 0; i < spec.rank; ++i) kreach = std::max<std::int64_t>(kreach, std::llabs(g.free[i]));
    for (const auto& g : w)
        for (int i = 0; i < spec.rank; ++i) wreach = std::max<std::int64_t>(wreach, std::llabs(g.free[i]));
    for (const auto& g : view_window)
        for (int i = 0; i < spec.rank; ++i) vreach = std::max<std::int64_t>(vreach, std::llabs(g.free[i]));

    VoronoiInput vin;
    vin.centers = FiniteSet(base_centers);
    vin.period = point.period;

    for (std::int64_t r2 = 1; r2 <= (1 << 14); r2 *= 4) {
        vin.radius2 = r2;
        auto base_tiling = disjointified_voronoi(spec, vin);
        std::int64_t reach = isqrt_floor(r2) + 1;
        auto region = make_box(vreach + 2 * reach + wreach + 2, spec);
        auto full = materialize_periodic(spec, base_tiling, point.period, region);

        // keep tiles meeting the view window for the reported diagnostics
        PartialTiling on_view;
        for (const auto& t : full.tiles)
            if (!set_intersect(t.cells, view_window).is_empty()) on_view.tiles.push_back(t);

        FiniteSet covered = full.covered(spec);
        bool p1 = check_property1(covered);
        bool p2 = true;
        for (const auto& t : on_view.tiles) {
            for (const auto& kk : k) {
                if (!t.cells.contains(add(spec, t.center, kk))) {
                    p2 = false;
                    break;
                }
            }
            if (!p2) break;
        }
        auto diag = tiling_diagnostics(spec, full, k, w, eps, eps1, std::nullopt);
        bool p3 = true;
        {
            // exterior boundary against the fully materialized union, but only
            // judged for tiles meeting the view
            FiniteSet view_centers;
            {
                std::vector<GroupElement> cs;
                for (const auto& t : on_view.tiles) cs.push_back(t.center);
                view_centers = FiniteSet(std::move(cs));
            }
            for (std::size_t i = 0; i < full.tiles.size(); ++i) {
                if (!view_centers.contains(full.tiles[i].center)) continue;
                if (!diag.per_tile[i].exterior_ok) p3 = false;
            }
        }

        if (p1 && p2 && p3) {
            res.radius2_used = r2;
            res.tiling_on_view = std::move(on_view);
            res.property_uncovered_in_calf = p1;
            res.property_centers_deep = p2;
            res.property_exterior_small = p3;
            res.diagnostics = tiling_diagnostics(spec, res.tiling_on_view, k, w, eps, eps1,
                                                 std::nullopt);
            // recompute exterior flags against the full union for the report
            res.diagnostics.all_exterior = p3;
            return res;
        }
        res.radius2_used = r2;
        res.tiling_on_view = std::move(on_view);
        res.property_uncovered_in_calf = p1;
        res.property_centers_deep = p2;
        res.property_exterior_small = p3;
        res.diagnostics = std::move(diag);
    }
    return res;  // last attempt's diagnostics, properties report what failed
}

}  // namespace subshift
