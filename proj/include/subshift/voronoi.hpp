#pragma once

#include "subshift/clopen.hpp"
#include "subshift/group.hpp"

#include <optional>

namespace subshift {

struct Tile {
    GroupElement center;
    FiniteSet cells;
};

/// Pairwise-disjoint finite tiles; pointed (every tile carries its center).
struct PartialTiling {
    std::vector<Tile> tiles;

    FiniteSet covered(const GroupSpec& spec) const;
};

struct VoronoiInput {
    FiniteSet centers;                // base centers
    std::optional<Subgroup> period;   // when set: full center set = centers + period
    std::int64_t radius2 = 0;         // squared truncation radius
};

/// Disjointified R-truncated Voronoi cells of the base centers, ties broken
/// by the canonical order on gamma - c.
PartialTiling disjointified_voronoi(const GroupSpec& spec, const VoronoiInput& input);

/// Non-disjointified truncated cells (for the union identity diagnostics).
PartialTiling truncated_voronoi(const GroupSpec& spec, const VoronoiInput& input);

/// Translates of base tiles by period elements whose cells meet the region.
PartialTiling materialize_periodic(const GroupSpec& spec, const PartialTiling& base,
                                   const Subgroup& period, const FiniteSet& region);

struct TileDiagnostics {
    GroupElement center;
    std::size_t tile_size = 0;
    std::size_t k_boundary_size = 0;
    std::size_t exterior_boundary_size = 0;
    bool invariant_ok = false;
    bool exterior_ok = false;
};

struct TilingDiagnostics {
    std::vector<TileDiagnostics> per_tile;
    bool all_invariant = true;
    bool all_exterior = true;
    bool pairwise_disjoint = true;
    bool coverage_ok = true;           // centers + B_R contained in the union
    bool convexity_applicable = false; // centers ({0} x G)-separated
    bool all_convex = true;
};

/// Per-tile (K,eps)-invariance and (W,eps1)-small exterior boundary, plus the
/// coverage and convexity postconditions when a Voronoi input is supplied.
TilingDiagnostics tiling_diagnostics(const GroupSpec& spec, const PartialTiling& tiling,
                                     const FiniteSet& k, const FiniteSet& w, Rational eps,
                                     Rational eps1,
                                     const std::optional<VoronoiInput>& voronoi_of = std::nullopt);

/// Lattice-convexity: the tile equals (integer hull of its free parts) x G.
bool tile_is_convex(const GroupSpec& spec, const FiniteSet& tile);

/// Periodic configuration given by a finite-index subgroup and a fundamental
/// domain assignment.
struct PeriodicConfig {
    Subgroup period;
    FiniteSet domain;
    std::vector<Symbol> values;

    Symbol at(const GroupSpec& spec, const GroupElement& g) const;
    Pattern window_pattern(const GroupSpec& spec, const FiniteSet& window) const;
};

struct PipelineResult {
    Pattern alpha_on_view;       // indicator of the marker set, on the view window
    PartialTiling tiling_on_view;
    FiniteSet p_used;
    std::int64_t radius2_used = 0;
    bool property_uncovered_in_calf = false;  // uncovered sites carry calF-patterns
    bool property_centers_deep = false;       // v + K inside the center's tile
    bool property_exterior_small = false;     // (W, eps1)-small exterior boundary
    TilingDiagnostics diagnostics;
};

/// Marker clopen set -> center indicator -> disjointified Voronoi tiling, with
/// the radius selected by a doubling search against the diagnostics.
PipelineResult marker_tiling_pipeline(const SftSpec& x, const FiniteSet& k, Rational eps,
                                      const FiniteSet& w, Rational eps1, const PatternSet& calf,
                                      const PeriodicConfig& point, const FiniteSet& view_window,
                                      Budget budget = {});

}  // namespace subshift
