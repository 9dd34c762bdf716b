#pragma once

// Windowed model of a stable Auslander-Reiten component of shape Z[A_inf].
// Vertices are (n, m) with m >= 1 and tau(n, m) = (n - 1, m). Arrows are
// "up" (n, m) -> (n, m + 1) and "down" (n, m) -> (n + 1, m - 1); the mesh
// starting at (n, m) is (n, m) -> {(n, m + 1), (n + 1, m - 1)} -> (n + 1, m).

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace flk::arquiver {

using Cell = std::pair<int, int>;  ///< (n, m)

/// Projective meshes are confined to {(n, m) : n + m <= a + b, n >= a}.
struct Region {
    int a;
    int b;
    bool contains(const Cell& c) const { return c.first >= a && c.first + c.second <= a + b; }
};

enum class Flag { Epi, Mono };

struct ComponentModel {
    int n_lo = 0, n_hi = 0;  ///< inclusive window
    int height = 1;          ///< rows 1..height
    std::optional<Region> region;
    std::map<Cell, long> dims;  ///< defined cells only
    /// Keyed by the source of the arrow.
    std::map<Cell, Flag> down_flags;
    std::map<Cell, Flag> up_flags;

    std::optional<long> dim(const Cell& c) const;
    bool in_window(const Cell& c) const { return c.first >= n_lo && c.first <= n_hi && c.second >= 1 && c.second <= height; }
};

/// Whether the mesh starting at (n, m) avoids the projective region.
bool mesh_is_free(const ComponentModel& model, const Cell& start);

/// Seeds row 1 with seed_row (seed_row[k] at n = n_lo + k) and fills rows
/// 2..height by dim(n, m+1) = dim(n, m) + dim(n+1, m) - dim(n+1, m-1) with
/// dim(., 0) = 0, wherever the mesh at (n, m) is free and its cells known.
/// height defaults to the window width. Throws NonPositiveDimension.
ComponentModel mesh_propagate(const std::vector<long>& seed_row, int n_lo, std::optional<Region> region,
                              std::optional<int> height = std::nullopt);

/// Seeds epi on (n, 2) -> (n+1, 1) for n < a and mono on (n, 1) -> (n, 2) for
/// n + 1 > a + b, then closes under: epi (n, m) -> (n+1, m-1) forces epi
/// (n, m+1) -> (n+1, m), and mono (n+1, m-1) -> (n+1, m) forces mono
/// (n, m) -> (n, m+1), across meshes that are not projective (a projective
/// mesh has both ends in the region). Idempotent; a no-op without a
/// region. Throws FlagContradiction when a forced flag meets the opposite
/// flag or a dimension change of the wrong sign.
void propagate_flags(ComponentModel& model);

struct Violation {
    Cell cell;
    std::string kind;  ///< "blue", "green", "magenta", "mesh", "epi", "mono"
    long bound;        ///< required value (lower bound, or the mesh value)
    long actual;
};

struct BoundsReport {
    std::vector<Violation> violations;
    std::size_t cells_checked = 0;
    bool ok() const { return violations.empty(); }
};

/// Checks, on defined cells: the regional lower bounds min{a-n+1, m} (n < a,
/// n+m <= a+b), min{n+m-(a+b), m} (n >= a, n+m > a+b), m-(b+1) (n < a,
/// n+m > a+b); the mesh identity on free meshes; strictness of flagged arrows.
BoundsReport check_bounds(const ComponentModel& model);

struct ThetaResult {
    std::vector<Cell> cells;  ///< defined cells with dim <= d, sorted
    std::optional<int> band;  ///< b + d when a region is set
    bool band_ok = true;      ///< every cell has m <= band
};
ThetaResult theta_d(const ComponentModel& model, long d);

/// [(n-1, m), ..., (n-k, m)].
std::vector<Cell> tau_orbit(const Cell& vertex, int k);
/// Window cells of the tau-orbit of vertex lying in Theta(d).
std::vector<Cell> orbit_in_theta(const ComponentModel& model, const Cell& vertex, long d);

/// Positive seed row of the given width with entries in [1, max_value].
std::vector<long> random_seed(std::mt19937_64& rng, int width, long max_value = 5);

nlohmann::json to_json(const ComponentModel& model);
nlohmann::json to_json(const BoundsReport& report);

}  // namespace flk::arquiver
