#include "flk/arquiver.hpp"

#include "flk/errors.hpp"

#include <algorithm>

namespace flk::arquiver {

std::optional<long> ComponentModel::dim(const Cell& c) const {
    if (c.second == 0) return 0;
    auto it = dims.find(c);
    if (it == dims.end()) return std::nullopt;
    return it->second;
}

bool mesh_is_free(const ComponentModel& model, const Cell& s) {
    if (!model.region) return true;
    const auto [n, m] = s;
    for (const Cell& c : {Cell{n, m}, Cell{n, m + 1}, Cell{n + 1, m}, Cell{n + 1, m - 1}})
        if (c.second >= 1 && model.region->contains(c)) return false;
    return true;
}

ComponentModel mesh_propagate(const std::vector<long>& seed_row, int n_lo, std::optional<Region> region,
                              std::optional<int> height) {
    if (seed_row.empty()) throw InvalidArgument("mesh_propagate: empty seed row");
    if (region && region->b < 0) throw InvalidArgument("mesh_propagate: b must be >= 0");
    ComponentModel model;
    model.n_lo = n_lo;
    model.n_hi = n_lo + static_cast<int>(seed_row.size()) - 1;
    model.height = height.value_or(static_cast<int>(seed_row.size()));
    if (model.height < 1) throw InvalidArgument("mesh_propagate: height must be >= 1");
    model.region = region;
    for (std::size_t k = 0; k < seed_row.size(); ++k) {
        const Cell c{n_lo + static_cast<int>(k), 1};
        if (seed_row[k] <= 0)
            throw NonPositiveDimension("seed dimension at n = " + std::to_string(c.first) + " is not positive");
        model.dims[c] = seed_row[k];
    }
    for (int m = 1; m < model.height; ++m) {
        for (int n = model.n_lo; n < model.n_hi; ++n) {
            if (!mesh_is_free(model, {n, m})) continue;
            const auto x = model.dim({n, m}), y = model.dim({n + 1, m}), z = model.dim({n + 1, m - 1});
            if (!x || !y || !z) continue;
            const long v = *x + *y - *z;
            if (v <= 0)
                throw NonPositiveDimension("mesh at (" + std::to_string(n) + "," + std::to_string(m) +
                                           ") gives dimension " + std::to_string(v));
            model.dims[{n, m + 1}] = v;
        }
    }
    return model;
}

namespace {

// Projective meshes have both ends inside the region.
bool mesh_not_projective(const ComponentModel& model, const Cell& s) {
    return !model.region || !model.region->contains(s) || !model.region->contains({s.first + 1, s.second});
}

void force(ComponentModel& model, std::map<Cell, Flag>& flags, const Cell& src, const Cell& dst, Flag f,
           bool& changed) {
    auto it = flags.find(src);
    if (it != flags.end()) {
        if (it->second != f)
            throw FlagContradiction("arrow from (" + std::to_string(src.first) + "," + std::to_string(src.second) +
                                    ") forced both epi and mono");
        return;
    }
    const auto ds = model.dim(src), dt = model.dim(dst);
    if (ds && dt && ((f == Flag::Epi && !(*ds > *dt)) || (f == Flag::Mono && !(*dt > *ds))))
        throw FlagContradiction("arrow from (" + std::to_string(src.first) + "," + std::to_string(src.second) +
                                ") cannot be " + (f == Flag::Epi ? "epi" : "mono") + " with dimensions " +
                                std::to_string(*ds) + " -> " + std::to_string(*dt));
    flags.emplace(src, f);
    changed = true;
}

}  // namespace

void propagate_flags(ComponentModel& model) {
    if (!model.region) return;
    const int a = model.region->a, b = model.region->b;
    bool changed = false;
    // Down arrows leave (n, m) with m >= 2 and n < n_hi; up arrows leave (n, m) with m < height.
    for (int n = model.n_lo; n < model.n_hi && n < a; ++n)
        if (model.height >= 2) force(model, model.down_flags, {n, 2}, {n + 1, 1}, Flag::Epi, changed);
    for (int n = std::max(model.n_lo, a + b); n <= model.n_hi; ++n)
        if (model.height >= 2) force(model, model.up_flags, {n, 1}, {n, 2}, Flag::Mono, changed);
    do {
        changed = false;
        for (int m = 2; m < model.height; ++m)
            for (int n = model.n_lo; n < model.n_hi; ++n) {
                auto it = model.down_flags.find({n, m});
                if (it != model.down_flags.end() && it->second == Flag::Epi && mesh_not_projective(model, {n, m}))
                    force(model, model.down_flags, {n, m + 1}, {n + 1, m}, Flag::Epi, changed);
            }
        for (int m = 2; m < model.height; ++m)
            for (int n = model.n_lo; n < model.n_hi; ++n) {
                auto it = model.up_flags.find({n + 1, m - 1});
                if (it != model.up_flags.end() && it->second == Flag::Mono && mesh_not_projective(model, {n, m}))
                    force(model, model.up_flags, {n, m}, {n, m + 1}, Flag::Mono, changed);
            }
    } while (changed);
}

BoundsReport check_bounds(const ComponentModel& model) {
    BoundsReport rep;
    for (const auto& [cell, d] : model.dims) {
        const auto [n, m] = cell;
        ++rep.cells_checked;
        if (model.region) {
            const int a = model.region->a, b = model.region->b;
            std::optional<std::pair<std::string, long>> bound;
            if (n < a && n + m <= a + b) bound = {{"blue", std::min<long>(a - n + 1, m)}};
            else if (n >= a && n + m > a + b) bound = {{"green", std::min<long>(n + m - (a + b), m)}};
            else if (n < a && n + m > a + b) bound = {{"magenta", static_cast<long>(m) - (b + 1)}};
            if (bound && d < bound->second) rep.violations.push_back({cell, bound->first, bound->second, d});
        }
        // The mesh ending above: cell = (n, m) from the mesh at (n, m - 1).
        if (m >= 2 && mesh_is_free(model, {n, m - 1})) {
            const auto x = model.dim({n, m - 1}), y = model.dim({n + 1, m - 1}), z = model.dim({n + 1, m - 2});
            if (x && y && z && *x + *y - *z != d) rep.violations.push_back({cell, "mesh", *x + *y - *z, d});
        }
    }
    for (const auto& [src, f] : model.down_flags) {
        const auto ds = model.dim(src), dt = model.dim({src.first + 1, src.second - 1});
        if (f == Flag::Epi && ds && dt && !(*ds > *dt)) rep.violations.push_back({src, "epi", *dt + 1, *ds});
        if (f == Flag::Mono && ds && dt && !(*dt > *ds)) rep.violations.push_back({src, "mono", *ds + 1, *dt});
    }
    for (const auto& [src, f] : model.up_flags) {
        const auto ds = model.dim(src), dt = model.dim({src.first, src.second + 1});
        if (f == Flag::Epi && ds && dt && !(*ds > *dt)) rep.violations.push_back({src, "epi", *dt + 1, *ds});
        if (f == Flag::Mono && ds && dt && !(*dt > *ds)) rep.violations.push_back({src, "mono", *ds + 1, *dt});
    }
    return rep;
}

ThetaResult theta_d(const ComponentModel& model, long d) {
    ThetaResult res;
    if (model.region) res.band = model.region->b + static_cast<int>(d);
    for (const auto& [cell, v] : model.dims) {
        if (v > d) continue;
        res.cells.push_back(cell);
        if (res.band && cell.second > *res.band) res.band_ok = false;
    }
    return res;
}

std::vector<Cell> tau_orbit(const Cell& vertex, int k) {
    if (k < 0) throw InvalidArgument("tau_orbit: k must be >= 0");
    std::vector<Cell> out;
    for (int j = 1; j <= k; ++j) out.push_back({vertex.first - j, vertex.second});
    return out;
}

std::vector<Cell> orbit_in_theta(const ComponentModel& model, const Cell& vertex, long d) {
    std::vector<Cell> out;
    for (int n = model.n_lo; n <= model.n_hi; ++n) {
        const auto v = model.dim({n, vertex.second});
        if (v && *v <= d) out.push_back({n, vertex.second});
    }
    return out;
}

std::vector<long> random_seed(std::mt19937_64& rng, int width, long max_value) {
    if (width < 1 || max_value < 1) throw InvalidArgument("random_seed: width and max_value must be positive");
    std::uniform_int_distribution<long> dist(1, max_value);
    std::vector<long> s(width);
    for (auto& x : s) x = dist(rng);
    return s;
}

nlohmann::json to_json(const ComponentModel& model) {
    nlohmann::json field = nlohmann::json::array();
    for (const auto& [c, d] : model.dims) field.push_back({{"n", c.first}, {"m", c.second}, {"dim", d}});
    auto flags = [](const std::map<Cell, Flag>& fl, Flag f) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [c, g] : fl)
            if (g == f) out.push_back({c.first, c.second});
        return out;
    };
    nlohmann::json j{{"window", {model.n_lo, model.n_hi}}, {"height", model.height}, {"field", field}};
    j["region"] = model.region ? nlohmann::json{{"a", model.region->a}, {"b", model.region->b}} : nlohmann::json();
    j["flags"] = {{"epi_down", flags(model.down_flags, Flag::Epi)}, {"mono_up", flags(model.up_flags, Flag::Mono)}};
    return j;
}

nlohmann::json to_json(const BoundsReport& report) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : report.violations)
        v.push_back({{"n", x.cell.first}, {"m", x.cell.second}, {"kind", x.kind}, {"bound", x.bound}, {"actual", x.actual}});
    return v;
}

}  // namespace flk::arquiver
