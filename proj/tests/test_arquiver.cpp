#include "doctest.h"

#include "flk/arquiver.hpp"
#include "flk/errors.hpp"
#include "oracles/mesh_oracle.hpp"

using namespace flk::arquiver;

TEST_CASE("constant seed gives dim(n, m) = m") {
    const auto model = mesh_propagate(std::vector<long>(12, 1), -5, std::nullopt);
    CHECK(model.height == 12);
    for (const auto& [c, d] : model.dims) CHECK(d == c.second);
    // Row m is defined on n_lo .. n_hi - m + 1.
    CHECK(model.dims.size() == static_cast<std::size_t>(12 * 13 / 2));
    CHECK(check_bounds(model).ok());
}

TEST_CASE("mesh propagation equals windowed seed sums") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto seed = random_seed(rng, 15, 6);
        for (bool with_region : {false, true}) {
            std::optional<Region> region;
            if (with_region) region = Region{3, 4};
            const auto model = mesh_propagate(seed, -2, region);
            for (const auto& [c, d] : model.dims) CHECK(oracle::mesh_sum(seed, -2, c.first, c.second) == d);
            if (!with_region) CHECK(model.dims.size() == static_cast<std::size_t>(15 * 16 / 2));
        }
    }
}

TEST_CASE("no cell is computed through a projective mesh") {
    const auto model = mesh_propagate(std::vector<long>(20, 2), 0, Region{8, 3});
    for (const auto& [c, d] : model.dims)
        if (c.second >= 2) CHECK(mesh_is_free(model, {c.first, c.second - 1}));
    CHECK(!mesh_is_free(model, {8, 1}));
    CHECK(mesh_is_free(model, {0, 1}));
}

TEST_CASE("flags and bounds") {
    std::mt19937_64 rng(5);
    auto model = mesh_propagate(random_seed(rng, 30, 5), -10, Region{0, 6});
    propagate_flags(model);
    CHECK(!model.down_flags.empty());
    CHECK(!model.up_flags.empty());
    for (const auto& [c, f] : model.down_flags) CHECK(f == Flag::Epi);
    for (const auto& [c, f] : model.up_flags) CHECK(f == Flag::Mono);
    const auto before = model.down_flags.size() + model.up_flags.size();
    propagate_flags(model);
    CHECK(model.down_flags.size() + model.up_flags.size() == before);
    CHECK(check_bounds(model).ok());
    // Epi flags fill the left cone, mono flags the right one.
    CHECK(model.down_flags.count({-10, 2}));
    CHECK(model.down_flags.count({-1, 2}));
    CHECK(!model.down_flags.count({0, 2}));
    CHECK(model.up_flags.count({6, 1}));
    CHECK(!model.up_flags.count({5, 1}));
}

TEST_CASE("corrupted fields are detected") {
    auto model = mesh_propagate(std::vector<long>(10, 1), 0, std::nullopt);
    model.dims[{2, 3}] += 1;
    const auto rep = check_bounds(model);
    CHECK(!rep.ok());
    bool mesh = false;
    for (const auto& v : rep.violations) mesh = mesh || v.kind == "mesh";
    CHECK(mesh);

    ComponentModel bad;
    bad.n_lo = 0;
    bad.n_hi = 3;
    bad.height = 3;
    bad.region = Region{5, 0};
    bad.dims = {{{0, 1}, 5}, {{1, 1}, 5}, {{0, 2}, 1}};
    CHECK_THROWS_AS(propagate_flags(bad), flk::FlagContradiction);

    CHECK_THROWS_AS(mesh_propagate({1, 0, 1}, 0, std::nullopt), flk::NonPositiveDimension);
    CHECK_THROWS_AS(mesh_propagate({}, 0, std::nullopt), flk::InvalidArgument);
}

TEST_CASE("regional lower bound violations are reported") {
    ComponentModel m;
    m.n_lo = -5;
    m.n_hi = 5;
    m.height = 10;
    m.region = Region{0, 2};
    m.dims = {{{-3, 2}, 1}};  // blue bound min{4, 2} = 2
    const auto rep = check_bounds(m);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == "blue");
    CHECK(rep.violations[0].bound == 2);
    m.dims = {{{4, 3}, 2}};  // green bound min{5, 3} = 3
    CHECK(check_bounds(m).violations.at(0).kind == "green");
    m.dims = {{{-2, 8}, 4}};  // magenta bound 8 - 3 = 5
    CHECK(check_bounds(m).violations.at(0).kind == "magenta");
}

TEST_CASE("Theta(d) and tau orbits") {
    const auto model = mesh_propagate(std::vector<long>(10, 1), 0, Region{20, 2});
    const auto th = theta_d(model, 3);
    CHECK(th.band == 5);
    CHECK(th.band_ok);
    for (const auto& c : th.cells) CHECK(c.second <= 3);
    CHECK(tau_orbit({4, 2}, 3) == std::vector<Cell>{{3, 2}, {2, 2}, {1, 2}});
    CHECK(orbit_in_theta(model, {4, 2}, 2).size() == 9);
    CHECK(orbit_in_theta(model, {4, 3}, 2).empty());
    CHECK_THROWS_AS(tau_orbit({0, 1}, -1), flk::InvalidArgument);
    const auto j = to_json(model);
    CHECK(j["field"].size() == model.dims.size());
}
