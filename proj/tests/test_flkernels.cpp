#include "doctest.h"

#include "flk/errors.hpp"
#include "flk/flkernels.hpp"
#include "oracles/root_oracle.hpp"

using namespace flk::flkernels;
namespace rs = flk::rootsys;

namespace {

KernelParams params(const std::string& type, int p, int l, int r = 0) {
    return KernelParams{rs::CartanType::parse(type), p, l, r};
}

}  // namespace

TEST_CASE("hypothesis tables report the violated statement") {
    auto v = validate_params(params("G2", 0, 9), Theorem::QuantumWild);
    CHECK(!v.ok);
    CHECK(v.violated.find("G") != std::string::npos);
    v = validate_params(params("B2", 0, 3), Theorem::QuantumWild);
    CHECK(!v.ok);
    CHECK(v.violated.find("B/C") != std::string::npos);
    CHECK(validate_params(params("A2", 7, 5), Theorem::QuantumWild).ok);
    CHECK(!validate_params(params("A1", 0, 4), Theorem::QuantumWild).ok);
    CHECK(!validate_params(params("A1", 0, 5, 1), Theorem::B1Quiver).ok);
    CHECK(validate_params(params("A1", 3, 5, 1), Theorem::B1Quiver).ok);
    CHECK(!validate_params(params("A2", 3, 5, 1), Theorem::B1Quiver).ok);
    CHECK(!validate_params(params("A1", 0, 5, 1), Theorem::ExtLemma).ok);
    for (auto t : {Theorem::QuantumWild, Theorem::BorelWild, Theorem::CxH0, Theorem::B1Quiver, Theorem::ExtLemma}) {
        CHECK(parse_theorem(to_string(t)) == t);
        CHECK(!hypotheses(t).empty());
    }
    CHECK_THROWS_AS(parse_theorem("nonsense"), flk::InvalidArgument);
}

TEST_CASE("small quantum group blocks") {
    const auto a1 = params("A1", 0, 5);
    for (int lam = 0; lam < 5; ++lam) {
        const auto v = classify_small_quantum_block(a1, {lam});
        CHECK(v.kind == (lam == 4 ? VerdictKind::Finite : VerdictKind::Tame));
    }
    const auto a2 = params("A2", 0, 5);
    const rs::RootSystem sys(a2.type);
    for (const auto& lam : rs::restricted_weights(sys, 5)) {
        const auto v = classify_small_quantum_block(a2, lam);
        CHECK(v.kind == (lam == rs::steinberg_weight(sys, 5) ? VerdictKind::Finite : VerdictKind::Wild));
        CHECK(!v.hypotheses_used.empty());
    }
    CHECK(classify_small_quantum_block(params("G2", 0, 9), {0, 0}).kind == VerdictKind::OutOfScope);
    CHECK_THROWS_AS(classify_small_quantum_block(params("A1", 3, 5, 1), {0}), flk::InvalidArgument);
    CHECK_THROWS_AS(classify_small_quantum_block(a1, {5}), flk::InvalidArgument);
    const auto j = to_json(classify_small_quantum_block(a1, {4}));
    CHECK(j["verdict"] == "Finite");
}

TEST_CASE("Borel and nilpotent parts") {
    CHECK(classify_borel(params("A1", 0, 5)).kind == VerdictKind::Finite);
    CHECK(classify_borel(params("A2", 0, 5)).kind == VerdictKind::Wild);
    CHECK(classify_borel(params("A1", 3, 5, 1)).kind == VerdictKind::Wild);
    CHECK(classify_nilpotent(params("A1", 0, 7)).kind == VerdictKind::Finite);
    CHECK(classify_nilpotent(params("B2", 0, 7)).kind == VerdictKind::Wild);
    CHECK(classify_borel(params("A1", 0, 4)).kind == VerdictKind::OutOfScope);
}

TEST_CASE("Frobenius-Lusztig kernel blocks") {
    const auto k = params("A1", 3, 5, 1);
    CHECK(classify_Gr_block(k, {{4}, rs::Weight{0}}).kind == VerdictKind::TameCandidate);
    CHECK(classify_Gr_block(k, {{4}, rs::Weight{2}}).kind == VerdictKind::TameCandidate);
    CHECK(classify_Gr_block(k, {{1}, rs::Weight{0}}).kind == VerdictKind::Wild);
    CHECK(classify_Gr_block(params("A2", 5, 7, 1), {{6, 6}, rs::Weight{0, 0}}).kind == VerdictKind::Wild);
    CHECK_THROWS_AS(classify_Gr_block(k, {{4}, rs::Weight{3}}), flk::InvalidArgument);
    CHECK_THROWS_AS(classify_Gr_block(params("A1", 0, 5), {{4}, std::nullopt}), flk::InvalidArgument);
}

TEST_CASE("complexity lower bounds equal |Phi| - |Phi_lambda|") {
    CHECK(cx_lower_bound_H0(params("B2", 0, 5), {0, 0}) == 8);
    CHECK(cx_lower_bound_H0(params("A3", 0, 3), {0, 0, 0}) == 12 - 2);
    for (const auto& t : {"A2", "B2", "G2"}) {
        const auto kp = params(t, 0, 7);
        const rs::RootSystem sys(kp.type);
        const auto g = oracle::gram(t);
        const int total = static_cast<int>(oracle::all_roots(g).size());
        for (const auto& lam : rs::restricted_weights(sys, 7))
            CHECK(cx_lower_bound_H0(kp, lam) == total - static_cast<int>(oracle::phi_lambda(g, lam, 7).size()));
        CHECK(cx_lower_bound_H0(kp, rs::steinberg_weight(sys, 7)) == 0);
        const int pos0 = static_cast<int>(oracle::positive(oracle::phi_lambda(g, rs::Weight(sys.rank(), 0), 7)).size());
        CHECK(cx_lower_bound_borel_trivial(kp) == total / 2 - pos0);
    }
}

TEST_CASE("sl2 linkage") {
    CHECK(sl2_linkage_blocks(5) == std::vector<std::vector<int>>{{0, 3}, {1, 2}, {4}});
    for (int l : {3, 5, 7, 9, 11}) {
        const auto blocks = sl2_linkage_blocks(l);
        CHECK(blocks.size() == static_cast<std::size_t>((l + 1) / 2));
        std::size_t covered = 0;
        for (const auto& b : blocks) covered += b.size();
        CHECK(covered == static_cast<std::size_t>(l));
    }
}

TEST_CASE("module labels") {
    const auto k = params("A1", 3, 5, 1);
    CHECK(simple_module_labels(k).size() == 15);
    CHECK(projective_labels(k).size() == 15);
    CHECK(simple_module_labels(params("A2", 0, 5)).size() == 25);
    CHECK(is_special_block_weight(params("A1", 0, 5), {4}));
    CHECK(is_special_block_weight(params("A1", 0, 5), {9}));
    CHECK(!is_special_block_weight(params("A1", 0, 5), {3}));
}

TEST_CASE("explicit quivers") {
    auto b1 = build_b1_quiver_sl2(5, 3, 1);
    CHECK(b1.quiver().vertex_count() == 15);
    CHECK(b1.quiver().arrow_count() == 30);
    CHECK(b1.quiver().has_vertex("4,2"));
    CHECK_THROWS_AS(build_b1_quiver_sl2(4, 3, 0), flk::InvalidArgument);
    const auto ext = sl2_ext_quiver_r1(5, 3);
    CHECK(ext.vertex_count() == 15);
    const auto adj = default_dist_adjacency(3);
    CHECK(adj[0][1] == 2);
    CHECK(adj[1][0] == 2);
    CHECK(adj[2][2] == 0);
    const flk::quiver::BoundQuiverAlgebra bqa(ext, {});
    CHECK(!flk::quiver::find_config(bqa, flk::quiver::Pattern::KroneckerPlusSource, 1).empty());
}

TEST_CASE("Steinberg weight is the only weight with Phi_lambda = Phi") {
    for (const auto& t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"})
        for (int l : {5, 7}) CHECK(steinberg_uniqueness_check(params(t, 0, l)));
}
