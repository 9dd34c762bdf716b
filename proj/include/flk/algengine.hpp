#pragma once

// Finite-dimensional algebras given by exact structure constants over
// Q(zeta_n), with the small quantum group u_zeta(sl2) as the main instance.
// All structure theory here (radical by trace form, idempotent lifting)
// relies on characteristic 0.

#include "flk/linalg.hpp"
#include "flk/qarith.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace flk::algengine {

using linalg::SparseVector;
using linalg::Subspace;
using Scalar = qarith::CyclotomicNumber;

/// F^a K^b E^c with 0 <= a, b, c < l.
struct PBWLabel {
    int a, b, c;
    friend bool operator==(const PBWLabel&, const PBWLabel&) = default;
};

class StructureConstantAlgebra {
public:
    /// Product of basis elements i and j as a coordinate vector.
    using ProductFn = std::function<SparseVector(std::size_t, std::size_t)>;

    /// generators must generate the algebra; when empty the whole basis is used.
    StructureConstantAlgebra(std::vector<std::string> labels, SparseVector unit, int conductor, ProductFn product,
                             std::vector<SparseVector> generators = {});
    /// table[i][j] = b_i b_j.
    static StructureConstantAlgebra from_table(std::vector<std::string> labels, SparseVector unit, int conductor,
                                               std::vector<std::vector<SparseVector>> table,
                                               std::vector<SparseVector> generators = {});

    std::size_t dimension() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseVector& unit() const { return unit_; }
    int conductor() const { return conductor_; }
    const std::vector<SparseVector>& generators() const { return generators_; }

    /// Memoized; safe to call concurrently.
    const SparseVector& basis_product(std::size_t i, std::size_t j) const;
    SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
    SparseVector basis_vector(std::size_t i) const;

    /// 1 b = b 1 = b for every basis element.
    bool check_unit() const;
    /// (b_i b_j) b_k = b_i (b_j b_k) on `samples` random triples, or on all
    /// triples when samples == 0.
    bool check_associativity(std::size_t samples = 200, std::uint64_t seed = 1) const;

private:
    std::vector<std::string> labels_;
    SparseVector unit_;
    int conductor_;
    ProductFn product_;
    std::vector<SparseVector> generators_;
    mutable std::unique_ptr<std::recursive_mutex> mutex_;
    mutable std::vector<std::unique_ptr<SparseVector>> cache_;
};

/// u_zeta(sl2) at a primitive l-th root of unity zeta over Q(zeta_l), with
/// KE = zeta^2 EK, KF = zeta^-2 FK, EF - FE = (K - K^-1)/(zeta - zeta^-1),
/// E^l = F^l = 0, K^l = 1. Basis F^a K^b E^c in lexicographic (a, b, c)
/// order; generators E, F, K.
StructureConstantAlgebra build_uq_sl2(int l);
std::size_t pbw_index(int l, const PBWLabel& label);
PBWLabel pbw_label(int l, std::size_t index);

/// Centralizer of the generators, i.e. the center.
Subspace center(const StructureConstantAlgebra& alg);
/// Span of all commutators xy - yx.
Subspace commutator_space(const StructureConstantAlgebra& alg);

/// tr(L_{b_k}) for every basis element.
std::vector<Scalar> regular_traces(const StructureConstantAlgebra& alg);
/// {x : tr(L_{xy}) = 0 for all y}.
Subspace jacobson_radical(const StructureConstantAlgebra& alg);

/// Pairwise orthogonal primitive central idempotents summing to 1, sorted by
/// block dimension (ties keep discovery order). Throws LiftingFailure when the
/// center does not split over the ground field.
std::vector<SparseVector> central_primitive_idempotents(const StructureConstantAlgebra& alg);
/// dim(e A) for each idempotent of central_primitive_idempotents, same order.
std::vector<std::size_t> block_dimensions(const StructureConstantAlgebra& alg);
std::vector<std::size_t> block_dimensions(const StructureConstantAlgebra& alg, const std::vector<SparseVector>& idempotents);

/// Whether some tau vanishing on [A, A] gives a nondegenerate form tau(xy).
bool is_symmetric_algebra(const StructureConstantAlgebra& alg);

struct GabrielQuiver {
    std::vector<SparseVector> vertex_idempotents;  ///< one primitive idempotent per simple
    std::vector<std::size_t> multiplicities;        ///< primitive idempotents of each class in e
    /// arrows[i][j] = dim e_j (rad / rad^2) e_i, the number of arrows i -> j.
    std::vector<std::vector<std::size_t>> arrows;
};
/// e must be a central idempotent.
GabrielQuiver gabriel_quiver_of_block(const StructureConstantAlgebra& alg, const SparseVector& e);

}  // namespace flk::algengine
