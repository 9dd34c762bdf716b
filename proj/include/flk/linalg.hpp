#pragma once

// Sparse exact linear algebra over a cyclotomic field.

#include "flk/qarith.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace flk::linalg {

using Scalar = qarith::CyclotomicNumber;

/// Sparse vector with entries sorted by index; zero entries are never stored.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    SparseVector() = default;
    static SparseVector unit(std::size_t index, const Scalar& value);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    /// Smallest index with a nonzero entry; requires !is_zero().
    std::size_t leading() const { return entries_.front().first; }
    Scalar get(std::size_t index) const;
    const Scalar* find(std::size_t index) const;

    void set(std::size_t index, const Scalar& value);
    /// this += c * other
    void axpy(const Scalar& c, const SparseVector& other);
    void scale(const Scalar& c);

    SparseVector& operator+=(const SparseVector& o) { axpy(Scalar::rational(1), o); return *this; }
    SparseVector& operator-=(const SparseVector& o) { axpy(Scalar::rational(-1), o); return *this; }
    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator*(const Scalar& c, SparseVector v) { v.scale(c); return v; }
    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

/// Subspace kept as a fully reduced row echelon basis: every row has entry 1
/// at its pivot (its leading index) and 0 at every other pivot. Consequently
/// the coordinates of a member in this basis are its entries at the pivots.
class Subspace {
public:
    Subspace() = default;

    std::size_t dim() const { return rows_.size(); }
    /// Adds v to the span; returns true iff the dimension grew.
    bool insert(const SparseVector& v);
    /// Canonical representative of v modulo the subspace (zero at all pivots).
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

    std::vector<std::size_t> pivots() const;
    /// Basis rows in pivot order.
    std::vector<SparseVector> basis() const;
    const std::map<std::size_t, SparseVector>& rows() const { return rows_; }
    /// Coordinates of a member of the subspace in the basis().
    std::vector<Scalar> coordinates(const SparseVector& v) const;

private:
    std::map<std::size_t, SparseVector> rows_;
};

/// Echelon form that remembers how each row was built from the inserted
/// vectors, so that linear dependencies can be reported.
class TrackedEchelon {
public:
    /// Inserts v as input number size(). If v is dependent on the earlier
    /// inputs, returns c with v = sum_k c[k] * input_k and does not store v.
    std::optional<SparseVector> insert(const SparseVector& v);
    std::size_t inputs() const { return inputs_; }
    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        SparseVector value;  // leading entry 1
        SparseVector combo;  // value = sum combo[k] * input_k
    };
    std::map<std::size_t, Row> rows_;
    std::size_t inputs_ = 0;
};

/// Basis of {x : sum_j x_j * columns[j] = 0}.
std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns);

std::size_t rank(const std::vector<SparseVector>& vectors);

/// Dense helpers for small systems.
using DenseMatrix = std::vector<std::vector<Scalar>>;
std::size_t rank(DenseMatrix m);

}  // namespace flk::linalg
