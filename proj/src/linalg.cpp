#include "flk/linalg.hpp"

#include "flk/errors.hpp"

#include <algorithm>

namespace flk::linalg {

SparseVector SparseVector::unit(std::size_t index, const Scalar& value) {
    SparseVector v;
    if (!value.is_zero()) v.entries_.emplace_back(index, value);
    return v;
}

const Scalar* SparseVector::find(std::size_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it == entries_.end() || it->first != index) return nullptr;
    return &it->second;
}

Scalar SparseVector::get(std::size_t index) const {
    const Scalar* p = find(index);
    return p ? *p : Scalar();
}

void SparseVector::set(std::size_t index, const Scalar& value) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) {
        if (value.is_zero()) entries_.erase(it);
        else it->second = value;
    } else if (!value.is_zero()) {
        entries_.insert(it, Entry(index, value));
    }
}

void SparseVector::axpy(const Scalar& c, const SparseVector& other) {
    if (c.is_zero() || other.is_zero()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == entries_.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Scalar s = a->second + c * b->second;
            if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

void SparseVector::scale(const Scalar& c) {
    if (c.is_zero()) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.second *= c;
}

// ---------------------------------------------------------------------------

SparseVector Subspace::reduce(const SparseVector& v) const {
    SparseVector r = v;
    // Rows vanish at all other pivots, so one pass over the original support
    // suffices.
    for (const auto& [idx, val] : v.entries()) {
        auto it = rows_.find(idx);
        if (it == rows_.end()) continue;
        const Scalar* cur = r.find(idx);
        if (!cur) continue;
        Scalar c = -*cur;
        r.axpy(c, it->second);
    }
    return r;
}

bool Subspace::insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.is_zero()) return false;
    const std::size_t p = r.leading();
    r.scale(r.entries().front().second.inverse());
    for (auto& [idx, row] : rows_) {
        const Scalar* c = row.find(p);
        if (c) {
            Scalar f = -*c;
            row.axpy(f, r);
        }
    }
    rows_.emplace(p, std::move(r));
    return true;
}

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> p;
    p.reserve(rows_.size());
    for (const auto& kv : rows_) p.push_back(kv.first);
    return p;
}

std::vector<SparseVector> Subspace::basis() const {
    std::vector<SparseVector> b;
    b.reserve(rows_.size());
    for (const auto& kv : rows_) b.push_back(kv.second);
    return b;
}

std::vector<Scalar> Subspace::coordinates(const SparseVector& v) const {
    std::vector<Scalar> c;
    c.reserve(rows_.size());
    for (const auto& kv : rows_) c.push_back(v.get(kv.first));
    return c;
}

// ---------------------------------------------------------------------------

std::optional<SparseVector> TrackedEchelon::insert(const SparseVector& v) {
    SparseVector value = v;
    SparseVector combo = SparseVector::unit(inputs_, Scalar::rational(1));
    ++inputs_;
    while (!value.is_zero()) {
        auto it = rows_.find(value.leading());
        if (it == rows_.end()) break;
        Scalar c = -value.entries().front().second;
        value.axpy(c, it->second.value);
        combo.axpy(c, it->second.combo);
    }
    if (value.is_zero()) {
        // 0 = combo; solve for the newest input, whose coefficient is 1.
        SparseVector dep = combo;
        dep.set(inputs_ - 1, Scalar());
        dep.scale(Scalar::rational(-1));
        return dep;
    }
    Scalar inv = value.entries().front().second.inverse();
    value.scale(inv);
    combo.scale(inv);
    const std::size_t p = value.leading();
    rows_.emplace(p, Row{std::move(value), std::move(combo)});
    return std::nullopt;
}

std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns) {
    TrackedEchelon ech;
    std::vector<SparseVector> out;
    for (const auto& col : columns) {
        auto dep = ech.insert(col);
        if (dep) {
            SparseVector k = *dep;
            k.scale(Scalar::rational(-1));
            k.set(ech.inputs() - 1, Scalar::rational(1));
            out.push_back(std::move(k));
        }
    }
    return out;
}

std::size_t rank(const std::vector<SparseVector>& vectors) {
    TrackedEchelon ech;
    for (const auto& v : vectors) ech.insert(v);
    return ech.rank();
}

std::size_t rank(DenseMatrix m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace flk::linalg
