#include "flk/algengine.hpp"

#include "flk/errors.hpp"
#include "flk/field_roots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace flk::algengine {

namespace {

Scalar one() { return Scalar::rational(1); }

}  // namespace

// ---------------------------------------------------------------------------
// StructureConstantAlgebra

StructureConstantAlgebra::StructureConstantAlgebra(std::vector<std::string> labels, SparseVector unit, int conductor,
                                                   ProductFn product, std::vector<SparseVector> generators)
    : labels_(std::move(labels)),
      unit_(std::move(unit)),
      conductor_(conductor),
      product_(std::move(product)),
      generators_(std::move(generators)),
      mutex_(std::make_unique<std::recursive_mutex>()) {
    if (labels_.empty()) throw InvalidArgument("algebra must have positive dimension");
    if (!product_) throw InvalidArgument("algebra needs a product");
    if (generators_.empty())
        for (std::size_t i = 0; i < labels_.size(); ++i) generators_.push_back(basis_vector(i));
    cache_.resize(labels_.size() * labels_.size());
}

StructureConstantAlgebra StructureConstantAlgebra::from_table(std::vector<std::string> labels, SparseVector unit,
                                                              int conductor,
                                                              std::vector<std::vector<SparseVector>> table,
                                                              std::vector<SparseVector> generators) {
    const std::size_t n = labels.size();
    if (table.size() != n) throw InvalidArgument("multiplication table has wrong size");
    for (const auto& row : table)
        if (row.size() != n) throw InvalidArgument("multiplication table has wrong size");
    auto shared = std::make_shared<std::vector<std::vector<SparseVector>>>(std::move(table));
    return StructureConstantAlgebra(
        std::move(labels), std::move(unit), conductor, [shared](std::size_t i, std::size_t j) { return (*shared)[i][j]; },
        std::move(generators));
}

SparseVector StructureConstantAlgebra::basis_vector(std::size_t i) const {
    if (i >= dimension()) throw InvalidArgument("basis index out of range");
    return SparseVector::unit(i, one());
}

const SparseVector& StructureConstantAlgebra::basis_product(std::size_t i, std::size_t j) const {
    const std::size_t n = dimension();
    if (i >= n || j >= n) throw InvalidArgument("basis index out of range");
    std::lock_guard<std::recursive_mutex> lock(*mutex_);
    auto& slot = cache_[i * n + j];
    if (!slot) slot = std::make_unique<SparseVector>(product_(i, j));
    return *slot;
}

SparseVector StructureConstantAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
    SparseVector out;
    for (const auto& [i, xi] : x.entries())
        for (const auto& [j, yj] : y.entries()) out.axpy(xi * yj, basis_product(i, j));
    return out;
}

bool StructureConstantAlgebra::check_unit() const {
    for (std::size_t i = 0; i < dimension(); ++i) {
        const SparseVector b = basis_vector(i);
        if (!(multiply(unit_, b) == b) || !(multiply(b, unit_) == b)) return false;
    }
    return true;
}

bool StructureConstantAlgebra::check_associativity(std::size_t samples, std::uint64_t seed) const {
    const std::size_t n = dimension();
    auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
        const SparseVector bk = basis_vector(k), bi = basis_vector(i);
        return multiply(basis_product(i, j), bk) == multiply(bi, basis_product(j, k));
    };
    if (samples == 0) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!check(i, j, k)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s)
        if (!check(pick(rng), pick(rng), pick(rng))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// u_zeta(sl2)

std::size_t pbw_index(int l, const PBWLabel& m) {
    if (m.a < 0 || m.b < 0 || m.c < 0 || m.a >= l || m.b >= l || m.c >= l)
        throw InvalidArgument("PBW label out of range");
    return (static_cast<std::size_t>(m.a) * l + m.b) * l + m.c;
}

PBWLabel pbw_label(int l, std::size_t index) {
    const std::size_t ll = static_cast<std::size_t>(l);
    if (index >= ll * ll * ll) throw InvalidArgument("PBW index out of range");
    return PBWLabel{static_cast<int>(index / (ll * ll)), static_cast<int>(index / ll % ll), static_cast<int>(index % ll)};
}

namespace {

// Right multiplication of PBW monomials by the generators, memoized. Every
// operator maps the span of monomials into itself, so products of arbitrary
// basis elements are obtained by applying the letters of the right factor.
class SL2Rewriter {
public:
    explicit SL2Rewriter(int l) : l_(l), n_(static_cast<std::size_t>(l) * l * l) {
        zeta_.reserve(l);
        for (int k = 0; k < l; ++k) zeta_.push_back(Scalar::zeta_power(l, k));
        const Scalar z = zeta_[1], zi = zeta_[l - 1];
        inv_diff_ = (z - zi).inverse();
        for (auto* memo : {&f_, &k_, &ki_}) memo->resize(n_);
    }

    // letters: 0 = F, 1 = K, 2 = E
    SparseVector apply(int letter, const SparseVector& v) {
        SparseVector out;
        for (const auto& [i, c] : v.entries()) out.axpy(c, on_basis(letter, i));
        return out;
    }

    SparseVector product(std::size_t i, std::size_t j) {
        const PBWLabel m = pbw_label(l_, j);
        SparseVector v = SparseVector::unit(i, one());
        for (int s = 0; s < m.a && !v.is_zero(); ++s) v = apply(0, v);
        for (int s = 0; s < m.b && !v.is_zero(); ++s) v = apply(1, v);
        for (int s = 0; s < m.c && !v.is_zero(); ++s) v = apply(2, v);
        return v;
    }

private:
    Scalar zeta(long k) const { return zeta_[((k % l_) + l_) % l_]; }

    SparseVector on_basis(int letter, std::size_t i) {
        const PBWLabel m = pbw_label(l_, i);
        if (letter == 2) {
            // F^a K^b E^c . E = F^a K^b E^{c+1}
            if (m.c + 1 == l_) return {};
            return SparseVector::unit(pbw_index(l_, {m.a, m.b, m.c + 1}), one());
        }
        auto& memo = letter == 0 ? f_ : k_;
        if (!memo[i]) memo[i] = std::make_unique<SparseVector>(letter == 0 ? times_f(m) : times_k(m, 1));
        return *memo[i];
    }

    SparseVector k_inverse(std::size_t i) {
        if (!ki_[i]) ki_[i] = std::make_unique<SparseVector>(times_k(pbw_label(l_, i), -1));
        return *ki_[i];
    }

    // E^c K^s = zeta^{-2cs} K^s E^c
    SparseVector times_k(const PBWLabel& m, int s) {
        const int b = ((m.b + s) % l_ + l_) % l_;
        return SparseVector::unit(pbw_index(l_, {m.a, b, m.c}), zeta(-2L * m.c * s));
    }

    SparseVector times_f(const PBWLabel& m) {
        if (m.c == 0) {
            // F^a K^b . F = zeta^{-2b} F^{a+1} K^b
            if (m.a + 1 == l_) return {};
            return SparseVector::unit(pbw_index(l_, {m.a + 1, m.b, 0}), zeta(-2L * m.b));
        }
        // m = m' E with m' = F^a K^b E^{c-1}, and E F = F E + (K - K^-1)/(zeta - zeta^-1).
        const std::size_t prev = pbw_index(l_, {m.a, m.b, m.c - 1});
        SparseVector out = apply(2, on_basis(0, prev));
        SparseVector cartan = on_basis(1, prev);
        cartan -= k_inverse(prev);
        out.axpy(inv_diff_, cartan);
        return out;
    }

    int l_;
    std::size_t n_;
    std::vector<Scalar> zeta_;
    Scalar inv_diff_;
    std::vector<std::unique_ptr<SparseVector>> f_, k_, ki_;
};

}  // namespace

StructureConstantAlgebra build_uq_sl2(int l) {
    if (l < 3 || l % 2 == 0) throw InvalidArgument("build_uq_sl2: l must be odd and >= 3");
    const std::size_t n = static_cast<std::size_t>(l) * l * l;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const PBWLabel m = pbw_label(l, i);
        labels.push_back("F^" + std::to_string(m.a) + " K^" + std::to_string(m.b) + " E^" + std::to_string(m.c));
    }
    auto rw = std::make_shared<SL2Rewriter>(l);
    // The algebra's own lock serializes calls into the rewriter.
    auto product = [rw](std::size_t i, std::size_t j) { return rw->product(i, j); };
    std::vector<SparseVector> gens{SparseVector::unit(pbw_index(l, {0, 0, 1}), one()),
                                   SparseVector::unit(pbw_index(l, {1, 0, 0}), one()),
                                   SparseVector::unit(pbw_index(l, {0, 1, 0}), one())};
    return StructureConstantAlgebra(std::move(labels), SparseVector::unit(0, one()), l, std::move(product),
                                    std::move(gens));
}

// ---------------------------------------------------------------------------
// Center, commutators, radical

Subspace center(const StructureConstantAlgebra& alg) {
    const std::size_t n = alg.dimension();
    const auto& gens = alg.generators();
    std::vector<SparseVector> columns;
    columns.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        const SparseVector b = alg.basis_vector(m);
        SparseVector col;
        for (std::size_t t = 0; t < gens.size(); ++t) {
            const SparseVector c = alg.multiply(gens[t], b) - alg.multiply(b, gens[t]);
            for (const auto& [idx, val] : c.entries()) col.set(t * n + idx, val);
        }
        columns.push_back(std::move(col));
    }
    Subspace z;
    for (const auto& k : linalg::kernel(columns)) z.insert(k);
    return z;
}

Subspace commutator_space(const StructureConstantAlgebra& alg) {
    // [xy, b] = [x, yb] + [y, bx], so commutators with generators span [A, A].
    Subspace c;
    for (const auto& g : alg.generators()) {
        for (std::size_t m = 0; m < alg.dimension(); ++m) {
            const SparseVector b = alg.basis_vector(m);
            c.insert(alg.multiply(g, b) - alg.multiply(b, g));
        }
    }
    return c;
}

std::vector<Scalar> regular_traces(const StructureConstantAlgebra& alg) {
    const std::size_t n = alg.dimension();
    std::vector<Scalar> t(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
            if (const Scalar* c = alg.basis_product(k, m).find(m)) t[k] += *c;
    return t;
}

namespace {

Scalar apply_functional(const std::vector<Scalar>& f, const SparseVector& v) {
    Scalar s;
    for (const auto& [i, c] : v.entries())
        if (!f[i].is_zero()) s += f[i] * c;
    return s;
}

}  // namespace

Subspace jacobson_radical(const StructureConstantAlgebra& alg) {
    const std::size_t n = alg.dimension();
    const std::vector<Scalar> t = regular_traces(alg);
    // x in rad iff sum_k x_k tr(L_{b_k b_m}) = 0 for all m.
    std::vector<SparseVector> columns(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
            const Scalar v = apply_functional(t, alg.basis_product(k, m));
            if (!v.is_zero()) columns[k].set(m, v);
        }
    Subspace rad;
    for (const auto& k : linalg::kernel(columns)) rad.insert(k);
    return rad;
}

// ---------------------------------------------------------------------------
// Idempotents

namespace {

using Poly = std::vector<Scalar>;  // ascending coefficients

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// a = q b + r
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (b.empty()) throw InvalidArgument("polynomial division by zero");
    const Scalar lead_inv = b.back().inverse();
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Scalar c = a.back() * lead_inv;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return {q, a};
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Scalar inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar::rational(static_cast<long>(i)));
    trim(d);
    return d;
}

Scalar evaluate(const Poly& p, const Scalar& x) {
    Scalar s;
    for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
    return s;
}

SparseVector lift_idempotent(const StructureConstantAlgebra& alg, SparseVector e) {
    for (int iter = 0; iter < 64; ++iter) {
        const SparseVector e2 = alg.multiply(e, e);
        if (e2 == e) return e;
        const SparseVector e3 = alg.multiply(e2, e);
        SparseVector next;
        next.axpy(Scalar::rational(3), e2);
        next.axpy(Scalar::rational(-2), e3);
        e = std::move(next);
    }
    throw LiftingFailure("idempotent lifting did not converge");
}

struct CornerData {
    Subspace space;  // f X f
    Subspace rad;    // f R f
};

// Splits f into primitive idempotents of the algebra described by `corner`:
// f is primitive once its corner is one-dimensional modulo the radical.
// Candidates x from the corner are tried until the minimal polynomial of x
// modulo the radical has a simple root r in the ground field; then
// h(x)/h(r) with h = minpoly/(t - r) is idempotent modulo the radical.
std::vector<SparseVector> refine(const StructureConstantAlgebra& alg, const SparseVector& f0,
                                 const std::function<CornerData(const SparseVector&)>& corner) {
    std::vector<SparseVector> done;
    std::deque<SparseVector> todo{f0};
    std::mt19937_64 rng(0x5eed);
    while (!todo.empty()) {
        SparseVector f = std::move(todo.front());
        todo.pop_front();
        const CornerData cd = corner(f);
        const std::size_t qdim = cd.space.dim() - cd.rad.dim();
        if (qdim == 0) throw LiftingFailure("idempotent lies in the radical");
        if (qdim == 1) {
            done.push_back(std::move(f));
            continue;
        }
        std::vector<SparseVector> candidates;
        const auto basis = cd.space.basis();
        for (const auto& b : basis)
            if (!cd.rad.contains(b)) candidates.push_back(b);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int s = 0; s < 24; ++s) {
            SparseVector x;
            for (const auto& b : basis) x.axpy(Scalar::rational(coeff(rng)), b);
            candidates.push_back(std::move(x));
        }

        bool split = false;
        for (const auto& x : candidates) {
            std::vector<SparseVector> powers{f};
            linalg::TrackedEchelon ech;
            std::optional<SparseVector> dep = ech.insert(cd.rad.reduce(f));
            while (!dep) {
                powers.push_back(alg.multiply(powers.back(), x));
                dep = ech.insert(cd.rad.reduce(powers.back()));
            }
            const std::size_t k = powers.size() - 1;
            if (k < 2) continue;
            Poly mu(k + 1);
            mu[k] = one();
            for (const auto& [i, c] : dep->entries()) mu[i] = -c;
            Poly sq = divmod(mu, gcd(mu, derivative(mu))).first;
            std::vector<Scalar> rts;
            try {
                rts = field_roots::roots(sq, alg.conductor());
            } catch (const LiftingFailure&) {
                continue;
            }
            for (const auto& r : rts) {
                const Poly h = divmod(mu, Poly{-r, one()}).first;
                const Scalar hr = evaluate(h, r);
                if (hr.is_zero()) continue;
                SparseVector g;
                const Scalar inv = hr.inverse();
                for (std::size_t i = 0; i < h.size(); ++i)
                    if (!h[i].is_zero()) g.axpy(h[i] * inv, powers[i]);
                g = lift_idempotent(alg, std::move(g));
                SparseVector rest = f - g;
                todo.push_back(std::move(g));
                todo.push_back(std::move(rest));
                split = true;
                break;
            }
            if (split) break;
        }
        if (!split) throw LiftingFailure("corner does not split over the ground field");
    }
    return done;
}

}  // namespace

std::vector<SparseVector> central_primitive_idempotents(const StructureConstantAlgebra& alg) {
    const Subspace z = center(alg);
    const std::vector<SparseVector> zb = z.basis();
    const std::vector<Scalar> t = regular_traces(alg);
    // Nilradical of Z: degenerate part of (x, y) -> tr(L_{xy}) restricted to Z.
    std::vector<SparseVector> columns(zb.size());
    for (std::size_t i = 0; i < zb.size(); ++i)
        for (std::size_t j = 0; j < zb.size(); ++j) {
            const Scalar v = apply_functional(t, alg.multiply(zb[i], zb[j]));
            if (!v.is_zero()) columns[i].set(j, v);
        }
    std::vector<SparseVector> nil;
    for (const auto& k : linalg::kernel(columns)) {
        SparseVector x;
        for (const auto& [i, c] : k.entries()) x.axpy(c, zb[i]);
        nil.push_back(std::move(x));
    }
    auto corner = [&](const SparseVector& f) {
        CornerData cd;
        for (const auto& b : zb) cd.space.insert(alg.multiply(f, b));
        for (const auto& x : nil) cd.rad.insert(alg.multiply(f, x));
        return cd;
    };
    std::vector<SparseVector> idem = refine(alg, alg.unit(), corner);
    const std::vector<std::size_t> dims = block_dimensions(alg, idem);
    std::vector<std::size_t> order(idem.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dims[a] < dims[b]; });
    std::vector<SparseVector> sorted;
    for (std::size_t i : order) sorted.push_back(idem[i]);
    return sorted;
}

std::vector<std::size_t> block_dimensions(const StructureConstantAlgebra& alg, const std::vector<SparseVector>& idempotents) {
    std::vector<std::size_t> dims;
    for (const auto& e : idempotents) {
        Subspace s;
        for (std::size_t m = 0; m < alg.dimension(); ++m) s.insert(alg.multiply(e, alg.basis_vector(m)));
        dims.push_back(s.dim());
    }
    return dims;
}

std::vector<std::size_t> block_dimensions(const StructureConstantAlgebra& alg) {
    return block_dimensions(alg, central_primitive_idempotents(alg));
}

// ---------------------------------------------------------------------------
// Symmetry

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<unsigned __int128>(a) * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

bool prime64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Reduction Z[zeta_n, 1/D] -> F_p sending zeta_n to a primitive n-th root w.
struct ModP {
    u64 p = 0;
    u64 w = 0;
    int n = 1;

    std::optional<u64> map(const Scalar& x) const {
        const u64 den = mpz_fdiv_ui(x.denominator().get_mpz_t(), p);
        if (den == 0) return std::nullopt;
        const u64 wx = powmod(w, static_cast<u64>(n / std::max(x.conductor(), 1)), p);
        u64 s = 0, wk = 1;
        for (const auto& c : x.numerators()) {
            s = (s + mulmod(mpz_fdiv_ui(c.get_mpz_t(), p), wk, p)) % p;
            wk = mulmod(wk, wx, p);
        }
        return mulmod(s, powmod(den, p - 2, p), p);
    }
};

ModP find_prime(int n, u64 start) {
    const u64 nn = static_cast<u64>(std::max(n, 1));
    std::vector<u64> factors;
    for (u64 q = 2, m = nn; m > 1; ++q)
        if (m % q == 0) {
            factors.push_back(q);
            while (m % q == 0) m /= q;
        }
    for (u64 p = start - start % nn + 1;; p += nn) {
        if (p <= start || !prime64(p)) continue;
        for (u64 a = 2; a < p; ++a) {
            const u64 w = powmod(a, (p - 1) / nn, p);
            bool primitive = true;
            for (u64 q : factors)
                if (powmod(w, nn / q, p) == 1) primitive = false;
            if (primitive) return ModP{p, w, static_cast<int>(nn)};
        }
    }
}

std::size_t rank_mod_p(std::vector<std::vector<u64>> m, u64 p) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const u64 inv = powmod(m[r][c], p - 2, p);
        for (std::size_t k = c; k < cols; ++k) m[r][k] = mulmod(m[r][k], inv, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const u64 f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] = (m[i][k] + p - mulmod(f, m[r][k], p)) % p;
        }
        ++r;
    }
    return r;
}

}  // namespace

bool is_symmetric_algebra(const StructureConstantAlgebra& alg) {
    const std::size_t n = alg.dimension();
    const Subspace comm = commutator_space(alg);
    // tau vanishes on [A, A] iff tau_p = -sum_f row_p[f] tau_f over pivots p,
    // with the free coordinates f chosen arbitrarily.
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
        if (!comm.rows().count(i)) free.push_back(i);
    if (free.empty()) return false;
    std::vector<std::vector<Scalar>> taus;
    for (std::size_t f : free) {
        std::vector<Scalar> tau(n);
        tau[f] = one();
        for (const auto& [p, row] : comm.rows())
            if (const Scalar* c = row.find(f)) tau[p] = -*c;
        taus.push_back(std::move(tau));
    }
    // gram[k][i][j] = tau_k(b_i b_j)
    std::vector<std::vector<std::vector<Scalar>>> gram(taus.size(), std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVector& prod = alg.basis_product(i, j);
            for (std::size_t k = 0; k < taus.size(); ++k) gram[k][i][j] = apply_functional(taus[k], prod);
        }

    // A nondegenerate reduction modulo p certifies a nondegenerate form.
    auto full_rank_mod_p = [&](const std::vector<long>& coeffs, const ModP& mp) {
        std::vector<std::vector<u64>> m(n, std::vector<u64>(n, 0));
        for (std::size_t k = 0; k < taus.size(); ++k) {
            const u64 ck = static_cast<u64>((coeffs[k] % static_cast<long>(mp.p) + static_cast<long>(mp.p))) % mp.p;
            if (ck == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (gram[k][i][j].is_zero()) continue;
                    auto v = mp.map(gram[k][i][j]);
                    if (!v) return false;
                    m[i][j] = (m[i][j] + mulmod(ck, *v, mp.p)) % mp.p;
                }
        }
        return rank_mod_p(std::move(m), mp.p) == n;
    };
    auto full_rank_exact = [&](const std::vector<long>& coeffs) {
        linalg::DenseMatrix m(n, std::vector<Scalar>(n));
        for (std::size_t k = 0; k < taus.size(); ++k) {
            if (coeffs[k] == 0) continue;
            const Scalar ck = Scalar::rational(coeffs[k]);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!gram[k][i][j].is_zero()) m[i][j] += ck * gram[k][i][j];
        }
        return linalg::rank(std::move(m)) == n;
    };

    const ModP mp = find_prime(alg.conductor(), 1u << 30);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(1, 1000003);
    for (int s = 0; s < 4; ++s) {
        std::vector<long> c(taus.size());
        for (auto& x : c) x = coeff(rng);
        if (full_rank_mod_p(c, mp)) return true;
    }
    // det(sum c_k G_k) has degree <= n in each c_k, so it vanishes identically
    // iff it vanishes on {0..n}^m.
    const std::size_t m = taus.size();
    double points = 1;
    for (std::size_t k = 0; k < m; ++k) points *= static_cast<double>(n + 1);
    if (points <= 4096) {
        std::vector<long> c(m, 0);
        while (true) {
            if (full_rank_mod_p(c, mp) || full_rank_exact(c)) return true;
            std::size_t k = 0;
            while (k < m && c[k] == static_cast<long>(n)) c[k++] = 0;
            if (k == m) break;
            ++c[k];
        }
        return false;
    }
    // Too many grid points: further random points at fresh primes.
    u64 start = mp.p;
    for (int s = 0; s < 16; ++s) {
        const ModP q = find_prime(alg.conductor(), start);
        start = q.p;
        std::vector<long> c(m);
        for (auto& x : c) x = coeff(rng);
        if (full_rank_mod_p(c, q)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Gabriel quiver

GabrielQuiver gabriel_quiver_of_block(const StructureConstantAlgebra& alg, const SparseVector& e) {
    const std::size_t n = alg.dimension();
    if (!(alg.multiply(e, e) == e)) throw InvalidArgument("gabriel_quiver_of_block: e is not idempotent");
    for (const auto& g : alg.generators())
        if (!(alg.multiply(e, g) == alg.multiply(g, e)))
            throw InvalidArgument("gabriel_quiver_of_block: e is not central");

    const Subspace rad = jacobson_radical(alg);
    const std::vector<SparseVector> jb = rad.basis();
    auto sandwich = [&](const SparseVector& a, const SparseVector& x, const SparseVector& b) {
        return alg.multiply(alg.multiply(a, x), b);
    };
    auto corner = [&](const SparseVector& f) {
        CornerData cd;
        for (std::size_t m = 0; m < n; ++m) cd.space.insert(sandwich(f, alg.basis_vector(m), f));
        for (const auto& j : jb) cd.rad.insert(sandwich(f, j, f));
        return cd;
    };
    const std::vector<SparseVector> prim = refine(alg, e, corner);

    // f ~ g iff f A g is not contained in rad.
    GabrielQuiver gq;
    for (const auto& f : prim) {
        bool found = false;
        for (std::size_t c = 0; c < gq.vertex_idempotents.size() && !found; ++c) {
            const SparseVector& g = gq.vertex_idempotents[c];
            for (std::size_t m = 0; m < n; ++m)
                if (!rad.contains(sandwich(f, alg.basis_vector(m), g))) {
                    ++gq.multiplicities[c];
                    found = true;
                    break;
                }
        }
        if (!found) {
            gq.vertex_idempotents.push_back(f);
            gq.multiplicities.push_back(1);
        }
    }

    const std::size_t v = gq.vertex_idempotents.size();
    std::vector<std::vector<SparseVector>> left(v), right(v);  // f J and J f
    for (std::size_t i = 0; i < v; ++i) {
        Subspace l, r;
        for (const auto& j : jb) {
            l.insert(alg.multiply(gq.vertex_idempotents[i], j));
            r.insert(alg.multiply(j, gq.vertex_idempotents[i]));
        }
        left[i] = l.basis();
        right[i] = r.basis();
    }
    gq.arrows.assign(v, std::vector<std::size_t>(v, 0));
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            Subspace first, second;  // e_j J e_i and e_j J^2 e_i
            for (const auto& y : right[i]) first.insert(alg.multiply(gq.vertex_idempotents[j], y));
            for (const auto& x : left[j])
                for (const auto& y : right[i]) second.insert(alg.multiply(x, y));
            gq.arrows[i][j] = first.dim() - second.dim();
        }
    }
    return gq;
}

}  // namespace flk::algengine
