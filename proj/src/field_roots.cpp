#include "flk/field_roots.hpp"

#include "flk/errors.hpp"

#include <numeric>
#include <optional>

namespace flk::field_roots {

namespace {

using Elem = std::vector<mpz_class>;  // residue in (Z/M)[x]/Phi_n, length phi

struct Ring {
    int phi;
    const qarith::IntPolynomial* modulus;  // monic, size phi + 1
    mpz_class m;

    void reduce_coeffs(Elem& a) const {
        for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<mpz_class> prod(2 * phi - 1, mpz_class(0));
        for (int i = 0; i < phi; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < phi; ++j) mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
        for (int k = 2 * phi - 2; k >= phi; --k) {
            if (prod[k] == 0) continue;
            mpz_class c = prod[k];
            for (int i = 0; i < phi; ++i) prod[k - phi + i] -= c * (*modulus)[i];
        }
        prod.resize(phi);
        reduce_coeffs(prod);
        return prod;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(phi);
        for (int i = 0; i < phi; ++i) r[i] = a[i] + b[i];
        reduce_coeffs(r);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(phi);
        for (int i = 0; i < phi; ++i) r[i] = a[i] - b[i];
        reduce_coeffs(r);
        return r;
    }
    Elem constant(long c) const {
        Elem r(phi, mpz_class(0));
        r[0] = c;
        reduce_coeffs(r);
        return r;
    }
    bool is_zero(const Elem& a) const {
        for (const auto& c : a) {
            mpz_class t;
            mpz_fdiv_r(t.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
            if (t != 0) return false;
        }
        return true;
    }
    // Horner evaluation of f and f'.
    std::pair<Elem, Elem> eval(const std::vector<Elem>& f, const Elem& x) const {
        Elem v = constant(0);
        Elem d = constant(0);
        for (std::size_t k = f.size(); k-- > 0;) {
            d = add(mul(d, x), v);
            Elem fk = f[k];
            reduce_coeffs(fk);
            v = add(mul(v, x), fk);
        }
        return {v, d};
    }
    Elem power(Elem a, mpz_class e) const {
        Elem r = constant(1);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long multiplicative_order(long p, long n) {
    if (n == 1) return 1;
    long x = p % n;
    long k = 1;
    while (x != 1) {
        x = (x * p) % n;
        ++k;
        if (k > n) return 0;
    }
    return k;
}

bool has_primitive_root(int n) {
    if (n <= 2 || n == 4) return true;
    int m = (n % 2 == 0) ? n / 2 : n;
    if (m % 2 == 0) return false;
    int q = 3;
    while (m % q != 0) q += 2;
    while (m % q == 0) m /= q;
    return m == 1;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = a, s0 = 0, s1 = 1;
    mpz_fdiv_r(r1.get_mpz_t(), r1.get_mpz_t(), m.get_mpz_t());
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0 || abs(s1) > bound) return std::nullopt;
    mpq_class out(r1, s1);
    out.canonicalize();
    return out;
}

CyclotomicNumber eval_exact(const std::vector<CyclotomicNumber>& f, const CyclotomicNumber& x, int n) {
    CyclotomicNumber v(n);
    for (std::size_t k = f.size(); k-- > 0;) v = v * x + f[k];
    return v;
}

}  // namespace

std::vector<CyclotomicNumber> roots(const std::vector<CyclotomicNumber>& poly_in, int conductor) {
    const int n = conductor == 2 ? 1 : conductor;
    if (n < 1) throw InvalidArgument("roots: conductor must be positive");
    if (!has_primitive_root(n))
        throw InvalidArgument("roots: Q(zeta_" + std::to_string(n) + ") has no inert prime");
    std::vector<CyclotomicNumber> poly = poly_in;
    while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
    if (poly.empty()) throw InvalidArgument("roots: zero polynomial");

    std::vector<CyclotomicNumber> result;
    if (poly[0].is_zero()) {
        result.emplace_back(n);
        poly.erase(poly.begin());
        if (!poly.empty() && poly[0].is_zero()) throw InvalidArgument("roots: polynomial is not squarefree");
    }
    const std::size_t deg = poly.size() - 1;
    if (deg == 0) return result;
    if (deg == 1) {
        result.push_back(-poly[0] / poly[1]);
        return result;
    }

    const auto& modulus = qarith::cyclotomic_polynomial(n);
    const int phi = static_cast<int>(modulus.size()) - 1;

    // Integral coefficients: clear every denominator.
    mpz_class den = 1;
    for (const auto& c : poly) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Elem> fz;
    fz.reserve(poly.size());
    for (const auto& c : poly) {
        Elem e(phi);
        const auto& num = c.numerators();
        mpz_class scale = den / c.denominator();
        for (int i = 0; i < phi; ++i) e[i] = (i < static_cast<int>(num.size()) ? num[i] : mpz_class(0)) * scale;
        fz.push_back(std::move(e));
    }

    for (long p = 2; p < 2000; ++p) {
        if (!is_prime(p) || n % p == 0) continue;
        if (multiplicative_order(p, n) != phi) continue;
        mpz_class field_size;
        mpz_ui_pow_ui(field_size.get_mpz_t(), p, phi);
        if (field_size > 2000000) break;
        Ring rp{phi, &modulus, mpz_class(p)};
        if (rp.is_zero(fz.back())) continue;

        // Brute-force the residue field.
        std::vector<Elem> residues;
        bool bad = false;
        const long total = field_size.get_si();
        Elem x(phi, mpz_class(0));
        for (long idx = 0; idx < total && !bad; ++idx) {
            long t = idx;
            for (int i = 0; i < phi; ++i) {
                x[i] = t % p;
                t /= p;
            }
            auto [v, d] = rp.eval(fz, x);
            if (!rp.is_zero(v)) continue;
            if (rp.is_zero(d)) bad = true;
            else residues.push_back(x);
        }
        if (bad) continue;

        for (const auto& r0 : residues) {
            // Quadratic Newton lifting of the root and of 1/f'(root).
            Elem r = r0;
            Elem u = rp.power(rp.eval(fz, r0).second, field_size - 2);
            mpz_class precision = p;
            mpz_class target = mpz_class(1) << 64;
            mpz_class cap = mpz_class(1) << 4096;
            bool found = false;
            while (!found && precision < cap) {
                while (precision < target) {
                    precision *= precision;
                    Ring rk{phi, &modulus, precision};
                    auto [v, d] = rk.eval(fz, r);
                    r = rk.sub(r, rk.mul(v, u));
                    auto d2 = rk.eval(fz, r).second;
                    u = rk.mul(u, rk.sub(rk.constant(2), rk.mul(d2, u)));
                }
                std::vector<mpq_class> coords(phi);
                bool ok = true;
                for (int i = 0; i < phi && ok; ++i) {
                    auto q = rational_reconstruct(r[i], precision);
                    if (!q) ok = false;
                    else coords[i] = *q;
                }
                if (ok) {
                    CyclotomicNumber cand = CyclotomicNumber::from_coefficients(n, coords);
                    if (eval_exact(poly, cand, n).is_zero()) {
                        result.push_back(cand);
                        found = true;
                    }
                }
                target = target * target;
            }
        }
        return result;
    }
    throw LiftingFailure("roots: no usable inert prime found");
}

}  // namespace flk::field_roots
