#pragma once

// Gaussian binomials by the Pascal recursion and exact vanishing tests at
// roots of unity by long division with Mobius-built cyclotomic polynomials.
// Shares no code with the library.

#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

using Laurent = std::map<int, long long>;  // exponent -> coefficient

// [m over n] = q^{-n} [m-1 over n] + q^{m-n} [m-1 over n-1].
inline Laurent gaussian_binomial(int m, int n) {
    if (n < 0 || n > m) return {};
    if (n == 0 || n == m) return {{0, 1}};
    Laurent out;
    for (const auto& [e, c] : gaussian_binomial(m - 1, n)) out[e - n] += c;
    for (const auto& [e, c] : gaussian_binomial(m - 1, n - 1)) out[e + m - n] += c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

using Poly = std::vector<long long>;  // ascending

inline int mobius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    return n > 1 ? -mu : mu;
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Remainder of a modulo a monic b; quotient returned through q when given.
inline Poly mod_monic(Poly a, const Poly& b, Poly* q = nullptr) {
    const std::size_t db = b.size() - 1;
    if (q) q->assign(a.size() > db ? a.size() - db : 1, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const long long c = a[i];
        if (c == 0) continue;
        if (q) (*q)[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    a.resize(db);
    return a;
}

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}.
inline Poly cyclotomic(int n) {
    Poly num{1}, den{1};
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        Poly f(d + 1, 0);
        f[0] = -1;
        f[d] = 1;
        const int mu = mobius(n / d);
        if (mu == 1) num = mul(num, f);
        if (mu == -1) den = mul(den, f);
    }
    Poly q;
    const Poly r = mod_monic(num, den, &q);
    for (long long c : r)
        if (c) throw std::logic_error("cyclotomic: inexact");
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

// Whether poly(zeta_l) = 0 exactly.
inline bool vanishes_at_root_of_unity(const Laurent& poly, int l) {
    if (poly.empty()) return true;
    const int shift = -poly.begin()->first;
    Poly p(poly.rbegin()->first + shift + 1, 0);
    for (const auto& [e, c] : poly) p[e + shift] = c;
    for (long long c : mod_monic(p, cyclotomic(l)))
        if (c) return false;
    return true;
}

inline std::complex<double> evaluate(const Laurent& poly, int l) {
    std::complex<double> s = 0;
    for (const auto& [e, c] : poly) s += static_cast<double>(c) * std::polar(1.0, 2 * std::numbers::pi * e / l);
    return s;
}

}  // namespace oracle
