#include "flk/qarith.hpp"

#include "flk/errors.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace flk::qarith {

namespace {

void trim(IntPolynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPolynomial divide_exact_int(const IntPolynomial& num, const IntPolynomial& den) {
    IntPolynomial rem = num;
    trim(rem);
    IntPolynomial d = den;
    trim(d);
    if (d.empty()) throw InvalidArgument("division by the zero polynomial");
    if (rem.size() < d.size()) {
        if (!rem.empty()) throw InexactDivision("polynomial division leaves a remainder");
        return {};
    }
    IntPolynomial quot(rem.size() - d.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const mpz_class& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t()))
            throw InexactDivision("polynomial division is not exact over Z");
        mpz_class c = top / d.back();
        quot[k] = c;
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= c * d[i];
    }
    trim(rem);
    if (!rem.empty()) throw InexactDivision("polynomial division leaves a remainder");
    return quot;
}

struct FieldInfo {
    int conductor;
    int phi;
    std::vector<mpz_class> modulus;  // monic, ascending, size phi + 1
};

const FieldInfo& field_info(int n) {
    static std::mutex mu;
    static std::unordered_map<int, std::unique_ptr<FieldInfo>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    auto info = std::make_unique<FieldInfo>();
    info->conductor = n;
    info->modulus = cyclotomic_polynomial(n);
    info->phi = static_cast<int>(info->modulus.size()) - 1;
    auto& ref = *info;
    cache.emplace(n, std::move(info));
    return ref;
}

// Reduce an integer coefficient vector modulo the monic modulus in place and
// resize to phi.
void reduce_mod(std::vector<mpz_class>& v, const FieldInfo& f) {
    const int phi = f.phi;
    for (int k = static_cast<int>(v.size()) - 1; k >= phi; --k) {
        if (v[k] == 0) continue;
        mpz_class c = v[k];
        v[k] = 0;
        for (int i = 0; i < phi; ++i) {
            if (f.modulus[i] != 0) v[k - phi + i] -= c * f.modulus[i];
        }
    }
    v.resize(phi);
}

int canonical_conductor(int n) {
    if (n < 1) throw InvalidArgument("conductor must be positive");
    return n == 2 ? 1 : n;
}

}  // namespace

const IntPolynomial& cyclotomic_polynomial(int n) {
    if (n < 1) throw InvalidArgument("cyclotomic_polynomial: n must be >= 1");
    static std::recursive_mutex mu;
    static std::unordered_map<int, IntPolynomial> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    IntPolynomial p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_exact_int(p, cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(p)).first->second;
}

int euler_phi(int n) {
    if (n < 1) throw InvalidArgument("euler_phi: n must be >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::string to_string(const IntPolynomial& p, char var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0) continue;
        mpz_class c = p[k];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (k == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(long constant) {
    if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const mpz_class& coeff) {
    LaurentPolynomial p;
    p.add_term(exponent, coeff);
    return p;
}

mpz_class LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPolynomial::min_exponent() const { return terms_.begin()->first; }
int LaurentPolynomial::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPolynomial::add_term(int exponent, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::bar() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
    LaurentPolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    *this = std::move(r);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw InvalidArgument("division by the zero Laurent polynomial");
    if (is_zero()) return {};
    const int span_floor = min_exponent() - divisor.min_exponent();
    const mpz_class& lead = divisor.terms_.rbegin()->second;
    const int dmax = divisor.max_exponent();
    LaurentPolynomial quotient;
    LaurentPolynomial rem = *this;
    while (!rem.is_zero()) {
        const int e = rem.max_exponent() - dmax;
        if (e < span_floor) throw InexactDivision("Laurent division leaves a remainder");
        const mpz_class& top = rem.terms_.rbegin()->second;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw InexactDivision("Laurent division is not exact over Z");
        mpz_class c = top / lead;
        quotient.add_term(e, c);
        for (const auto& [de, dc] : divisor.terms_) rem.add_term(de + e, -c * dc);
    }
    return quotient;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpz_class& c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << abs(c) << "*q^" << it->first;
        first = false;
    }
    return os.str();
}

LaurentPolynomial q_integer(int n) {
    if (n < 0) throw InvalidArgument("q_integer: n must be >= 0");
    LaurentPolynomial r;
    for (int k = 0; k < n; ++k) r += LaurentPolynomial::monomial(n - 1 - 2 * k);
    return r;
}

LaurentPolynomial q_factorial(int n) {
    if (n < 0) throw InvalidArgument("q_factorial: n must be >= 0");
    LaurentPolynomial r(1);
    for (int k = 2; k <= n; ++k) r *= q_integer(k);
    return r;
}

LaurentPolynomial q_binomial(int m, int n) {
    if (n < 0 || n > m) throw InvalidArgument("q_binomial: need 0 <= n <= m");
    return q_factorial(m).divide_exact(q_factorial(n) * q_factorial(m - n));
}

// ---------------------------------------------------------------------------
// CyclotomicNumber

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(1) {}

CyclotomicNumber::CyclotomicNumber(int conductor) : conductor_(canonical_conductor(conductor)) {
    num_.assign(field_info(conductor_).phi, mpz_class(0));
}

CyclotomicNumber::CyclotomicNumber(int conductor, const mpq_class& value) : CyclotomicNumber(conductor) {
    num_[0] = value.get_num();
    den_ = value.get_den();
}

CyclotomicNumber::CyclotomicNumber(int conductor, std::vector<mpz_class> num, mpz_class den)
    : conductor_(conductor), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

CyclotomicNumber CyclotomicNumber::zeta_power(int conductor, long k) {
    const int n = canonical_conductor(conductor);
    if (conductor == 2) return CyclotomicNumber(1, mpq_class(k % 2 == 0 ? 1 : -1));
    const auto& f = field_info(n);
    long e = k % n;
    if (e < 0) e += n;
    std::vector<mpz_class> v(std::max<long>(e + 1, f.phi), mpz_class(0));
    v[e] = 1;
    reduce_mod(v, f);
    return CyclotomicNumber(n, std::move(v), 1);
}

CyclotomicNumber CyclotomicNumber::from_coefficients(int conductor, const std::vector<mpq_class>& coeffs) {
    const int n = canonical_conductor(conductor);
    const auto& f = field_info(n);
    if (conductor == 2) {
        // coefficients refer to powers of zeta_2 = -1
        mpq_class s = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i % 2 == 0 ? coeffs[i] : -coeffs[i]);
        return CyclotomicNumber(1, s);
    }
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> v(std::max<std::size_t>(coeffs.size(), f.phi), mpz_class(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    reduce_mod(v, f);
    return CyclotomicNumber(n, std::move(v), den);
}

std::vector<mpq_class> CyclotomicNumber::coefficients() const {
    std::vector<mpq_class> r;
    r.reserve(num_.size());
    for (const auto& c : num_) {
        mpq_class q(c, den_);
        q.canonicalize();
        r.push_back(q);
    }
    return r;
}

void CyclotomicNumber::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

bool CyclotomicNumber::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CyclotomicNumber::is_one() const {
    if (den_ != 1 || num_[0] != 1) return false;
    return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
    return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

mpq_class CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw InvalidArgument("cyclotomic number is not rational");
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return q;
}

void CyclotomicNumber::promote_to(int conductor) {
    if (conductor == conductor_) return;
    // only rational values are ever promoted
    mpz_class c0 = num_[0];
    conductor_ = conductor;
    num_.assign(field_info(conductor).phi, mpz_class(0));
    num_[0] = c0;
}

int CyclotomicNumber::common_conductor(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.conductor_ == b.conductor_) return a.conductor_;
    if (a.is_rational()) return b.conductor_;
    if (b.is_rational()) return a.conductor_;
    throw InvalidArgument("cyclotomic numbers from different fields: Q(zeta_" + std::to_string(a.conductor_) +
                          ") vs Q(zeta_" + std::to_string(b.conductor_) + ")");
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    const int n = common_conductor(*this, o);
    promote_to(n);
    if (o.conductor_ != n) {
        CyclotomicNumber p = o;
        p.promote_to(n);
        return *this += p;
    }
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= o.den_;
            num_[i] += o.num_[i] * den_;
        }
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    const int n = common_conductor(*this, o);
    if (o.is_rational()) {
        promote_to(n);
        for (auto& c : num_) c *= o.num_[0];
        den_ *= o.den_;
        normalize();
        return *this;
    }
    if (is_rational()) {
        CyclotomicNumber r = o;
        for (auto& c : r.num_) c *= num_[0];
        r.den_ *= den_;
        r.normalize();
        *this = std::move(r);
        return *this;
    }
    const auto& f = field_info(n);
    const int phi = f.phi;
    std::vector<mpz_class> prod(2 * phi - 1, mpz_class(0));
    for (int i = 0; i < phi; ++i) {
        if (num_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (o.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
        }
    }
    reduce_mod(prod, f);
    num_ = std::move(prod);
    den_ *= o.den_;
    normalize();
    return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.conductor_ != b.conductor_) {
        if (!(a.is_rational() && b.is_rational())) return false;
        return a.num_[0] == b.num_[0] && a.den_ == b.den_;
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    if (is_rational()) {
        std::vector<mpz_class> v(num_.size(), mpz_class(0));
        v[0] = den_;
        return CyclotomicNumber(conductor_, std::move(v), num_[0]);
    }
    // Solve (this) * x = 1 through the multiplication matrix over Q.
    const auto& f = field_info(conductor_);
    const int phi = f.phi;
    std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1));
    for (int j = 0; j < phi; ++j) {
        CyclotomicNumber col = *this * zeta_power(conductor_, j);
        auto cc = col.coefficients();
        for (int i = 0; i < phi; ++i) m[i][j] = cc[i];
    }
    m[0][phi] = 1;
    for (int col = 0, row = 0; col < phi; ++col, ++row) {
        int piv = row;
        while (piv < phi && m[piv][col] == 0) ++piv;
        if (piv == phi) throw DomainError("singular multiplication matrix in cyclotomic inverse");
        std::swap(m[piv], m[row]);
        mpq_class inv = 1 / m[row][col];
        for (int k = col; k <= phi; ++k) m[row][k] *= inv;
        for (int r = 0; r < phi; ++r) {
            if (r == row || m[r][col] == 0) continue;
            mpq_class factor = m[r][col];
            for (int k = col; k <= phi; ++k) m[r][k] -= factor * m[row][k];
        }
    }
    std::vector<mpq_class> x(phi);
    for (int i = 0; i < phi; ++i) x[i] = m[i][phi];
    return from_coefficients(conductor_, x);
}

CyclotomicNumber CyclotomicNumber::galois(long k) const {
    if (std::gcd(k < 0 ? -k : k, static_cast<long>(conductor_)) != 1)
        throw InvalidArgument("galois: exponent must be coprime to the conductor");
    CyclotomicNumber r(conductor_);
    for (std::size_t j = 0; j < num_.size(); ++j) {
        if (num_[j] == 0) continue;
        r += zeta_power(conductor_, k * static_cast<long>(j)) * CyclotomicNumber(conductor_, mpq_class(num_[j]));
    }
    return r * CyclotomicNumber(conductor_, mpq_class(mpz_class(1), den_));
}

std::string CyclotomicNumber::to_string() const {
    if (is_rational()) return rational_value().get_str();
    auto cs = coefficients();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = cs.size(); k-- > 0;) {
        if (cs[k] == 0) continue;
        if (first) {
            if (cs[k] < 0) os << "-";
        } else {
            os << (cs[k] < 0 ? " - " : " + ");
        }
        os << mpq_class(abs(cs[k])).get_str() << "*z^" << k;
        first = false;
    }
    return os.str();
}

CyclotomicNumber specialize(const LaurentPolynomial& poly, int l) {
    if (l < 2) throw InvalidArgument("specialize: l must be >= 2");
    const int n = canonical_conductor(l);
    if (l == 2) {
        mpz_class s = 0;
        for (const auto& [e, c] : poly.terms()) s += (e % 2 == 0 ? c : mpz_class(-c));
        return CyclotomicNumber(1, mpq_class(s));
    }
    const auto& f = field_info(n);
    std::vector<mpz_class> v(std::max(l, f.phi), mpz_class(0));
    for (const auto& [e, c] : poly.terms()) {
        int r = e % l;
        if (r < 0) r += l;
        v[r] += c;
    }
    reduce_mod(v, f);
    return CyclotomicNumber(n, std::move(v), 1);
}

}  // namespace flk::qarith
