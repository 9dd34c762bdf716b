#pragma once

// Exact balanced q-integers, Gaussian binomials and arithmetic in the
// cyclotomic fields Q(zeta_n).

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace flk::qarith {

/// Integer polynomial, coefficients in ascending degree order.
using IntPolynomial = std::vector<mpz_class>;

/// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n. Memoized.
const IntPolynomial& cyclotomic_polynomial(int n);

/// Euler's totient, i.e. the degree of cyclotomic_polynomial(n).
int euler_phi(int n);

std::string to_string(const IntPolynomial& p, char var = 'x');

// ---------------------------------------------------------------------------

/// Finite Laurent polynomial in q with integer coefficients. Zero
/// coefficients are never stored, so equality is term-wise.
class LaurentPolynomial {
public:
    using Terms = std::map<int, mpz_class>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(long constant);
    static LaurentPolynomial monomial(int exponent, const mpz_class& coeff = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coefficient(int exponent) const;
    int min_exponent() const;  ///< requires !is_zero()
    int max_exponent() const;  ///< requires !is_zero()

    /// Image under q -> q^{-1}.
    LaurentPolynomial bar() const;
    bool is_bar_invariant() const { return bar() == *this; }

    /// Exact quotient; throws InexactDivision when the remainder is nonzero.
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
    LaurentPolynomial operator-() const;
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    /// Sorted `c*q^e` terms, highest exponent first; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void add_term(int exponent, const mpz_class& coeff);
    Terms terms_;
};

/// [n] = (q^n - q^-n)/(q - q^-1) = q^{n-1} + q^{n-3} + ... + q^{1-n}.
LaurentPolynomial q_integer(int n);
/// [n]! = [n][n-1]...[1]; [0]! = 1.
LaurentPolynomial q_factorial(int n);
/// [m over n] = [m]! / ([n]! [m-n]!), computed by exact division.
LaurentPolynomial q_binomial(int m, int n);

// ---------------------------------------------------------------------------

/// Element of Q(zeta_n) stored as its canonical residue modulo the n-th
/// cyclotomic polynomial: a numerator vector of length phi(n) over a common
/// positive denominator, reduced to lowest terms.
///
/// Conductors 1 and 2 both describe Q. Binary operations require equal
/// conductors unless one operand is rational, in which case it is promoted.
class CyclotomicNumber;
CyclotomicNumber specialize(const LaurentPolynomial& poly, int l);

class CyclotomicNumber {
public:
    CyclotomicNumber();  ///< zero of Q
    explicit CyclotomicNumber(int conductor);
    CyclotomicNumber(int conductor, const mpq_class& value);
    /// Rational constant in Q (conductor 1).
    static CyclotomicNumber rational(const mpq_class& value) { return CyclotomicNumber(1, value); }
    /// zeta_n^k for any integer k.
    static CyclotomicNumber zeta_power(int conductor, long k);
    /// Element with the given coefficients in the basis 1, zeta, ..., zeta^{phi-1}.
    static CyclotomicNumber from_coefficients(int conductor, const std::vector<mpq_class>& coeffs);

    int conductor() const { return conductor_; }
    int degree() const { return static_cast<int>(num_.size()); }
    std::vector<mpq_class> coefficients() const;
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    mpq_class rational_value() const;  ///< requires is_rational()

    CyclotomicNumber inverse() const;  ///< throws DomainError on zero
    /// Image under zeta -> zeta^k; k must be coprime to the conductor.
    CyclotomicNumber galois(long k) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    CyclotomicNumber operator-() const;
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    /// Rational values print as "p/q"; others as `c*z^k` terms, highest power first.
    std::string to_string() const;

private:
    friend CyclotomicNumber specialize(const LaurentPolynomial& poly, int l);
    CyclotomicNumber(int conductor, std::vector<mpz_class> num, mpz_class den);
    void normalize();
    void promote_to(int conductor);
    static int common_conductor(const CyclotomicNumber& a, const CyclotomicNumber& b);

    int conductor_ = 1;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

/// Substitute q -> zeta_l (q^{-1} -> zeta_l^{l-1}) and reduce.
CyclotomicNumber specialize(const LaurentPolynomial& poly, int l);

}  // namespace flk::qarith
