#include "doctest.h"

#include "flk/errors.hpp"
#include "flk/qarith.hpp"
#include "oracles/qbinom_oracle.hpp"

#include <complex>
#include <numbers>

using namespace flk::qarith;

namespace {

constexpr double kNumericTol = 1e-9;

oracle::Laurent to_oracle(const LaurentPolynomial& p) {
    oracle::Laurent out;
    for (const auto& [e, c] : p.terms()) out[e] = c.get_si();
    return out;
}

std::complex<double> evaluate(const CyclotomicNumber& x) {
    const auto coeffs = x.coefficients();
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s += coeffs[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / x.conductor());
    return s;
}

}  // namespace

TEST_CASE("balanced q-integers") {
    CHECK(q_integer(0).is_zero());
    CHECK(q_integer(1) == LaurentPolynomial(1));
    const auto q3 = q_integer(3);
    CHECK(q3.terms().size() == 3);
    CHECK(q3.coefficient(-2) == 1);
    CHECK(q3.coefficient(0) == 1);
    CHECK(q3.coefficient(2) == 1);
    CHECK(q3.coefficient(1) == 0);
    CHECK(q_factorial(0) == LaurentPolynomial(1));
    CHECK(q_factorial(3) == q_integer(3) * q_integer(2));
}

TEST_CASE("q-binomials agree with the Pascal recursion") {
    for (int m = 0; m <= 14; ++m)
        for (int n = 0; n <= m; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            const auto b = q_binomial(m, n);
            CHECK(to_oracle(b) == oracle::gaussian_binomial(m, n));
            CHECK(b.is_bar_invariant());
            CHECK(b == q_binomial(m, m - n));
        }
}

TEST_CASE("q-binomial at q = 1 is the ordinary binomial") {
    for (int m = 0; m <= 12; ++m) {
        mpz_class row = 1;
        for (int n = 0; n <= m; ++n) {
            mpz_class s = 0;
            const auto b = q_binomial(m, n);
            for (const auto& [e, c] : b.terms()) s += c;
            CHECK(s == row);
            row = row * (m - n) / (n + 1);
        }
    }
}

TEST_CASE("cyclotomic polynomials match the Mobius product") {
    for (int n = 1; n <= 40; ++n) {
        CAPTURE(n);
        const auto& phi = cyclotomic_polynomial(n);
        const auto ref = oracle::cyclotomic(n);
        REQUIRE(phi.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(phi[i].get_si() == ref[i]);
        CHECK(euler_phi(n) == static_cast<int>(ref.size()) - 1);
    }
}

TEST_CASE("specialization: exact zero test matches the long-division oracle") {
    for (int l : {3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        for (int m = 1; m <= 2 * l + 1; ++m)
            for (int n = 0; n <= m; ++n) {
                CAPTURE(l);
                CAPTURE(m);
                CAPTURE(n);
                const auto b = q_binomial(m, n);
                const auto v = specialize(b, l);
                CHECK(v.is_zero() == oracle::vanishes_at_root_of_unity(to_oracle(b), l));
                CHECK(std::abs(evaluate(v) - oracle::evaluate(to_oracle(b), l)) < kNumericTol * (1 + std::abs(evaluate(v))));
            }
    }
}

TEST_CASE("known values at roots of unity") {
    for (int t = 1; t <= 4; ++t) CHECK(specialize(q_binomial(10, t), 5).is_zero());
    CHECK(specialize(q_binomial(10, 5), 5) == CyclotomicNumber::rational(2));
    CHECK(specialize(q_integer(5), 5).is_zero());
    CHECK(!specialize(q_integer(4), 5).is_zero());
    // q-Lucas: [2l over l] specializes to C(2, 1).
    for (int l : {3, 5, 7, 9}) CHECK(specialize(q_binomial(2 * l, l), l) == CyclotomicNumber::rational(2));
}

TEST_CASE("cyclotomic field arithmetic") {
    const auto z = CyclotomicNumber::zeta_power(5, 1);
    CHECK(CyclotomicNumber::zeta_power(5, 5).is_one());
    CHECK(CyclotomicNumber::zeta_power(5, -1) * z == CyclotomicNumber::rational(1));
    CyclotomicNumber sum(5);
    for (int k = 0; k < 5; ++k) sum += CyclotomicNumber::zeta_power(5, k);
    CHECK(sum.is_zero());
    const auto x = z + CyclotomicNumber(5, mpq_class(3, 2));
    CHECK((x * x.inverse()).is_one());
    CHECK(x.galois(2).galois(3) == x);
    CHECK(CyclotomicNumber::zeta_power(2, 1) == CyclotomicNumber::rational(-1));
    CHECK(CyclotomicNumber::zeta_power(2, 1).conductor() == 1);
    CHECK((z - z).is_zero());
    CHECK(CyclotomicNumber::rational(mpq_class(1, 3)).to_string() == "1/3");
    CHECK_THROWS_AS(CyclotomicNumber(5).inverse(), flk::DomainError);
    CHECK_THROWS_AS(CyclotomicNumber::zeta_power(3, 1) + z, flk::InvalidArgument);
}

TEST_CASE("Laurent division") {
    const auto a = q_integer(6);
    CHECK(a.divide_exact(q_integer(3)) * q_integer(3) == a);
    CHECK_THROWS_AS(q_integer(5).divide_exact(q_integer(2)), flk::InexactDivision);
    CHECK(LaurentPolynomial().to_string() == "0");
}
