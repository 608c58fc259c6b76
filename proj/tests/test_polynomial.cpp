#include <catch2/catch_amalgamated.hpp>

#include "lenard/polynomial.hpp"

#include "testutil.hpp"

using lenard::make_vars;
using lenard::Monomial;
using lenard::Polynomial;
using lenard::Rational;

namespace {
const auto AB = make_vars({"A", "B"});
const auto ABC = make_vars({"A", "B", "C"});

Polynomial var(const lenard::VarNamesPtr& vs, std::size_t i) { return Polynomial::variable(vs, i); }
}  // namespace

TEST_CASE("polynomial basics", "[polynomial]") {
    const Polynomial A = var(AB, 0), B = var(AB, 1);
    const Polynomial z(AB);
    CHECK(z.is_zero());
    CHECK((A - A).is_zero());
    CHECK((A + B) * (A - B) == A * A - B * B);
    CHECK((A + B).total_degree() == 1);
    CHECK((A * A * B).degree_in(0) == 2);
    CHECK((A * A * B).degree_in(1) == 1);
    CHECK(Polynomial::constant(AB, Rational(1, 2)).is_constant());
    CHECK_FALSE(A.is_constant());
}

TEST_CASE("graded-lex leading term", "[polynomial]") {
    const Polynomial A = var(AB, 0), B = var(AB, 1);
    // A^2 beats A*B beats B^2 beats A
    const Polynomial p = A + B * B + A * B + A * A;
    const auto& [m, c] = p.leading_term();
    CHECK(m == Monomial{2, 0});
    CHECK(c.is_one());
    CHECK(p.str() == "A^2 + A*B + B^2 + A");
}

TEST_CASE("derivative and evaluation", "[polynomial]") {
    const Polynomial A = var(ABC, 0), B = var(ABC, 1);
    const Polynomial p = (A * A * B).scaled(Rational(1, 2));  // A^2 B / 2
    CHECK(p.derivative(0) == A * B);
    CHECK(p.derivative(2).is_zero());
    const std::vector<Rational> pt = {Rational(2), Rational(3), Rational(0)};
    CHECK(p.evaluate(pt) == Rational(6));
    CHECK(p.substitute(0, Rational(2)) == B.scaled(Rational(2)));
}

TEST_CASE("divmod and exact division", "[polynomial]") {
    const Polynomial A = var(AB, 0), B = var(AB, 1);
    const Polynomial f = (A + B) * (A - B);
    auto [q, r] = divmod(f, A + B);
    CHECK(r.is_zero());
    CHECK(q == A - B);
    CHECK(exact_div(f, A - B) == A + B);
    CHECK_THROWS_AS(exact_div(A * A + B, A + B), lenard::invalid_value);
    auto [q2, r2] = divmod(A * A + B, A + B);
    CHECK(q2 * (A + B) + r2 == A * A + B);
}

TEST_CASE("gcd on hand cases", "[polynomial]") {
    const Polynomial A = var(AB, 0), B = var(AB, 1);
    const Polynomial one = Polynomial::constant(AB, 1);
    CHECK(poly_gcd(A * A - B * B, A + B) == A + B);
    CHECK(poly_gcd(A, B) == one);
    CHECK(poly_gcd(Polynomial(AB), A * B) == A * B);
    CHECK(poly_gcd((A + B).scaled(Rational(3)), (A + B).scaled(Rational(5, 7))) == A + B);
    // content recursion across variables
    const Polynomial C3 = var(ABC, 2), A3 = var(ABC, 0), B3 = var(ABC, 1);
    const Polynomial g = A3 * B3 + C3;
    const Polynomial p1 = g * (A3 + B3 * C3);
    const Polynomial p2 = g * (C3 * C3 + A3);
    CHECK(poly_gcd(p1, p2) == g);
}

TEST_CASE("gcd multiplicativity on random inputs", "[polynomial][property]") {
    testutil::Rng rng(20240817);
    for (int it = 0; it < 25; ++it) {
        const Polynomial a = rng.nonzero_polynomial(AB, 3, 3);
        const Polynomial b = rng.nonzero_polynomial(AB, 3, 3);
        const Polynomial h = rng.nonzero_polynomial(AB, 2, 2);
        const Polynomial g = poly_gcd(a, b);
        // gcd divides both arguments
        CHECK(exact_div(a, g) * g == a);
        CHECK(exact_div(b, g) * g == b);
        // quotients are coprime
        CHECK(poly_gcd(exact_div(a, g), exact_div(b, g)).is_one());
        // gcd(ah, bh) = monic(h * gcd(a, b))
        const Polynomial lhs = poly_gcd(a * h, b * h);
        const Polynomial expect = (h * g).scaled((h * g).leading_coefficient().inverse());
        CHECK(lhs == expect);
    }
}

TEST_CASE("canonical-form soundness on random pairs", "[polynomial][property]") {
    testutil::Rng rng(7);
    for (int it = 0; it < 40; ++it) {
        const Polynomial p = rng.polynomial(ABC, 3, 4);
        const Polynomial q = rng.polynomial(ABC, 3, 4);
        CHECK((p * q - q * p).is_zero());
        const Polynomial s = (p + q) * (p + q) - p * p - (p * q).scaled(2) - q * q;
        CHECK(s.is_zero());
    }
}

TEST_CASE("exponent overflow is a hard error", "[polynomial]") {
    const Polynomial A = var(AB, 0);
    const Polynomial big = A.pow(1u << 16).pow(1u << 14);  // 2^30 = kMaxExponent boundary
    CHECK_THROWS_AS(big * A.pow(2), lenard::exponent_overflow);
}

TEST_CASE("printing round-trips through terms", "[polynomial]") {
    const Polynomial A = var(AB, 0), B = var(AB, 1);
    const Polynomial p = (A * B).scaled(Rational(-1, 2)) + B.pow(3) - Polynomial::constant(AB, Rational(7));
    CHECK(p.str() == "B^3 - 1/2*A*B - 7");
    CHECK(Polynomial(AB).str() == "0");
    CHECK((-A).str() == "-A");
}
