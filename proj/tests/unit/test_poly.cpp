#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "dseq/errors.hpp"
#include "dseq/poly.hpp"

using namespace dseq;

namespace {

Poly random_poly(std::mt19937& rng, std::int64_t p, int max_degree) {
    const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = static_cast<std::int64_t>(rng() % static_cast<unsigned>(p));
    return Poly(p, std::move(c));
}

}  // namespace

TEST_CASE("construction canonicalizes: reduce mod p, trim trailing zeros") {
    const Poly a(7, {8, 14, 0, 0});
    CHECK(a.coefficients() == std::vector<std::int64_t>{1});
    CHECK(a.degree() == 0);

    const Poly zero(7);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);  // distinct from degree 0
    CHECK(Poly(7, {0, 0, 0}).is_zero());
    CHECK(Poly(7, {-1, -8}).coefficients() == std::vector<std::int64_t>{6, 6});
}

TEST_CASE("monomial and x^n - 1 constructors") {
    CHECK(Poly::monomial(7, 3).coefficients() == std::vector<std::int64_t>{0, 0, 0, 1});
    CHECK(Poly::monomial(7, 0, 5).coefficients() == std::vector<std::int64_t>{5});
    CHECK(Poly::x_pow_minus_one(7, 6).coefficients() ==
          std::vector<std::int64_t>{6, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("coefficient access, monicity, weight") {
    const Poly p(7, {1, 2, 0, 5});
    CHECK(p.coefficient(0) == 1);
    CHECK(p.coefficient(3) == 5);
    CHECK(p.coefficient(9) == 0);  // beyond degree
    CHECK_FALSE(p.is_monic());
    CHECK(Poly(7, {3, 0, 1}).is_monic());
    CHECK(p.weight() == 3);
    CHECK(Poly(7).weight() == 0);
}

TEST_CASE("ring operations") {
    const Poly one_x(2, {1, 1});
    CHECK((one_x * one_x).coefficients() == std::vector<std::int64_t>{1, 0, 1});

    const Poly f(7, {1, 1});   // x + 1
    const Poly g(7, {6, 1});   // x + 6
    CHECK((f * g).coefficients() == std::vector<std::int64_t>{6, 0, 1});  // x^2 - 1

    CHECK((f - f).is_zero());
    CHECK((-f).coefficients() == std::vector<std::int64_t>{6, 6});
    CHECK((f + g).coefficients() == std::vector<std::int64_t>{0, 2});
    CHECK((f * Poly(7)).is_zero());
}

TEST_CASE("shift and evaluation") {
    CHECK(Poly(7, {1, 2}).shifted(2).coefficients() ==
          std::vector<std::int64_t>{0, 0, 1, 2});
    CHECK(Poly(5, {1, 0, 1}).eval(Fp(2, 5)).value() == 0);  // 4 + 1 = 5
    CHECK(Poly(5, {3, 1}).eval(Fp(0, 5)).value() == 3);     // constant term
    CHECK(Poly(5).eval(Fp(4, 5)).value() == 0);
}

TEST_CASE("euclidean division reproduces the worked syndrome division") {
    // (6x^5 + x^4 + x^3 + 6x^2 + 5x) / (x^4 + 5x^3 + 5x^2 + 2x + 1) mod 7
    const Poly dividend(7, {0, 5, 6, 1, 1, 6});
    const Poly divisor(7, {1, 2, 5, 5, 1});
    const auto [q, r] = poly_divmod(dividend, divisor);
    CHECK(q.coefficients() == std::vector<std::int64_t>{6, 6});        // 6x + 6
    CHECK(r.coefficients() == std::vector<std::int64_t>{1, 1, 6, 4});  // 4x^3+6x^2+x+1
    CHECK(q * divisor + r == dividend);
}

TEST_CASE("division edge cases") {
    const Poly p(7, {1, 2, 5, 5, 1});
    const auto [q, r] = poly_divmod(p, p);
    CHECK(q.coefficients() == std::vector<std::int64_t>{1});
    CHECK(r.is_zero());

    // x^2 + 2x - 1 divides x^6 - 1 mod 7
    CHECK((Poly::x_pow_minus_one(7, 6) % Poly(7, {6, 2, 1})).is_zero());

    CHECK_THROWS_AS(poly_divmod(p, Poly(7)), std::domain_error);
    CHECK_THROWS_AS(poly_divmod(p, Poly(11, {1, 1})), ModulusMismatch);

    // degree(dividend) < degree(divisor): quotient 0, remainder = dividend
    const auto [q2, r2] = poly_divmod(Poly(7, {3}), Poly(7, {0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2.coefficients() == std::vector<std::int64_t>{3});
}

TEST_CASE("divmod round-trip on random pairs") {
    std::mt19937 rng(777);
    for (int i = 0; i < 200; ++i) {
        const Poly a = random_poly(rng, 7, 12);
        Poly b = random_poly(rng, 7, 6);
        if (b.is_zero()) b = Poly(7, {1, 1});
        const auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd examples and normalization") {
    // gcd(x^2 - 1, x - 1) mod 5 -> monic x - 1 printed as x + 4
    const Poly g = poly_gcd(Poly(5, {4, 0, 1}), Poly(5, {4, 1}));
    CHECK(g.coefficients() == std::vector<std::int64_t>{4, 1});

    // gcd(p, 0) -> monic-normalized p
    const Poly m = poly_gcd(Poly(5, {2, 0, 2}), Poly(5));
    CHECK(m.coefficients() == std::vector<std::int64_t>{1, 0, 1});

    CHECK_THROWS_AS(poly_gcd(Poly(5), Poly(5)), std::invalid_argument);
}

TEST_CASE("gcd divides both arguments and is monic") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(rng, 5, 8);
        Poly b = random_poly(rng, 5, 8);
        if (a.is_zero() && b.is_zero()) a = Poly(5, {1});
        const Poly g = poly_gcd(a, b);
        CHECK(g.is_monic());
        if (!a.is_zero()) CHECK((a % g).is_zero());
        if (!b.is_zero()) CHECK((b % g).is_zero());
    }
}

TEST_CASE("ring axioms on random triples across small primes") {
    std::mt19937 rng(2026);
    for (const std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        for (int i = 0; i < 170; ++i) {
            const Poly a = random_poly(rng, p, 6);
            const Poly b = random_poly(rng, p, 6);
            const Poly c = random_poly(rng, p, 6);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
        }
    }
}

TEST_CASE("text form: ascending, zero terms omitted, unit coefficients implicit") {
    CHECK(poly_to_string(Poly(7, {1, 2, 0, 5})) == "1 + 2*x + 5*x^3");
    CHECK(poly_to_string(Poly(7)) == "0");
    CHECK(poly_to_string(Poly(7, {0, 1})) == "x");
    CHECK(poly_to_string(Poly(7, {0, 0, 1})) == "x^2");
    CHECK(poly_to_string(Poly(7, {3})) == "3");
    CHECK(poly_to_string(Poly(7, {3, 0, 2})) == "3 + 2*x^2");
}
