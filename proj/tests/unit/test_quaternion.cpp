#include <doctest.h>

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "dseq/errors.hpp"
#include "dseq/integers.hpp"
#include "dseq/pell.hpp"
#include "dseq/quaternion.hpp"

using namespace dseq;

namespace {

Quaternion basis(const QuaternionAlgebra& alg, int i, const Rat& scale = 1) {
    std::array<Rat, 4> c{0, 0, 0, 0};
    c[static_cast<std::size_t>(i)] = scale;
    return Quaternion(alg, c);
}

}  // namespace

TEST_CASE("multiplication table of H(alpha, beta)") {
    const QuaternionAlgebra alg(2, 3);
    const auto e0 = basis(alg, 0);
    const auto e1 = basis(alg, 1);
    const auto e2 = basis(alg, 2);
    const auto e3 = basis(alg, 3);

    CHECK(e1 * e1 == basis(alg, 0, 2));        // e1^2 = alpha
    CHECK(e2 * e2 == basis(alg, 0, 3));        // e2^2 = beta
    CHECK(e3 * e3 == basis(alg, 0, -6));       // e3^2 = -alpha beta
    CHECK(e1 * e2 == e3);
    CHECK(e2 * e1 == basis(alg, 3, -1));       // anticommute
    CHECK(e1 * e3 == basis(alg, 2, 2));        // e1 e3 = alpha e2
    CHECK(e3 * e1 == basis(alg, 2, -2));
    CHECK(e3 * e2 == basis(alg, 1, 3));        // e3 e2 = beta e1
    CHECK(e2 * e3 == basis(alg, 1, -3));
    CHECK(e0 * e3 == e3);

    CHECK_THROWS_AS(QuaternionAlgebra(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(QuaternionAlgebra(2, 0), std::invalid_argument);
}

TEST_CASE("bilinearity, associativity, distributivity on random rationals") {
    const QuaternionAlgebra alg(Rat(2), Rat(-3));
    std::mt19937 rng(31337);
    const auto draw = [&rng]() {
        const std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
        const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 4);
        return Rat(num, den);
    };
    const auto draw_quat = [&]() {
        return Quaternion(alg, {draw(), draw(), draw(), draw()});
    };
    for (int i = 0; i < 300; ++i) {
        const auto x = draw_quat();
        const auto y = draw_quat();
        const auto z = draw_quat();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x - y) + y == x);
        CHECK(x.scaled(Rat(3, 2)) + x.scaled(Rat(-3, 2)) ==
              Quaternion(alg, {0, 0, 0, 0}));
    }
}

TEST_CASE("mixed algebras refuse to combine") {
    const Quaternion x(QuaternionAlgebra(1, 1), {1, 0, 0, 0});
    const Quaternion y(QuaternionAlgebra(2, 1), {1, 0, 0, 0});
    CHECK_THROWS_AS(x + y, AlgebraMismatch);
    CHECK_THROWS_AS(x * y, AlgebraMismatch);
    CHECK_THROWS_AS(x - y, AlgebraMismatch);
}

TEST_CASE("quaternions packing four consecutive generalized values") {
    const QuaternionAlgebra alg(1, 1);
    const auto r12 = gen_pfl_quaternion(1, 0, 2, alg);
    CHECK(r12.coefficients() == std::array<Rat, 4>{1, 2, 5, 12});

    const auto r01 = gen_pfl_quaternion(0, 1, 1, alg);
    CHECK(r01.coefficients() == std::array<Rat, 4>{2, 6, 14, 34});

    // coordinates are linear in (p, q)
    const auto combo = gen_pfl_quaternion(3, -2, 4, alg);
    const auto p_part = gen_pfl_quaternion(1, 0, 4, alg);
    const auto q_part = gen_pfl_quaternion(0, 1, 4, alg);
    CHECK(combo == p_part.scaled(3) + q_part.scaled(-2));

    CHECK_THROWS_AS(gen_pfl_quaternion(1, 1, 0, alg), std::invalid_argument);
}

TEST_CASE("quaternion vanishes only when both parameters vanish") {
    const QuaternionAlgebra alg(1, 1);
    for (std::int64_t p = -10; p <= 10; ++p) {
        for (std::int64_t q = -10; q <= 10; ++q) {
            for (std::uint32_t n = 1; n <= 20; ++n) {
                const bool zero = gen_pfl_quaternion(p, q, n, alg).is_zero();
                CHECK(zero == (p == 0 && q == 0));
            }
        }
    }
}

TEST_CASE("six-term scalar decomposition: frozen example") {
    const auto d = scalar_product_decomposition(2, 3, 1, 2, 1, 1);
    CHECK(d.lhs == 13312);
    CHECK(d.terms == std::array<Int, 6>{11264, 256, 16, 128, 368, 1280});
    CHECK(d.term_sum == 13312);
    CHECK(d.residual == 0);
}

TEST_CASE("six-term scalar decomposition: residual vanishes on a spot grid") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        for (std::uint32_t m = n + 1; m <= 8; ++m) {
            for (std::int64_t p = -2; p <= 2; ++p) {
                for (std::int64_t q = -2; q <= 2; ++q) {
                    const auto d = scalar_product_decomposition(n, m, p, q, 2, -1);
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(p);
                    CAPTURE(q);
                    CHECK(d.residual == 0);
                    Int sum = 0;
                    for (const auto& t : d.terms) sum += t;
                    CHECK(d.term_sum == sum);
                    CHECK(d.lhs == 64 * gen_pfl(p, q, n) * gen_pfl(2, -1, m));
                }
            }
        }
    }
}

TEST_CASE("dropping the alternating sign breaks the decomposition") {
    const auto bad = scalar_product_decomposition(1, 2, 1, 1, 1, 1, true);
    CHECK(bad.lhs == 896);
    CHECK(bad.term_sum == 1152);
    CHECK(bad.residual != 0);

    const auto good = scalar_product_decomposition(1, 2, 1, 1, 1, 1);
    CHECK(good.lhs == 896);
    CHECK(good.term_sum == 896);
    CHECK(good.residual == 0);

    // even first index: the variant coincides with the corrected form
    const auto even = scalar_product_decomposition(2, 3, 1, 1, 1, 1, true);
    CHECK(even.residual == 0);
}

TEST_CASE("scalar decomposition index preconditions") {
    CHECK_THROWS_AS(scalar_product_decomposition(0, 2, 1, 1, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(scalar_product_decomposition(2, 2, 1, 1, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(scalar_product_decomposition(3, 2, 1, 1, 1, 1),
                    std::invalid_argument);
}

TEST_CASE("integer combinations of same-index quaternions recombine linearly") {
    const QuaternionAlgebra alg(1, 1);
    std::mt19937 rng(555);
    const auto draw = [&rng]() {
        return static_cast<std::int64_t>(rng() % 19) - 9;
    };
    for (int i = 0; i < 200; ++i) {
        const std::int64_t a = draw(), b = draw();
        const std::int64_t p1 = draw(), q1 = draw(), p2 = draw(), q2 = draw();
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 19);
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 19);
        const auto lhs = gen_pfl_quaternion(p1, q1, n, alg).scaled(a) +
                         gen_pfl_quaternion(p2, q2, m, alg).scaled(b);
        const auto rhs = gen_pfl_quaternion(a * p1, a * q1, n, alg) +
                         gen_pfl_quaternion(b * p2, b * q2, m, alg);
        CHECK(lhs == rhs);
    }
}
