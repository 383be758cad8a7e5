#include "dseq/quaternion.hpp"

#include <stdexcept>
#include <utility>

#include "dseq/errors.hpp"
#include "dseq/pell.hpp"

namespace dseq {

QuaternionAlgebra::QuaternionAlgebra(Rat a, Rat b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha == 0 || beta == 0) {
        throw std::invalid_argument("algebra parameters must be nonzero");
    }
}

Quaternion::Quaternion(QuaternionAlgebra algebra, std::array<Rat, 4> coefficients)
    : algebra_(std::move(algebra)), c_(std::move(coefficients)) {}

void Quaternion::check_same_algebra(const Quaternion& rhs) const {
    if (!(algebra_ == rhs.algebra_)) {
        throw AlgebraMismatch("operands live in different quaternion algebras");
    }
}

bool Quaternion::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Quaternion Quaternion::operator+(const Quaternion& rhs) const {
    check_same_algebra(rhs);
    return {algebra_, {c_[0] + rhs.c_[0], c_[1] + rhs.c_[1], c_[2] + rhs.c_[2], c_[3] + rhs.c_[3]}};
}

Quaternion Quaternion::operator-(const Quaternion& rhs) const {
    check_same_algebra(rhs);
    return {algebra_, {c_[0] - rhs.c_[0], c_[1] - rhs.c_[1], c_[2] - rhs.c_[2], c_[3] - rhs.c_[3]}};
}

Quaternion Quaternion::operator*(const Quaternion& rhs) const {
    check_same_algebra(rhs);
    const Rat& al = algebra_.alpha;
    const Rat& be = algebra_.beta;
    const auto& x = c_;
    const auto& y = rhs.c_;
    return {algebra_,
            {x[0] * y[0] + al * x[1] * y[1] + be * x[2] * y[2] - al * be * x[3] * y[3],
             x[0] * y[1] + x[1] * y[0] - be * x[2] * y[3] + be * x[3] * y[2],
             x[0] * y[2] + x[2] * y[0] + al * x[1] * y[3] - al * x[3] * y[1],
             x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]}};
}

Quaternion Quaternion::scaled(const Rat& s) const {
    return {algebra_, {c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s}};
}

Quaternion gen_pfl_quaternion(const Int& p, const Int& q, std::uint32_t n,
                              const QuaternionAlgebra& algebra) {
    if (n == 0) throw std::invalid_argument("generalized values start at index 1");
    std::array<Rat, 4> c;
    for (std::uint32_t i = 0; i < 4; ++i) c[i] = Rat(gen_pfl(p, q, n + i));
    return {algebra, std::move(c)};
}

ScalarDecomposition scalar_product_decomposition(std::uint32_t n, std::uint32_t m,
                                                 const Int& p, const Int& q,
                                                 const Int& pp, const Int& qq,
                                                 bool drop_sign_on_second_term) {
    if (n < 1 || m <= n) throw std::invalid_argument("indices must satisfy 1 <= n < m");
    const int sign = (n % 2 == 0) ? 1 : -1;
    const int second_sign = drop_sign_on_second_term ? 1 : sign;

    ScalarDecomposition out;
    out.n = n;
    out.m = m;
    out.lhs = 64 * gen_pfl(p, q, n) * gen_pfl(pp, qq, m);
    out.terms = {8 * gen_pfl(8 * p * qq, 8 * q * qq, m + n),
                 8 * gen_pfl(8 * sign * pp * q, 8 * second_sign * q * qq, m - n),
                 8 * gen_pfl(sign * 8 * p * qq, sign * p * pp, m - n),
                 8 * gen_pfl(sign * 16 * p * qq, Int(0), m - n + 1),
                 8 * gen_pfl(8 * pp * q, p * pp, m + n - 2),
                 8 * gen_pfl(16 * pp * q, Int(0), m + n - 1)};
    out.term_sum = Int(0);
    for (const auto& t : out.terms) out.term_sum += t;
    out.residual = out.lhs - out.term_sum;
    return out;
}

}  // namespace dseq
