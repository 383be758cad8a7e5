#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "dseq/integers.hpp"

namespace dseq {

// Generalized quaternion algebra H(alpha, beta) over Q with basis 1, e1, e2, e3:
//   e1^2 = alpha, e2^2 = beta, e1 e2 = e3 = -e2 e1,
//   e1 e3 = alpha e2 = -e3 e1, e3 e2 = beta e1 = -e2 e3, e3^2 = -alpha beta.
// The e3^2 entry is forced by associativity: e3^2 = (e1 e2)(e1 e2) = -alpha beta.
struct QuaternionAlgebra {
    Rat alpha;
    Rat beta;

    QuaternionAlgebra(Rat a, Rat b);  // throws std::invalid_argument when either is 0
    bool operator==(const QuaternionAlgebra& rhs) const = default;
};

class Quaternion {
public:
    Quaternion(QuaternionAlgebra algebra, std::array<Rat, 4> coefficients);

    const QuaternionAlgebra& algebra() const { return algebra_; }
    const std::array<Rat, 4>& coefficients() const { return c_; }
    bool is_zero() const;

    Quaternion operator+(const Quaternion& rhs) const;
    Quaternion operator-(const Quaternion& rhs) const;
    Quaternion operator*(const Quaternion& rhs) const;  // table above, bilinear
    Quaternion scaled(const Rat& s) const;
    bool operator==(const Quaternion& rhs) const = default;

private:
    QuaternionAlgebra algebra_;
    std::array<Rat, 4> c_;
    void check_same_algebra(const Quaternion& rhs) const;
};

// R_n^{p,q} = r_n + r_{n+1} e1 + r_{n+2} e2 + r_{n+3} e3, n >= 1.
Quaternion gen_pfl_quaternion(const Int& p, const Int& q, std::uint32_t n,
                              const QuaternionAlgebra& algebra);

// Six-term expansion of the scalar product 64 r_n^{p,q} r_m^{p',q'}, 1 <= n < m:
//   8 r_{m+n}^{8pq', 8qq'} + 8 r_{m-n}^{8(-1)^n p'q, 8(-1)^n qq'}
//   + 8 r_{m-n}^{(-1)^n 8pq', (-1)^n pp'} + 8 r_{m-n+1}^{(-1)^n 16pq', 0}
//   + 8 r_{m+n-2}^{8p'q, pp'} + 8 r_{m+n-1}^{16p'q, 0}.
// residual = lhs - sum(terms); zero whenever the identity holds.
// drop_sign_on_second_term replaces the second term's q-superscript 8(-1)^n qq'
// by 8qq' (a variant that fails; kept for the regression suite).
struct ScalarDecomposition {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    Int lhs;
    std::array<Int, 6> terms;
    Int term_sum;
    Int residual;
};

ScalarDecomposition scalar_product_decomposition(std::uint32_t n, std::uint32_t m,
                                                 const Int& p, const Int& q,
                                                 const Int& pp, const Int& qq,
                                                 bool drop_sign_on_second_term = false);

}  // namespace dseq
