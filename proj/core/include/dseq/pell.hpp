#pragma once

#include <array>
#include <cstdint>

#include "dseq/integers.hpp"
#include "dseq/quadint.hpp"

namespace dseq {

// Pell and Pell-Lucas values at one index: P_0=0, P_1=1, Q_0=Q_1=2, both
// advancing by s_{n+1} = 2 s_n + s_{n-1}.
struct PellPair {
    std::uint32_t n = 0;
    Int p;
    Int q;

    bool operator==(const PellPair& rhs) const = default;
};

// Iterative exact evaluation.
PellPair pell(std::uint32_t n);

// Same pair via the closed forms P_n = (alpha^n - beta^n) / (2 sqrt 2) and
// Q_n = alpha^n + beta^n with alpha = 1 + sqrt 2, beta = 1 - sqrt 2, computed
// exactly in Q(sqrt 2). Throws std::logic_error if a component fails to land
// in Z (it never should; the throw keeps the check honest).
PellPair binet(std::uint32_t n);

using QuadMat3 = std::array<std::array<QuadInt, 3>, 3>;

// The generator matrix [[1,0,s2],[0,1+s2,0],[s2,0,1]] with s2 = sqrt 2.
QuadMat3 pell_matrix();

// n-th power by repeated exact multiplication (n = 0 gives the identity).
QuadMat3 pell_matrix_power(std::uint32_t n);

// Whether pell_matrix_power(n) equals the closed form
// [[Q_n/2, 0, P_n s2], [0, Q_n/2 + P_n s2, 0], [P_n s2, 0, Q_n/2]].
bool matrix_power_matches_closed_form(std::uint32_t n);

// The four product identities linking P and Q across index shifts, n, l >= 0:
//   qq:       Q_n Q_{n+l}  = Q_{2n+l} + (-1)^n Q_l
//   pq:       P_n Q_{n+l}  = P_{2n+l} + (-1)^{n+1} P_l
//   pq_swap:  P_{n+l} Q_n  = P_{2n+l} + (-1)^n P_l
//   pp:     8 P_n P_{n+l}  = Q_{2n+l} + (-1)^{n+1} Q_l
enum class PellIdentity { qq, pq, pq_swap, pp };

struct PellIdentityCheck {
    PellIdentity which;
    std::uint32_t n = 0;
    std::uint32_t l = 0;
    Int lhs;
    Int rhs;
    bool holds = false;
};

PellIdentityCheck check_pell_identity(PellIdentity which, std::uint32_t n, std::uint32_t l);

// Generalized Pell-Fibonacci-Lucas value r_n^{p,q} = p P_{n-1} + q Q_n, n >= 1.
// Throws std::invalid_argument for n = 0.
Int gen_pfl(const Int& p, const Int& q, std::uint32_t n);

// Shift identity p P_{n+1} + q Q_n = r_n^{p,q} + r_{n+1}^{2p,0}, n >= 1.
bool check_gen_pfl_shift_identity(const Int& p, const Int& q, std::uint32_t n);

}  // namespace dseq
