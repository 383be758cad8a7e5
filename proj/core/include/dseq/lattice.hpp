#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dseq/integers.hpp"
#include "dseq/quaternion.hpp"

namespace dseq {

// Z-span of {1} and {8 R_k^{1,0}, 8 R_k^{0,1} : 1 <= k <= depth} inside the
// 4-dimensional coordinate space of H(alpha, beta). Coordinates are scaled by
// the generators' common denominator and reduced to a Hermite-normal-form
// integer basis, so membership is exact integer elimination.
struct OrderLattice {
    QuaternionAlgebra algebra;
    std::size_t depth = 0;
    std::vector<Quaternion> generators;
    Int denominator;                          // common denominator of generator coords
    std::vector<std::array<Int, 4>> basis;    // HNF rows, scaled by denominator
    std::size_t rank = 0;                     // = basis.size(), <= 4
};

OrderLattice build_order_lattice(const QuaternionAlgebra& algebra, std::size_t depth);

// certificate[i] multiplies basis[i]; verified by re-substitution before return.
struct MembershipResult {
    bool member = false;
    std::vector<Int> certificate;
};

// Throws AlgebraMismatch when x lives in a different algebra.
MembershipResult order_membership(const Quaternion& x, const OrderLattice& lattice);

// Multiplies sampled generator pairs and tests membership of each product.
// Deterministic (fixed seed); per-sample verdicts are exact. Since members are
// closed under addition, products of generators decide closure for the whole span.
struct ClosureCounterexample {
    std::size_t left_index = 0;   // indices into lattice.generators
    std::size_t right_index = 0;
    std::array<Rat, 4> product;
};

struct ClosureReport {
    std::size_t samples = 0;
    std::size_t members = 0;
    std::size_t non_members = 0;
    bool rational_parameters = false;  // flagged: non-integer alpha/beta denominators
    std::vector<ClosureCounterexample> counterexamples;  // at most 5 kept
};

// Requires depth >= 4. Samples pairs uniformly with a fixed seed.
ClosureReport order_closure_check(const QuaternionAlgebra& algebra, std::size_t depth,
                                  std::size_t samples);

}  // namespace dseq
