#pragma once

#include <stdexcept>

namespace dseq {

// Modulus fails the primality check (field and profile construction).
class NonPrimeModulus : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// All three seeds vanish mod pi, so the residue sequence is identically zero.
class AllZeroSequence : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The residue sequence has a nonzero preperiod; D-polynomial and code
// construction need a purely periodic sequence.
class NotPurelyPeriodic : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Period too short to carry a code (period < 3).
class DegenerateSequence : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Mixed-modulus field or polynomial operands.
class ModulusMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Quaternion operands from different algebras H(alpha, beta).
class AlgebraMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dseq
