#pragma once

#include <cstdint>

namespace dseq {

// Deterministic trial-division primality test for the modulus range we accept.
bool is_prime(std::int64_t n);

// Throws NonPrimeModulus unless 2 <= p < 2^31 and p is prime. The upper bound
// keeps every product of two reduced residues inside int64.
void require_prime_modulus(std::int64_t p);

// Element of Z_p for a runtime prime p. Value is always reduced into [0, p).
// Mixed-modulus arithmetic throws ModulusMismatch.
class Fp {
public:
    Fp(std::int64_t value, std::int64_t modulus);  // reduces, accepts negatives

    std::int64_t value() const { return value_; }
    std::int64_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    Fp operator+(const Fp& rhs) const;
    Fp operator-(const Fp& rhs) const;
    Fp operator*(const Fp& rhs) const;
    Fp operator/(const Fp& rhs) const;  // throws std::domain_error on zero divisor
    Fp operator-() const;

    Fp inverse() const;                 // throws std::domain_error on zero
    Fp pow(std::uint64_t e) const;

    bool operator==(const Fp& rhs) const = default;

private:
    std::int64_t value_;
    std::int64_t modulus_;
    void check_same_modulus(const Fp& rhs) const;
};

// Reduction helper shared with the polynomial layer: maps any int64 into [0, p).
std::int64_t mod_reduce(std::int64_t value, std::int64_t p);

// Modular inverse in [0, p); throws std::domain_error when value = 0 mod p.
std::int64_t mod_inverse(std::int64_t value, std::int64_t p);

}  // namespace dseq
