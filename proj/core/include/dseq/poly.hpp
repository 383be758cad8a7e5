#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dseq/fp.hpp"

namespace dseq {

// Polynomial over Z_p, dense ascending coefficients (index = exponent), kept
// canonical: no trailing zeros, so the zero polynomial has an empty vector and
// degree() == -1 (the sentinel for "minus infinity", distinct from degree 0).
class Poly {
public:
    explicit Poly(std::int64_t modulus);                                   // zero polynomial
    Poly(std::int64_t modulus, std::vector<std::int64_t> coefficients);    // reduces + trims

    static Poly monomial(std::int64_t modulus, std::size_t degree, std::int64_t coefficient = 1);
    // x^n - 1, the cyclic ring modulus
    static Poly x_pow_minus_one(std::int64_t modulus, std::size_t n);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coefficient(std::size_t i) const;  // 0 beyond degree
    bool is_monic() const;
    std::size_t weight() const;                     // number of nonzero coefficients

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator-() const;
    bool operator==(const Poly& rhs) const = default;

    // Multiplication by x^k (degree shift).
    Poly shifted(std::size_t k) const;

    Fp eval(const Fp& at) const;  // Horner

private:
    std::int64_t modulus_;
    std::vector<std::int64_t> coeffs_;
    void canonicalize();
};

// Euclidean division: returns (quotient, remainder) with deg r < deg divisor.
// Throws std::domain_error on zero divisor, ModulusMismatch on mixed moduli.
std::pair<Poly, Poly> poly_divmod(const Poly& dividend, const Poly& divisor);

inline Poly operator/(const Poly& a, const Poly& b) { return poly_divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

// Monic gcd; gcd(0, 0) throws std::invalid_argument.
Poly poly_gcd(Poly a, Poly b);

// "1 + 2*x + 5*x^3" form: ascending, zero terms omitted, unit coefficients
// implicit; the zero polynomial prints "0".
std::string poly_to_string(const Poly& p);

}  // namespace dseq
