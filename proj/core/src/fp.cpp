#include "dseq/fp.hpp"

#include <stdexcept>
#include <string>

#include "dseq/errors.hpp"

namespace dseq {

namespace {
constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

void require_prime_modulus(std::int64_t p) {
    if (p > kMaxModulus) {
        throw NonPrimeModulus("modulus " + std::to_string(p) + " exceeds the 2^31 bound");
    }
    if (!is_prime(p)) {
        throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
    }
}

std::int64_t mod_reduce(std::int64_t value, std::int64_t p) {
    std::int64_t r = value % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t value, std::int64_t p) {
    std::int64_t a = mod_reduce(value, p);
    if (a == 0) throw std::domain_error("division by zero in Z_" + std::to_string(p));
    // extended Euclid on (a, p); p prime guarantees gcd 1
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return mod_reduce(old_s, p);
}

Fp::Fp(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
    require_prime_modulus(modulus);
    value_ = mod_reduce(value, modulus);
}

void Fp::check_same_modulus(const Fp& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw ModulusMismatch("mixed moduli " + std::to_string(modulus_) + " and " +
                              std::to_string(rhs.modulus_));
    }
}

Fp Fp::operator+(const Fp& rhs) const {
    check_same_modulus(rhs);
    return Fp(value_ + rhs.value_, modulus_);
}

Fp Fp::operator-(const Fp& rhs) const {
    check_same_modulus(rhs);
    return Fp(value_ - rhs.value_, modulus_);
}

Fp Fp::operator*(const Fp& rhs) const {
    check_same_modulus(rhs);
    return Fp(value_ * rhs.value_, modulus_);
}

Fp Fp::operator/(const Fp& rhs) const {
    check_same_modulus(rhs);
    return *this * rhs.inverse();
}

Fp Fp::operator-() const { return Fp(-value_, modulus_); }

Fp Fp::inverse() const { return Fp(mod_inverse(value_, modulus_), modulus_); }

Fp Fp::pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc(1, modulus_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace dseq
