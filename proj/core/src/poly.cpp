#include "dseq/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "dseq/errors.hpp"

namespace dseq {

namespace {
void check_same_modulus(const Poly& a, const Poly& b) {
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatch("mixed moduli " + std::to_string(a.modulus()) + " and " +
                              std::to_string(b.modulus()));
    }
}
}  // namespace

Poly::Poly(std::int64_t modulus) : modulus_(modulus) { require_prime_modulus(modulus); }

Poly::Poly(std::int64_t modulus, std::vector<std::int64_t> coefficients)
    : modulus_(modulus), coeffs_(std::move(coefficients)) {
    require_prime_modulus(modulus);
    canonicalize();
}

void Poly::canonicalize() {
    for (auto& c : coeffs_) c = mod_reduce(c, modulus_);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(std::int64_t modulus, std::size_t degree, std::int64_t coefficient) {
    std::vector<std::int64_t> c(degree + 1, 0);
    c[degree] = coefficient;
    return Poly(modulus, std::move(c));
}

Poly Poly::x_pow_minus_one(std::int64_t modulus, std::size_t n) {
    std::vector<std::int64_t> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    return Poly(modulus, std::move(c));
}

std::int64_t Poly::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

std::size_t Poly::weight() const {
    std::size_t w = 0;
    for (auto c : coeffs_) {
        if (c != 0) ++w;
    }
    return w;
}

Poly Poly::operator+(const Poly& rhs) const {
    check_same_modulus(*this, rhs);
    std::vector<std::int64_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) + rhs.coefficient(i);
    return Poly(modulus_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
    check_same_modulus(*this, rhs);
    std::vector<std::int64_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) - rhs.coefficient(i);
    return Poly(modulus_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    check_same_modulus(*this, rhs);
    if (is_zero() || rhs.is_zero()) return Poly(modulus_);
    std::vector<std::int64_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] = (out[i + j] + coeffs_[i] * rhs.coeffs_[j]) % modulus_;
        }
    }
    return Poly(modulus_, std::move(out));
}

Poly Poly::operator-() const {
    std::vector<std::int64_t> out(coeffs_);
    for (auto& c : out) c = -c;
    return Poly(modulus_, std::move(out));
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : Poly(modulus_);
    std::vector<std::int64_t> out(coeffs_.size() + k, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return Poly(modulus_, std::move(out));
}

Fp Poly::eval(const Fp& at) const {
    if (at.modulus() != modulus_) {
        throw ModulusMismatch("evaluation point modulus " + std::to_string(at.modulus()) +
                              " differs from polynomial modulus " + std::to_string(modulus_));
    }
    Fp acc(0, modulus_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + Fp(*it, modulus_);
    }
    return acc;
}

std::pair<Poly, Poly> poly_divmod(const Poly& dividend, const Poly& divisor) {
    check_same_modulus(dividend, divisor);
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::int64_t p = dividend.modulus();
    std::vector<std::int64_t> rem(dividend.coefficients());
    const auto& g = divisor.coefficients();
    if (rem.size() < g.size()) return {Poly(p), dividend};

    const std::size_t dg = g.size() - 1;
    std::vector<std::int64_t> quot(rem.size() - dg, 0);
    const std::int64_t lead_inv = mod_inverse(g.back(), p);
    for (std::size_t i = rem.size() - 1; i + 1 > dg; --i) {
        if (rem[i] == 0) continue;
        const std::int64_t factor = rem[i] * lead_inv % p;
        quot[i - dg] = factor;
        for (std::size_t j = 0; j < g.size(); ++j) {
            rem[i - dg + j] = mod_reduce(rem[i - dg + j] - factor * g[j] % p, p);
        }
    }
    return {Poly(p, std::move(quot)), Poly(p, std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("gcd(0, 0) is undefined");
    }
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    // monic normalization
    const std::int64_t p = a.modulus();
    const std::int64_t inv = mod_inverse(a.coefficients().back(), p);
    std::vector<std::int64_t> c(a.coefficients());
    for (auto& v : c) v = v * inv % p;
    return Poly(p, std::move(c));
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << c[i];
        } else {
            if (c[i] != 1) out << c[i] << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace dseq
