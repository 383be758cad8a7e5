#pragma once

#include <string>

#include "dseq/integers.hpp"

namespace dseq {

// Element u + v*sqrt(2) of Q(sqrt 2), exact rational components.
class QuadInt {
public:
    QuadInt() = default;
    QuadInt(Rat u, Rat v) : u_(std::move(u)), v_(std::move(v)) {}

    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }
    bool is_rational() const { return v_ == 0; }
    bool is_zero() const { return u_ == 0 && v_ == 0; }

    QuadInt operator+(const QuadInt& rhs) const;
    QuadInt operator-(const QuadInt& rhs) const;
    QuadInt operator*(const QuadInt& rhs) const;
    QuadInt operator/(const QuadInt& rhs) const;  // field division; throws on zero
    QuadInt operator-() const;
    bool operator==(const QuadInt& rhs) const = default;

    QuadInt conjugate() const;  // u - v*sqrt(2)
    Rat norm() const;           // u^2 - 2 v^2
    QuadInt pow(std::uint64_t e) const;

private:
    Rat u_;
    Rat v_;
};

// "u+v*sqrt(2)" with rational components in canonical form; pure-rational
// values print as just "u".
std::string quadint_to_string(const QuadInt& q);

}  // namespace dseq
