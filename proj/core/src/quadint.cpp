#include "dseq/quadint.hpp"

#include <cstdint>
#include <stdexcept>

namespace dseq {

QuadInt QuadInt::operator+(const QuadInt& rhs) const { return {u_ + rhs.u_, v_ + rhs.v_}; }

QuadInt QuadInt::operator-(const QuadInt& rhs) const { return {u_ - rhs.u_, v_ - rhs.v_}; }

QuadInt QuadInt::operator*(const QuadInt& rhs) const {
    return {u_ * rhs.u_ + 2 * v_ * rhs.v_, u_ * rhs.v_ + v_ * rhs.u_};
}

QuadInt QuadInt::operator/(const QuadInt& rhs) const {
    const Rat n = rhs.norm();
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt 2)");
    const QuadInt scaled = *this * rhs.conjugate();
    return {scaled.u_ / n, scaled.v_ / n};
}

QuadInt QuadInt::operator-() const { return {-u_, -v_}; }

QuadInt QuadInt::conjugate() const { return {u_, -v_}; }

Rat QuadInt::norm() const { return u_ * u_ - 2 * v_ * v_; }

QuadInt QuadInt::pow(std::uint64_t e) const {
    QuadInt base = *this;
    QuadInt acc(Rat(1), Rat(0));
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

std::string quadint_to_string(const QuadInt& q) {
    if (q.is_rational()) return rational_to_string(q.u());
    if (q.u() == 0) return rational_to_string(q.v()) + "*sqrt(2)";
    const bool neg = q.v() < 0;
    const Rat mag = neg ? Rat(-q.v()) : q.v();
    return rational_to_string(q.u()) + (neg ? "-" : "+") + rational_to_string(mag) + "*sqrt(2)";
}

}  // namespace dseq
