#include "dseq/sequence.hpp"

#include <array>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "dseq/errors.hpp"
#include "dseq/fp.hpp"

namespace dseq {

namespace {

// Saturating product used only to bound the cycle search; the pigeonhole
// principle guarantees a repeat long before this limit matters.
std::size_t saturating_pow(std::int64_t base, int exp) {
    const std::size_t cap = std::numeric_limits<std::size_t>::max() / 4;
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > cap / static_cast<std::size_t>(base)) return cap;
        out *= static_cast<std::size_t>(base);
    }
    return out;
}

struct StateHash {
    std::size_t operator()(const std::array<std::int64_t, 3>& s) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : s) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

SequenceSpec SequenceSpec::preset(std::string_view name) {
    SequenceSpec s;
    if (name == "fibonacci") {
        s = {1, 1, 0, 0, 1, 1};
    } else if (name == "lucas") {
        s = {1, 1, 0, 2, 1, 3};
    } else if (name == "pell") {
        s = {2, 1, 0, 0, 1, 2};
    } else if (name == "pell-lucas") {
        s = {2, 1, 0, 2, 2, 6};
    } else if (name == "fibonacci-narayana") {
        s = {1, 0, 1, 0, 1, 1};
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    }
    s.preset_name = std::string(name);
    return s;
}

SequenceSpec SequenceSpec::fibonacci_like(std::int64_t a) { return {a, 1, 0, 0, 1, a}; }

int SequenceSpec::order() const {
    if (c != 0) return 3;
    if (b != 0) return 2;
    return 1;
}

bool SequenceSpec::operator==(const SequenceSpec& rhs) const {
    return a == rhs.a && b == rhs.b && c == rhs.c && x0 == rhs.x0 && x1 == rhs.x1 &&
           x2 == rhs.x2;
}

Int term(const SequenceSpec& spec, std::uint32_t n) {
    if (n == 0) return Int(spec.x0);
    if (n == 1) return Int(spec.x1);
    if (n == 2) return Int(spec.x2);
    Int d0(spec.x0), d1(spec.x1), d2(spec.x2);
    for (std::uint32_t i = 3; i <= n; ++i) {
        Int next = spec.a * d2 + spec.b * d1 + spec.c * d0;
        d0 = std::move(d1);
        d1 = std::move(d2);
        d2 = std::move(next);
    }
    return d2;
}

std::vector<std::int64_t> terms_mod(const SequenceSpec& spec, std::int64_t prime,
                                    std::size_t count) {
    require_prime_modulus(prime);
    std::vector<std::int64_t> out;
    out.reserve(count);
    const std::int64_t a = mod_reduce(spec.a, prime);
    const std::int64_t b = mod_reduce(spec.b, prime);
    const std::int64_t c = mod_reduce(spec.c, prime);
    for (std::size_t n = 0; n < count; ++n) {
        std::int64_t v;
        if (n == 0) {
            v = mod_reduce(spec.x0, prime);
        } else if (n == 1) {
            v = mod_reduce(spec.x1, prime);
        } else if (n == 2) {
            v = mod_reduce(spec.x2, prime);
        } else {
            // each partial sum stays below 2^62 + 2^31
            v = a * out[n - 1] % prime;
            v = (v + b * out[n - 2]) % prime;
            v = (v + c * out[n - 3]) % prime;
        }
        out.push_back(v);
    }
    return out;
}

ModProfile profile(const SequenceSpec& spec, std::int64_t prime) {
    require_prime_modulus(prime);
    const std::int64_t a = mod_reduce(spec.a, prime);
    const std::int64_t b = mod_reduce(spec.b, prime);
    const std::int64_t c = mod_reduce(spec.c, prime);
    const std::int64_t s0 = mod_reduce(spec.x0, prime);
    const std::int64_t s1 = mod_reduce(spec.x1, prime);
    const std::int64_t s2 = mod_reduce(spec.x2, prime);
    if (s0 == 0 && s1 == 0 && s2 == 0) {
        throw AllZeroSequence("all seeds vanish mod " + std::to_string(prime) +
                              "; the residue sequence is identically zero");
    }

    const int r = spec.order();
    std::vector<std::int64_t> res{s0, s1, s2};
    auto extend_to = [&](std::size_t upto) {
        while (res.size() <= upto) {
            const std::size_t n = res.size();
            std::int64_t v = a * res[n - 1] % prime;
            v = (v + b * res[n - 2]) % prime;
            v = (v + c * res[n - 3]) % prime;
            res.push_back(v);
        }
    };

    // First index from which consecutive order-r windows evolve by the
    // order-r map alone. A third seed inconsistent with a lower effective
    // order pushes this (and hence the preperiod) past zero.
    std::size_t i_det = 0;
    if (r == 2 && mod_reduce(s2 - (a * s1 + b * s0) % prime, prime) != 0) i_det = 1;
    if (r == 1) {
        if (mod_reduce(s2 - a * s1 % prime, prime) != 0) {
            i_det = 2;
        } else if (mod_reduce(s1 - a * s0 % prime, prime) != 0) {
            i_det = 1;
        }
    }

    std::unordered_map<std::array<std::int64_t, 3>, std::size_t, StateHash> seen;
    const std::size_t limit = saturating_pow(prime, r) + 2;
    std::size_t cycle_start = 0;
    std::size_t period = 0;
    for (std::size_t i = i_det;; ++i) {
        extend_to(i + static_cast<std::size_t>(r) - 1);
        std::array<std::int64_t, 3> state{-1, -1, -1};
        for (int j = 0; j < r; ++j) state[static_cast<std::size_t>(j)] = res[i + static_cast<std::size_t>(j)];
        auto [it, inserted] = seen.emplace(state, i);
        if (!inserted) {
            cycle_start = it->second;
            period = i - it->second;
            break;
        }
        if (i - i_det > limit) {
            throw std::logic_error("cycle search exceeded the state-count bound");
        }
    }

    // The state hash finds a repeat of order-r windows; residues before i_det
    // can still agree with their translates one period later, so walk the
    // preperiod down as far as the actual residues allow.
    std::size_t pre = cycle_start;
    extend_to(pre + period + static_cast<std::size_t>(r));
    while (pre > 0 && res[pre - 1] == res[pre - 1 + period]) --pre;

    extend_to(pre + period);
    ModProfile out;
    out.modulus = prime;
    out.period = period;
    out.preperiod = pre;
    out.residues.assign(res.begin() + static_cast<std::ptrdiff_t>(pre),
                        res.begin() + static_cast<std::ptrdiff_t>(pre + period));
    out.zeros = 0;
    for (auto v : out.residues) {
        if (v == 0) ++out.zeros;
    }
    return out;
}

GenFunSpec genfun_spec(const SequenceSpec& spec) {
    GenFunSpec g;
    g.numerator = {Int(spec.x0), Int(spec.x1) - Int(spec.a) * spec.x0,
                   Int(spec.x2) - Int(spec.a) * spec.x1 - Int(spec.b) * spec.x0};
    g.denominator = {Int(1), Int(-spec.a), Int(-spec.b), Int(-spec.c)};
    return g;
}

std::vector<Int> genfun_coefficients(const SequenceSpec& spec, std::size_t count) {
    const GenFunSpec g = genfun_spec(spec);
    std::vector<Int> u;
    u.reserve(count);
    // formal power-series division: den * u = num, den[0] = 1
    for (std::size_t n = 0; n < count; ++n) {
        Int v = n < g.numerator.size() ? g.numerator[n] : Int(0);
        for (std::size_t j = 1; j < g.denominator.size() && j <= n; ++j) {
            v -= g.denominator[j] * u[n - j];
        }
        u.push_back(std::move(v));
    }
    return u;
}

}  // namespace dseq
