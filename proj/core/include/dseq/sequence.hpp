#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dseq/integers.hpp"

namespace dseq {

// Degree-three linear recurrence D_n = a*D_{n-1} + b*D_{n-2} + c*D_{n-3} for
// n >= 3, with seeds (x0, x1, x2) = (D_0, D_1, D_2). Coefficients and seeds are
// plain integers; the terms themselves are arbitrary precision.
struct SequenceSpec {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t x0 = 0;
    std::int64_t x1 = 0;
    std::int64_t x2 = 0;
    std::string preset_name;  // set when built from a named preset, else empty

    // Known presets: fibonacci, lucas, pell, pell-lucas, fibonacci-narayana.
    // Throws std::invalid_argument for unknown names.
    static SequenceSpec preset(std::string_view name);

    // D_n = a*D_{n-1} + D_{n-2} with seeds 0, 1 (third seed consistent: x2 = a).
    // a=1 gives Fibonacci, a=2 Pell; these sequences feed the code construction.
    static SequenceSpec fibonacci_like(std::int64_t a);

    // 3 when c != 0, 2 when c = 0 and b != 0, else 1. The state vector for
    // period detection has this many entries.
    int order() const;

    bool operator==(const SequenceSpec& rhs) const;
};

// Exact n-th term over Z.
Int term(const SequenceSpec& spec, std::uint32_t n);

// First `count` residues mod a prime; streaming, O(1) working state.
std::vector<std::int64_t> terms_mod(const SequenceSpec& spec, std::int64_t prime,
                                    std::size_t count);

// Period structure of the residue sequence mod a prime.
struct ModProfile {
    std::int64_t modulus = 0;
    std::size_t period = 0;     // least period of the eventually periodic part
    std::size_t zeros = 0;      // zero residues within one period window
    std::size_t preperiod = 0;  // 0 iff purely periodic
    std::vector<std::int64_t> residues;  // D_preperiod .. D_{preperiod+period-1}
};

// Least period by hashing order-sized state vectors until the first repeat.
// Preperiods arise when the trailing coefficient vanishes mod pi or when the
// third seed is inconsistent with a shorter effective order.
// Throws NonPrimeModulus / AllZeroSequence.
ModProfile profile(const SequenceSpec& spec, std::int64_t prime);

// Generating function of the sequence as a rational function
// N(z) / (1 - a z - b z^2 - c z^3), numerator from the seeds.
struct GenFunSpec {
    std::array<Int, 3> numerator;    // D0, D1 - a*D0, D2 - a*D1 - b*D0
    std::array<Int, 4> denominator;  // 1, -a, -b, -c
};

GenFunSpec genfun_spec(const SequenceSpec& spec);

// Power-series coefficients of the generating function, by the linear-recurrence
// coefficient-extraction scheme (exact; no division).
std::vector<Int> genfun_coefficients(const SequenceSpec& spec, std::size_t count);

}  // namespace dseq
