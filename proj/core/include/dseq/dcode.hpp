#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dseq/poly.hpp"
#include "dseq/sequence.hpp"

namespace dseq {

// delta(x) = sum_{i=0}^{l-1} D_i x^i over Z_pi, one full period of residues as
// coefficients. Requires a purely periodic sequence.
struct DPolynomial {
    SequenceSpec spec;
    ModProfile profile;
    Poly delta;

    DPolynomial(SequenceSpec s, ModProfile p, Poly d);
};

DPolynomial build_dpoly(const SequenceSpec& spec, std::int64_t prime);

// Product identity for delta(x) * (c x^3 + b x^2 + a x - 1) with an arbitrary
// window length l >= 3: every interior coefficient telescopes through the
// recurrence, leaving only boundary terms
//   c D_{l-1} x^{l+2} + (D_{l+1} - a D_l) x^{l+1} + D_l x^l
//   + (a D_1 + b D_0 - D_2) x^2 + (a D_0 - D_1) x - D_0.
// The short form omits the x^l term and writes D_{l+1} alone at x^{l+1}; it
// holds exactly when D_l = 0 mod pi (e.g. zero-seeded sequences with l a
// multiple of the period), and the report says whether it does here.
struct DPolyProductCheck {
    std::size_t l = 0;
    bool general_form_holds = false;  // the boundary-term identity above
    bool short_form_holds = false;    // the variant without the x^l correction
};

DPolyProductCheck check_dpoly_product_identity(const SequenceSpec& spec,
                                               std::int64_t prime, std::size_t l);

// For the unit-seed family (c=0, b=1, x0=0, x1=1, x2=a) with l the period:
// delta(x) * (x^2 + a x - 1) = x^{l+1} - x. Exact check, returns the verdict.
bool check_dpoly_family_identity(const SequenceSpec& spec, std::int64_t prime);

// Cyclic code of length n = period, generated by delta'(x) = delta(x)/x.
// k = n - deg g = 2 for the family; d is always brute-forced, never assumed.
struct DCyclicCode {
    std::int64_t modulus = 0;
    std::size_t n = 0;   // block length
    Poly g;              // generator, monic divisor of x^n - 1
    Poly h;              // check, (x^n - 1) / g
    std::size_t k = 0;   // dimension, n - deg g
    std::size_t d = 0;   // minimum Hamming distance (exhaustive)
    bool mds = false;    // k + d == n + 1
    std::size_t t = 0;   // correction capacity floor((d-1)/2)

    DCyclicCode() : g(2), h(2) {}
};

// Builds the code for the unit-seed family spec mod pi.
// Throws DegenerateSequence (period < 3), NotPurelyPeriodic, NonPrimeModulus,
// std::invalid_argument when the spec is not family-shaped.
DCyclicCode build_code(const SequenceSpec& spec, std::int64_t prime);

// General constructor from any monic divisor g of x^n - 1 (used by tests and
// the repetition-style degenerate cases). Brute-forces d over p^k - 1 words.
DCyclicCode code_from_generator(std::int64_t prime, std::size_t n, const Poly& g);

// Exhaustive minimum weight over all p^k - 1 nonzero codewords m(x) g(x).
std::size_t min_distance(const DCyclicCode& code);

// c(x) = m(x) g(x), message given as k coefficients.
std::vector<std::int64_t> encode(const DCyclicCode& code, const std::vector<std::int64_t>& message);

enum class DecodeStatus { clean, corrected, failure };

// Error-trapping decode transcript.
struct DecodeTrace {
    DecodeStatus status = DecodeStatus::failure;
    std::vector<std::int64_t> received;
    Poly syndrome;                          // received mod g
    std::optional<std::size_t> shift;       // first i with weight(x^i s mod g) <= t
    std::optional<Poly> shifted_syndrome;   // s_i for that i
    std::vector<std::int64_t> error;        // empty on failure
    std::vector<std::int64_t> corrected;    // empty on failure

    explicit DecodeTrace(std::int64_t modulus) : syndrome(modulus) {}
};

// Cyclically shifts the syndrome until its weight drops to t or less, then
// rotates the trapped burst back: e = x^{n-i} s_i mod (x^n - 1). Reports
// failure honestly when no shift traps the error.
DecodeTrace decode(const DCyclicCode& code, const std::vector<std::int64_t>& received);

// One scan row per (a, pi) pair. Degenerate pairs are flagged, not omitted.
struct ScanRow {
    std::int64_t a = 0;
    std::int64_t prime = 0;
    bool built = false;         // false -> skip_reason says why
    std::string skip_reason;
    std::size_t l = 0;
    std::size_t beta = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    bool mds = false;
    bool d_matches_theorem = false;  // brute-force d == l - beta
};

// Cross product of a in [1, a_max] with the prime list, sorted by (prime, a).
std::vector<ScanRow> scan_codes(std::int64_t a_max, const std::vector<std::int64_t>& primes);

}  // namespace dseq
