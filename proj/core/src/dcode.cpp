#include "dseq/dcode.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dseq/errors.hpp"

namespace dseq {

DPolynomial::DPolynomial(SequenceSpec s, ModProfile p, Poly d)
    : spec(std::move(s)), profile(std::move(p)), delta(std::move(d)) {}

DPolynomial build_dpoly(const SequenceSpec& spec, std::int64_t prime) {
    ModProfile prof = dseq::profile(spec, prime);
    if (prof.preperiod != 0) {
        throw NotPurelyPeriodic("preperiod " + std::to_string(prof.preperiod) +
                                " mod " + std::to_string(prime) +
                                "; the window coefficients need a purely periodic sequence");
    }
    Poly delta(prime, prof.residues);
    return DPolynomial(spec, std::move(prof), std::move(delta));
}

DPolyProductCheck check_dpoly_product_identity(const SequenceSpec& spec, std::int64_t prime,
                                               std::size_t l) {
    if (l < 3) throw std::invalid_argument("window length must be at least 3");
    const std::vector<std::int64_t> d = terms_mod(spec, prime, l + 2);
    const std::int64_t a = mod_reduce(spec.a, prime);
    const std::int64_t b = mod_reduce(spec.b, prime);
    const std::int64_t c = mod_reduce(spec.c, prime);

    Poly delta(prime, std::vector<std::int64_t>(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(l)));
    const Poly mult(prime, {-1, a, b, c});
    const Poly lhs = delta * mult;

    std::vector<std::int64_t> boundary(l + 3, 0);
    boundary[0] = -d[0];
    boundary[1] = mod_reduce(a * d[0] % prime - d[1], prime);
    boundary[2] = mod_reduce((a * d[1] + b * d[0]) % prime - d[2], prime);
    boundary[l] = d[l];
    boundary[l + 1] = mod_reduce(d[l + 1] - a * d[l] % prime, prime);
    boundary[l + 2] = c * d[l - 1] % prime;
    const Poly rhs_general(prime, boundary);

    boundary[l] = 0;
    boundary[l + 1] = d[l + 1];
    const Poly rhs_short(prime, boundary);

    DPolyProductCheck out;
    out.l = l;
    out.general_form_holds = (lhs == rhs_general);
    out.short_form_holds = (lhs == rhs_short);
    return out;
}

namespace {
void require_family_spec(const SequenceSpec& spec) {
    if (spec.b != 1 || spec.c != 0 || spec.x0 != 0 || spec.x1 != 1 || spec.x2 != spec.a) {
        throw std::invalid_argument(
            "expected the unit-seed family D_n = a D_{n-1} + D_{n-2}, seeds (0, 1, a)");
    }
}
}  // namespace

bool check_dpoly_family_identity(const SequenceSpec& spec, std::int64_t prime) {
    require_family_spec(spec);
    const DPolynomial dp = build_dpoly(spec, prime);
    const std::size_t l = dp.profile.period;
    const Poly lhs = dp.delta * Poly(prime, {-1, spec.a, 1});
    Poly rhs = Poly::monomial(prime, l + 1) - Poly::monomial(prime, 1);
    return lhs == rhs;
}

std::size_t min_distance(const DCyclicCode& code) {
    const std::int64_t p = code.modulus;
    std::vector<std::int64_t> message(code.k, 0);
    std::size_t best = code.n + 1;
    // odometer over the p^k - 1 nonzero messages
    while (true) {
        std::size_t pos = 0;
        while (pos < code.k && message[pos] == p - 1) {
            message[pos] = 0;
            ++pos;
        }
        if (pos == code.k) break;
        ++message[pos];
        const Poly c = Poly(p, message) * code.g;
        best = std::min(best, c.weight());
        if (best == 1) break;  // cannot go lower for a nonzero word
    }
    return best;
}

DCyclicCode code_from_generator(std::int64_t prime, std::size_t n, const Poly& g) {
    require_prime_modulus(prime);
    if (g.modulus() != prime) {
        throw ModulusMismatch("generator modulus " + std::to_string(g.modulus()) +
                              " differs from " + std::to_string(prime));
    }
    if (g.is_zero() || !g.is_monic()) {
        throw std::invalid_argument("generator must be monic and nonzero");
    }
    if (static_cast<std::size_t>(g.degree()) >= n) {
        throw std::invalid_argument("generator degree must be below the block length");
    }
    const Poly ring = Poly::x_pow_minus_one(prime, n);
    auto [h, rem] = poly_divmod(ring, g);
    if (!rem.is_zero()) {
        throw std::invalid_argument("generator does not divide x^n - 1");
    }
    DCyclicCode code;
    code.modulus = prime;
    code.n = n;
    code.g = g;
    code.h = std::move(h);
    code.k = n - static_cast<std::size_t>(g.degree());
    code.d = min_distance(code);
    code.mds = (code.k + code.d == code.n + 1);
    code.t = (code.d - 1) / 2;
    return code;
}

DCyclicCode build_code(const SequenceSpec& spec, std::int64_t prime) {
    require_family_spec(spec);
    const DPolynomial dp = build_dpoly(spec, prime);
    const std::size_t l = dp.profile.period;
    if (l < 3) {
        throw DegenerateSequence("period " + std::to_string(l) + " mod " +
                                 std::to_string(prime) +
                                 " leaves no room for a nontrivial generator");
    }
    // delta(0) = D_0 = 0, so delta = x * g with g monic of degree l - 2
    // (the window ends with D_{l-1} = 1 for the unit-seed family).
    const auto& win = dp.delta.coefficients();
    std::vector<std::int64_t> gc(win.begin() + 1, win.end());
    return code_from_generator(prime, l, Poly(prime, std::move(gc)));
}

std::vector<std::int64_t> encode(const DCyclicCode& code,
                                 const std::vector<std::int64_t>& message) {
    if (message.size() != code.k) {
        throw std::invalid_argument("message must have exactly k = " + std::to_string(code.k) +
                                    " coefficients");
    }
    const Poly c = Poly(code.modulus, message) * code.g;
    std::vector<std::int64_t> word(code.n, 0);
    for (std::size_t i = 0; i < code.n; ++i) word[i] = c.coefficient(i);
    return word;
}

DecodeTrace decode(const DCyclicCode& code, const std::vector<std::int64_t>& received) {
    if (received.size() != code.n) {
        throw std::invalid_argument("received word must have exactly n = " +
                                    std::to_string(code.n) + " symbols");
    }
    const std::int64_t p = code.modulus;
    DecodeTrace trace(p);
    trace.received = received;
    for (auto& v : trace.received) v = mod_reduce(v, p);

    const Poly r(p, trace.received);
    trace.syndrome = r % code.g;
    if (trace.syndrome.is_zero()) {
        trace.status = DecodeStatus::clean;
        trace.error.assign(code.n, 0);
        trace.corrected = trace.received;
        return trace;
    }

    const Poly ring = Poly::x_pow_minus_one(p, code.n);
    Poly s = trace.syndrome;
    for (std::size_t i = 0; i < code.n; ++i) {
        if (s.weight() <= code.t) {
            trace.shift = i;
            trace.shifted_syndrome = s;
            // rotate the trapped burst back to its true position
            const Poly e = (s.shifted(code.n - i)) % ring;
            trace.error.assign(code.n, 0);
            for (std::size_t j = 0; j < code.n; ++j) trace.error[j] = e.coefficient(j);
            trace.corrected.resize(code.n);
            for (std::size_t j = 0; j < code.n; ++j) {
                trace.corrected[j] = mod_reduce(trace.received[j] - trace.error[j], p);
            }
            trace.status = DecodeStatus::corrected;
            return trace;
        }
        s = s.shifted(1) % code.g;
    }
    trace.status = DecodeStatus::failure;
    return trace;
}

std::vector<ScanRow> scan_codes(std::int64_t a_max, const std::vector<std::int64_t>& primes) {
    if (a_max < 1) throw std::invalid_argument("a_max must be at least 1");
    std::vector<std::int64_t> ps = primes;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    std::vector<ScanRow> rows;
    for (std::int64_t p : ps) {
        require_prime_modulus(p);
        for (std::int64_t a = 1; a <= a_max; ++a) {
            ScanRow row;
            row.a = a;
            row.prime = p;
            const SequenceSpec spec = SequenceSpec::fibonacci_like(a);
            const ModProfile prof = profile(spec, p);
            row.l = prof.period;
            row.beta = prof.zeros;
            if (prof.period < 3) {
                // happens exactly when a vanishes mod the prime
                row.skip_reason = "period " + std::to_string(prof.period) +
                                  " leaves no room for a generator";
                rows.push_back(std::move(row));
                continue;
            }
            const DCyclicCode code = build_code(spec, p);
            row.built = true;
            row.n = code.n;
            row.k = code.k;
            row.d = code.d;
            row.mds = code.mds;
            row.d_matches_theorem = (code.d == row.l - row.beta);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace dseq
