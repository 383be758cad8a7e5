#include "dseq/lattice.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "dseq/errors.hpp"

namespace dseq {

namespace {

// Floor division (round toward minus infinity); cpp_int's operator/ truncates,
// which would leave negative above-pivot entries after reduction.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

Int lcm_int(const Int& a, const Int& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

std::optional<std::size_t> pivot_column(const std::array<Int, 4>& row) {
    for (std::size_t j = 0; j < 4; ++j) {
        if (row[j] != 0) return j;
    }
    return std::nullopt;
}

bool is_zero_row(const std::array<Int, 4>& row) { return !pivot_column(row).has_value(); }

// Hermite-style reduction: Euclid down each column, positive pivots, then
// above-pivot entries reduced into [0, pivot).
std::vector<std::array<Int, 4>> hermite_basis(std::vector<std::array<Int, 4>> rows) {
    std::vector<std::array<Int, 4>> basis;
    for (std::size_t col = 0; col < 4 && !rows.empty(); ++col) {
        while (true) {
            std::vector<std::size_t> nz;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][col] != 0) nz.push_back(i);
            }
            if (nz.size() <= 1) break;
            std::sort(nz.begin(), nz.end(), [&](std::size_t x, std::size_t y) {
                return abs(rows[x][col]) < abs(rows[y][col]);
            });
            const std::size_t piv = nz[0];
            for (std::size_t t = 1; t < nz.size(); ++t) {
                const Int f = floor_div(rows[nz[t]][col], rows[piv][col]);
                for (std::size_t j = 0; j < 4; ++j) rows[nz[t]][j] -= f * rows[piv][j];
            }
        }
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv != rows.size()) {
            if (rows[piv][col] < 0) {
                for (auto& v : rows[piv]) v = -v;
            }
            basis.push_back(rows[piv]);
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(piv));
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());
    }
    for (std::size_t i = basis.size(); i-- > 0;) {
        const std::size_t pc = *pivot_column(basis[i]);
        for (std::size_t k = 0; k < i; ++k) {
            const Int f = floor_div(basis[k][pc], basis[i][pc]);
            if (f != 0) {
                for (std::size_t j = 0; j < 4; ++j) basis[k][j] -= f * basis[i][j];
            }
        }
    }
    return basis;
}

// Sequential pivot elimination over the Hermite basis; exact integers only.
std::optional<std::vector<Int>> eliminate(std::array<Int, 4> v,
                                          const std::vector<std::array<Int, 4>>& basis) {
    std::vector<Int> coeffs;
    bool divisible = true;
    for (const auto& b : basis) {
        const std::size_t pc = *pivot_column(b);
        if (v[pc] % b[pc] != 0) {
            divisible = false;
            coeffs.emplace_back(0);
            continue;
        }
        const Int f = v[pc] / b[pc];
        coeffs.push_back(f);
        for (std::size_t j = 0; j < 4; ++j) v[j] -= f * b[j];
    }
    if (!divisible || !is_zero_row(v)) return std::nullopt;
    return coeffs;
}

}  // namespace

OrderLattice build_order_lattice(const QuaternionAlgebra& algebra, std::size_t depth) {
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    OrderLattice lat{algebra};
    lat.depth = depth;

    lat.generators.emplace_back(algebra, std::array<Rat, 4>{Rat(1), Rat(0), Rat(0), Rat(0)});
    for (std::size_t k = 1; k <= depth; ++k) {
        const auto kk = static_cast<std::uint32_t>(k);
        lat.generators.push_back(gen_pfl_quaternion(Int(1), Int(0), kk, algebra).scaled(Rat(8)));
        lat.generators.push_back(gen_pfl_quaternion(Int(0), Int(1), kk, algebra).scaled(Rat(8)));
    }

    lat.denominator = Int(1);
    for (const auto& g : lat.generators) {
        for (const auto& c : g.coefficients()) {
            lat.denominator = lcm_int(lat.denominator, boost::multiprecision::denominator(c));
        }
    }

    std::vector<std::array<Int, 4>> rows;
    rows.reserve(lat.generators.size());
    for (const auto& g : lat.generators) {
        std::array<Int, 4> row;
        for (std::size_t j = 0; j < 4; ++j) {
            const Rat scaled = g.coefficients()[j] * lat.denominator;
            row[j] = boost::multiprecision::numerator(scaled);
        }
        rows.push_back(std::move(row));
    }
    lat.basis = hermite_basis(std::move(rows));
    lat.rank = lat.basis.size();
    return lat;
}

MembershipResult order_membership(const Quaternion& x, const OrderLattice& lattice) {
    if (!(x.algebra() == lattice.algebra)) {
        throw AlgebraMismatch("element lives in a different quaternion algebra");
    }
    MembershipResult out;
    std::array<Int, 4> v;
    for (std::size_t j = 0; j < 4; ++j) {
        const Rat scaled = x.coefficients()[j] * lattice.denominator;
        if (!is_integer(scaled)) return out;  // off the integer grid entirely
        v[j] = boost::multiprecision::numerator(scaled);
    }
    auto cert = eliminate(v, lattice.basis);
    if (!cert) return out;

    // re-substitute before claiming membership
    std::array<Int, 4> back{Int(0), Int(0), Int(0), Int(0)};
    for (std::size_t i = 0; i < lattice.basis.size(); ++i) {
        for (std::size_t j = 0; j < 4; ++j) back[j] += (*cert)[i] * lattice.basis[i][j];
    }
    for (std::size_t j = 0; j < 4; ++j) {
        if (Rat(back[j], lattice.denominator) != x.coefficients()[j]) {
            throw std::logic_error("membership certificate failed re-substitution");
        }
    }
    out.member = true;
    out.certificate = std::move(*cert);
    return out;
}

ClosureReport order_closure_check(const QuaternionAlgebra& algebra, std::size_t depth,
                                  std::size_t samples) {
    if (depth < 4) throw std::invalid_argument("closure checking needs depth at least 4");
    const OrderLattice lat = build_order_lattice(algebra, depth);

    ClosureReport report;
    report.rational_parameters = !is_integer(algebra.alpha) || !is_integer(algebra.beta);

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    const std::size_t count = lat.generators.size();
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t i = static_cast<std::size_t>(rng() % count);
        const std::size_t j = static_cast<std::size_t>(rng() % count);
        const Quaternion prod = lat.generators[i] * lat.generators[j];
        const MembershipResult mr = order_membership(prod, lat);
        ++report.samples;
        if (mr.member) {
            ++report.members;
        } else {
            ++report.non_members;
            if (report.counterexamples.size() < 5) {
                ClosureCounterexample ce;
                ce.left_index = i;
                ce.right_index = j;
                ce.product = prod.coefficients();
                report.counterexamples.push_back(std::move(ce));
            }
        }
    }
    return report;
}

}  // namespace dseq
