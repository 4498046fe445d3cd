#include "descent_forge/oracle.hpp"

#include <algorithm>
#include <array>

namespace descent_forge {

EquationSpec::EquationSpec(Int a_, Int b_, Int lambda_, Int k_)
    : a(std::move(a_)), b(std::move(b_)), lambda(std::move(lambda_)), k(std::move(k_)) {
    if (a <= 0 || b <= 0 || lambda <= 0) {
        throw std::invalid_argument("equation coefficients must be positive");
    }
    if (k < 2) {
        throw std::invalid_argument("equation base k must be at least 2");
    }
}

namespace {

Int rhs_value(const EquationSpec& spec, unsigned long m) {
    Int km;
    mpz_pow_ui(km.get_mpz_t(), spec.k.get_mpz_t(), m);
    return spec.lambda * km;
}

// Squares modulo 64 prefilter; rules out ~81% of non-squares before the
// exact isqrt test.
const std::array<bool, 64>& square_residues_mod64() {
    static const std::array<bool, 64> table = [] {
        std::array<bool, 64> t{};
        for (unsigned k = 0; k < 64; ++k) {
            t[(k * k) & 63u] = true;
        }
        return t;
    }();
    return table;
}

bool maybe_square(const Int& n) {
    return square_residues_mod64()[mpz_fdiv_ui(n.get_mpz_t(), 64)];
}

}  // namespace

Int scan_length(const EquationSpec& spec, unsigned long m) {
    Int n = rhs_value(spec, m);
    const Int& scan_coeff = spec.b >= spec.a ? spec.b : spec.a;
    const Int& other_coeff = spec.b >= spec.a ? spec.a : spec.b;
    // Largest scanned coordinate t with scan_coeff*t^2 <= n - other_coeff
    // (the remaining coordinate must be at least 1).
    if (n <= other_coeff) {
        return 0;
    }
    return isqrt((n - other_coeff) / scan_coeff);
}

std::vector<OracleHit> brute_force(const EquationSpec& spec, unsigned long m,
                                   std::uint64_t budget) {
    Int limit = scan_length(spec, m);
    if (limit > budget) {
        throw std::runtime_error("oracle iteration budget exceeded: scan needs " +
                                 limit.get_str() + " iterations, budget is " +
                                 std::to_string(budget));
    }

    const Int n = rhs_value(spec, m);
    const bool scan_is_y = spec.b >= spec.a;
    const Int& scan_coeff = scan_is_y ? spec.b : spec.a;
    const Int& other_coeff = scan_is_y ? spec.a : spec.b;

    std::vector<OracleHit> hits;
    for (Int t = 1; t <= limit; ++t) {
        Int r = n - scan_coeff * t * t;
        if (!divides(other_coeff, r)) {
            continue;
        }
        Int s = exact_div(r, other_coeff);
        if (!maybe_square(s)) {
            continue;
        }
        Int u = isqrt(s);
        if (u * u != s) {
            continue;
        }
        Int x = scan_is_y ? u : t;
        Int y = scan_is_y ? t : u;
        internal_check(x > 0 && y > 0 && spec.a * x * x + spec.b * y * y == n,
                       "oracle hit substitutes back into the equation");
        bool primitive = gcd(x, y) == 1;
        hits.push_back(OracleHit{std::move(x), std::move(y), primitive});
    }
    std::sort(hits.begin(), hits.end(), [](const OracleHit& lhs, const OracleHit& rhs) {
        return lhs.x != rhs.x ? lhs.x < rhs.x : lhs.y < rhs.y;
    });
    return hits;
}

OracleSweep oracle_sweep(const EquationSpec& spec, unsigned long m_max,
                         std::uint64_t budget) {
    OracleSweep sweep;
    Int remaining = budget;
    for (unsigned long m = 1; m <= m_max; ++m) {
        Int len = scan_length(spec, m);
        if (len > remaining) {
            sweep.truncated = true;
            sweep.truncated_at = m;
            break;
        }
        remaining -= len;
        auto hits = brute_force(spec, m, budget);
        bool any_primitive =
            std::any_of(hits.begin(), hits.end(), [](const OracleHit& h) { return h.primitive; });
        if (any_primitive) {
            sweep.suitable.push_back(m);
        }
        sweep.hits.emplace(m, std::move(hits));
    }
    return sweep;
}

}  // namespace descent_forge
