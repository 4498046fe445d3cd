#pragma once

#include "descent_forge/int_ops.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace descent_forge {

/// Coefficients of a family a*x^2 + b*y^2 = lambda * k^m. The defaults
/// reproduce the target equation 7x^2 + 59y^2 = 3^m.
struct EquationSpec {
    Int a;
    Int b;
    Int lambda;
    Int k;

    EquationSpec(Int a, Int b, Int lambda, Int k);
    static EquationSpec defaults() { return {7, 59, 1, 3}; }
};

struct OracleHit {
    Int x;
    Int y;
    bool primitive;
};

inline constexpr std::uint64_t kDefaultIterationBudget = 100'000'000;

/// Number of scan iterations brute_force(spec, m) would perform.
Int scan_length(const EquationSpec& spec, unsigned long m);

/// Every positive pair with a*x^2 + b*y^2 = lambda*k^m, found by scanning
/// the coordinate with the larger coefficient and testing the cofactor for
/// exact divisibility and squareness. Hits are tagged primitive or not,
/// returned sorted by (x, y), and each is substituted back into the
/// equation as a self-check. Deliberately ignorant of the successor
/// construction. Throws if the scan would exceed the iteration budget.
std::vector<OracleHit> brute_force(const EquationSpec& spec, unsigned long m,
                                   std::uint64_t budget = kDefaultIterationBudget);

struct OracleSweep {
    std::map<unsigned long, std::vector<OracleHit>> hits;  // m -> hits, m = 1..m_max scanned
    std::vector<unsigned long> suitable;                   // exponents with a primitive hit
    bool truncated = false;
    unsigned long truncated_at = 0;  // first exponent the budget no longer covered
};

/// Runs brute_force for m = 1..m_max under a cumulative iteration budget;
/// exponents the budget cannot cover are reported via the truncation
/// marker rather than scanned partially.
OracleSweep oracle_sweep(const EquationSpec& spec, unsigned long m_max,
                         std::uint64_t budget = kDefaultIterationBudget);

}  // namespace descent_forge
