#pragma once

#include "descent_forge/forms.hpp"
#include "descent_forge/solution.hpp"

namespace descent_forge {

/// Parameter pair feeding the form evaluations: q is the coordinate on
/// the 7-term, p on the 59-term, sign-adjusted so that pq = -1 (mod 3).
struct ParameterPair {
    Int p;
    Int q;
};

/// Flips the sign of p if needed so that p*q = -1 (mod 3).
/// Requires 3 coprime to both (automatic for solution coordinates).
ParameterPair normalized_parameters(Int p, Int q);

/// Solutions are stored as (x, y, m) with x on the 7-term; the successor
/// formulas read them as (q, p, omega) = (x, y, m). This overload is the
/// single place where that swap happens.
ParameterPair normalized_parameters(const PPSolution& s);

/// (|a(p,q)|/3^5, |b(p,q)|/3^5, 2m - 5). The divisions are exact with a
/// verified remainder; gcd(a, b) = 3^5 is checked, not assumed.
PPSolution first_successor(const PPSolution& s);

/// (|a(-p,q)|, |b(-p,q)|, 2m + 5), with 3 not dividing the new x.
PPSolution second_successor(const PPSolution& s);

enum class SuccessorKind { first, second, neither };

const char* to_string(SuccessorKind k);

/// Recognition criterion: candidate is the second successor of parent iff
/// its coordinates equal |a(+-p, q)|, |b(+-p, q)| with matched signs, and
/// the first successor iff they equal the same values divided by 3^5.
/// Both sign matchings are tried explicitly; no exponent relation is used.
SuccessorKind recognize_successor(const PPSolution& candidate, const PPSolution& parent);

}  // namespace descent_forge
