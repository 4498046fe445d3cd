#pragma once

#include "descent_forge/int_ops.hpp"
#include "descent_forge/rational.hpp"

namespace descent_forge {

/// Values of the three quadratic forms at a parameter pair (p, q):
///   a = 59p^2 - 236pq - 7q^2
///   b = -118p^2 - 14pq + 14q^2
///   c = 9(59p^2 + 7q^2)
/// They satisfy 7a^2 + 59b^2 = 3c^2 identically, with c > 0 for
/// (p, q) != (0, 0) and a, b both nonzero when p and q are.
struct FormTriple {
    Int a;
    Int b;
    Int c;
};

/// The positive divisor bound for gcd(a, b) at coprime parameters:
/// 2 * 3^5 * 7 * 59.
inline const Int& delta_divisor_bound();

FormTriple eval_forms(const Int& p, const Int& q);

bool check_identity(const FormTriple& t);

/// The incidence (9y - 2z)/(9x - z) of a primitive solution (x, y, z) of
/// 7x^2 + 59y^2 = 3z^2 with z > 0. Undefined (throws) for the three
/// triples (1, 2, 9), (1, -2, 9), (-1, 2, 9); nonzero otherwise.
Rational incidence(const Int& x, const Int& y, const Int& z);

struct Reconstruction {
    Int x;
    Int y;
    Int z;
    Int delta;  // positive gcd of the form values at (p, q)
};

/// Recovers the primitive solution whose incidence is theta = p/q:
/// evaluates the forms at (p, q) and divides out delta = gcd(a, b).
/// delta divides 2*3^5*7*59, with 7 | delta iff 7 | p and
/// 59 | delta iff 59 | q; these are re-checked on every call.
Reconstruction reconstruct_from_incidence(const Rational& theta);

/// Same, from a raw pair that must already be reduced with q > 0, p != 0.
Reconstruction reconstruct_from_incidence(const Int& p, const Int& q);

inline const Int& delta_divisor_bound() {
    static const Int bound = Int(2) * pow3(5) * 7 * 59;  // 200718
    return bound;
}

}  // namespace descent_forge
