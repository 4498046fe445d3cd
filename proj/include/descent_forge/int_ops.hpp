#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace descent_forge {

/// Exact signed integer of unbounded magnitude. All arithmetic in this
/// library is exact; no floating point is used anywhere.
using Int = mpz_class;

/// Throws std::logic_error. Used for conditions that are theorems of the
/// underlying construction: a failure signals an implementation bug, never
/// a domain case, so these checks stay on in release builds.
inline void internal_check(bool ok, const char* what) {
    if (!ok) {
        throw std::logic_error(std::string("internal invariant violated: ") + what);
    }
}

/// Non-negative residue of n mod 3.
inline unsigned mod3(const Int& n) {
    return static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), 3));
}

inline bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Quotient n/d, throwing if the division leaves a remainder.
Int exact_div(const Int& n, const Int& d);

/// 3^e as an exact integer.
Int pow3(unsigned long e);

/// Non-negative gcd. Both inputs zero is an error ("undefined gcd").
Int gcd(const Int& a, const Int& b);

/// Largest e with 3^e | n. n must be nonzero.
unsigned long valuation_3(const Int& n);

/// Floor square root by Newton iteration with a floor-correction step.
/// n must be non-negative.
Int isqrt(const Int& n);

/// True iff n is a perfect square. n must be non-negative.
bool is_perfect_square(const Int& n);

/// Deterministic trial-division primality check; intended for the small
/// moduli this library works with, not cryptographic sizes.
bool is_prime(const Int& n);

/// True iff no square > 1 divides n (trial division; small inputs).
bool is_square_free(const Int& n);

/// Legendre symbol (a/p) for an odd prime p, computed by Euler's
/// criterion with fast modular exponentiation. Returns -1, 0 or +1.
int legendre_symbol(const Int& a, const Int& p);

/// Jacobi symbol (a/n) for odd positive n, computed by quadratic
/// reciprocity. (a/1) = +1 by convention. Returns -1, 0 or +1.
int jacobi_symbol(const Int& a, const Int& n);

/// Legendre's criterion for ax^2 + by^2 = cz^2 on positive square-free
/// pairwise-coprime coefficients: solvable iff the three symbols
/// (-ab/c), (bc/a), (ca/b) are all +1. Composite moduli are evaluated as
/// Jacobi symbols on their odd part (the factor 2 of a square-free
/// modulus imposes no quadratic condition); modulus 1 gives +1.
bool ternary_solvable(const Int& a, const Int& b, const Int& c);

}  // namespace descent_forge
