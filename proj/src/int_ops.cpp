#include "descent_forge/int_ops.hpp"

namespace descent_forge {

Int exact_div(const Int& n, const Int& d) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    internal_check(r == 0, "exact division left a remainder");
    return q;
}

Int pow3(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
    return r;
}

Int gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) {
        throw std::invalid_argument("undefined gcd");
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

unsigned long valuation_3(const Int& n) {
    if (n == 0) {
        throw std::invalid_argument("valuation of zero is undefined");
    }
    Int reduced;
    const Int three = 3;
    return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), three.get_mpz_t());
}

Int isqrt(const Int& n) {
    if (n < 0) {
        throw std::invalid_argument("isqrt requires a non-negative argument");
    }
    if (n == 0) {
        return 0;
    }
    // Initial guess 2^ceil(bits/2) >= sqrt(n); Newton steps decrease
    // monotonically once above the root.
    Int x = 1;
    x <<= (mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2;
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x) {
            break;
        }
        x = y;
    }
    while (x * x > n) {
        --x;
    }
    while ((x + 1) * (x + 1) <= n) {
        ++x;
    }
    return x;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) {
        throw std::invalid_argument("perfect-square test requires a non-negative argument");
    }
    Int r = isqrt(n);
    return r * r == n;
}

bool is_prime(const Int& n) {
    if (n < 2) {
        return false;
    }
    if (n == 2) {
        return true;
    }
    if (mpz_even_p(n.get_mpz_t())) {
        return false;
    }
    for (Int d = 3; d * d <= n; d += 2) {
        if (divides(d, n)) {
            return false;
        }
    }
    return true;
}

bool is_square_free(const Int& n) {
    Int m = abs(n);
    if (m == 0) {
        return false;
    }
    if (divides(Int(4), m)) {
        return false;
    }
    while (mpz_even_p(m.get_mpz_t())) {
        m >>= 1;
    }
    for (Int d = 3; d * d <= m; d += 2) {
        if (divides(d, m)) {
            m = exact_div(m, d);
            if (divides(d, m)) {
                return false;
            }
        }
    }
    return true;
}

int legendre_symbol(const Int& a, const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
        throw std::invalid_argument("modulus must be an odd prime");
    }
    Int base;
    mpz_mod(base.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (base == 0) {
        return 0;
    }
    Int e = (p - 1) / 2;
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (r == 1) {
        return 1;
    }
    internal_check(r == p - 1, "Euler criterion produced a value other than 0, 1, p-1");
    return -1;
}

int jacobi_symbol(const Int& a, const Int& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t())) {
        throw std::invalid_argument("Jacobi symbol requires an odd positive modulus");
    }
    Int num;
    mpz_mod(num.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    Int den = n;
    int result = 1;
    while (num != 0) {
        while (mpz_even_p(num.get_mpz_t())) {
            num >>= 1;
            unsigned r8 = static_cast<unsigned>(mpz_fdiv_ui(den.get_mpz_t(), 8));
            if (r8 == 3 || r8 == 5) {
                result = -result;
            }
        }
        std::swap(num, den);
        if (mpz_fdiv_ui(num.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(den.get_mpz_t(), 4) == 3) {
            result = -result;
        }
        Int t;
        mpz_mod(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        num = t;
    }
    return den == 1 ? result : 0;
}

namespace {

// Quadratic-residue symbol modulo a square-free positive n: the Jacobi
// symbol on the odd part of n. The prime 2 imposes no condition (every
// integer is a square mod 2) and modulus 1 yields +1.
int squarefree_symbol(const Int& t, const Int& n) {
    Int odd = n;
    if (mpz_even_p(odd.get_mpz_t())) {
        odd >>= 1;
    }
    if (odd == 1) {
        return 1;
    }
    return jacobi_symbol(t, odd);
}

}  // namespace

bool ternary_solvable(const Int& a, const Int& b, const Int& c) {
    const bool preconditions_ok =
        a > 0 && b > 0 && c > 0 &&
        is_square_free(a) && is_square_free(b) && is_square_free(c) &&
        gcd(a, b) == 1 && gcd(b, c) == 1 && gcd(c, a) == 1;
    if (!preconditions_ok) {
        throw std::invalid_argument(
            "Legendre criterion requires square-free pairwise-coprime coefficients");
    }
    return squarefree_symbol(-a * b, c) == 1 &&
           squarefree_symbol(b * c, a) == 1 &&
           squarefree_symbol(c * a, b) == 1;
}

}  // namespace descent_forge
