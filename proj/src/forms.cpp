#include "descent_forge/forms.hpp"

namespace descent_forge {

FormTriple eval_forms(const Int& p, const Int& q) {
    if (p == 0 && q == 0) {
        throw std::invalid_argument("degenerate parameter pair");
    }
    Int p2 = p * p;
    Int q2 = q * q;
    Int pq = p * q;
    FormTriple t;
    t.a = 59 * p2 - 236 * pq - 7 * q2;
    t.b = -118 * p2 - 14 * pq + 14 * q2;
    t.c = 9 * (59 * p2 + 7 * q2);
    internal_check(t.c > 0, "form c must be positive off the origin");
    if (p != 0 && q != 0) {
        internal_check(t.a != 0 && t.b != 0, "forms a, b vanish only on the axes");
    }
    return t;
}

bool check_identity(const FormTriple& t) {
    return 7 * t.a * t.a + 59 * t.b * t.b == 3 * t.c * t.c;
}

Rational incidence(const Int& x, const Int& y, const Int& z) {
    if (z <= 0) {
        throw std::invalid_argument("incidence requires z > 0");
    }
    if (7 * x * x + 59 * y * y != 3 * z * z) {
        throw std::invalid_argument("incidence requires a solution of 7x^2 + 59y^2 = 3z^2");
    }
    if (x == 0 || y == 0 || gcd(x, y) != 1) {
        throw std::invalid_argument("incidence requires a primitive solution");
    }
    if (z == 9 && ((x == 1 && (y == 2 || y == -2)) || (x == -1 && y == 2))) {
        throw std::invalid_argument("incidence undefined for (1,2,9), (1,-2,9), (-1,2,9)");
    }
    Int num = 9 * y - 2 * z;
    Int den = 9 * x - z;
    internal_check(den != 0 && num != 0, "incidence numerator/denominator vanish only at the excluded triples");
    return Rational(num, den);
}

Reconstruction reconstruct_from_incidence(const Int& p, const Int& q) {
    if (p == 0 || q <= 0 || gcd(p, q) != 1) {
        throw std::invalid_argument(
            "incidence must be a reduced nonzero rational with positive denominator");
    }
    FormTriple t = eval_forms(p, q);
    Int delta = gcd(t.a, t.b);
    internal_check(divides(delta, t.c), "gcd(a, b) divides c");
    Reconstruction r;
    r.x = exact_div(t.a, delta);
    r.y = exact_div(t.b, delta);
    r.z = exact_div(t.c, delta);
    r.delta = delta;
    // Divisor structure of delta at coprime parameters, re-validated on
    // every call rather than trusted.
    internal_check(divides(delta, delta_divisor_bound()), "delta divides 2*3^5*7*59");
    internal_check(divides(Int(7), delta) == divides(Int(7), p), "7 | delta iff 7 | p");
    internal_check(divides(Int(59), delta) == divides(Int(59), q), "59 | delta iff 59 | q");
    internal_check(gcd(r.x, r.y) == 1, "reconstructed solution is primitive");
    internal_check(7 * r.x * r.x + 59 * r.y * r.y == 3 * r.z * r.z,
                   "reconstructed triple solves 7x^2 + 59y^2 = 3z^2");
    return r;
}

Reconstruction reconstruct_from_incidence(const Rational& theta) {
    return reconstruct_from_incidence(theta.num(), theta.den());
}

}  // namespace descent_forge
