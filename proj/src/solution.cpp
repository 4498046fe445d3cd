#include "descent_forge/solution.hpp"

namespace descent_forge {

PPSolution::PPSolution(Int x, Int y, unsigned long m)
    : x_(std::move(x)), y_(std::move(y)), m_(m) {
    if (x_ <= 0 || y_ <= 0) {
        throw std::domain_error("pp-solution coordinates must be positive");
    }
    if (m_ == 0) {
        throw std::domain_error("pp-solution exponent must be positive");
    }
    if (7 * x_ * x_ + 59 * y_ * y_ != pow3(m_)) {
        throw std::domain_error("triple does not solve 7x^2 + 59y^2 = 3^m");
    }
    if (gcd(x_, y_) != 1) {
        throw std::domain_error("pp-solution coordinates must be coprime");
    }
    internal_check(mpz_odd_p(x_.get_mpz_t()) && mpz_even_p(y_.get_mpz_t()),
                   "pp-solution has x odd and y even");
    internal_check(m_ % 10 == 5, "pp-solution exponent lies in the progression 10k + 5");
}

const PPSolution& PPSolution::root() {
    static const PPSolution r(1, 2, 5);
    return r;
}

const char* to_string(SolutionTag tag) {
    switch (tag) {
        case SolutionTag::pp_solution: return "pp_solution";
        case SolutionTag::primitive_nonpositive: return "primitive_nonpositive";
        case SolutionTag::imprimitive: return "imprimitive";
        case SolutionTag::not_a_solution: return "not_a_solution";
    }
    return "unknown";
}

SolutionClass verify(const Int& x, const Int& y, long m) {
    if (x == 0 || y == 0) {
        throw std::invalid_argument("verify requires nonzero x and y");
    }
    if (m <= 0) {
        throw std::invalid_argument("verify requires a positive exponent");
    }
    if (7 * x * x + 59 * y * y != pow3(static_cast<unsigned long>(m))) {
        return {SolutionTag::not_a_solution, 1};
    }
    Int g = gcd(x, y);
    if (g == 1) {
        if (x > 0 && y > 0) {
            return {SolutionTag::pp_solution, 1};
        }
        return {SolutionTag::primitive_nonpositive, 1};
    }
    // In any solution the common factor is forced to be a power of 3.
    internal_check(g == pow3(valuation_3(g)), "gcd of a solution is a power of 3");
    return {SolutionTag::imprimitive, g};
}

bool is_suitable(long m) {
    if (m <= 0) {
        throw std::invalid_argument("suitability is defined for positive exponents");
    }
    return m % 10 == 5;
}

bool parity_check(const PPSolution& s) {
    return mpz_odd_p(s.x().get_mpz_t()) && mpz_even_p(s.y().get_mpz_t());
}

unsigned xy_residue_mod3(const PPSolution& s) {
    unsigned r = mod3(s.x() * s.y());
    internal_check(r != 0, "3 never divides xy in a primitive solution");
    return r;
}

}  // namespace descent_forge
