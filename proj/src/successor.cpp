#include "descent_forge/successor.hpp"

namespace descent_forge {

ParameterPair normalized_parameters(Int p, Int q) {
    unsigned r = mod3(p * q);
    internal_check(r != 0, "3 divides neither parameter of a primitive solution");
    if (r == 1) {
        p = -p;
    }
    return {std::move(p), std::move(q)};
}

ParameterPair normalized_parameters(const PPSolution& s) {
    return normalized_parameters(s.y(), s.x());
}

PPSolution first_successor(const PPSolution& s) {
    auto [p, q] = normalized_parameters(s);
    FormTriple t = eval_forms(p, q);
    Int threefive = pow3(5);
    internal_check(gcd(t.a, t.b) == threefive, "gcd of the form values at normalized parameters is 3^5");
    Int x = exact_div(abs(t.a), threefive);
    Int y = exact_div(abs(t.b), threefive);
    return PPSolution(std::move(x), std::move(y), 2 * s.m() - 5);
}

PPSolution second_successor(const PPSolution& s) {
    auto [p, q] = normalized_parameters(s);
    FormTriple t = eval_forms(-p, q);
    internal_check(mod3(t.a) != 0, "3 does not divide the second successor's x");
    return PPSolution(abs(t.a), abs(t.b), 2 * s.m() + 5);
}

const char* to_string(SuccessorKind k) {
    switch (k) {
        case SuccessorKind::first: return "first";
        case SuccessorKind::second: return "second";
        case SuccessorKind::neither: return "neither";
    }
    return "unknown";
}

SuccessorKind recognize_successor(const PPSolution& candidate, const PPSolution& parent) {
    const Int& q = parent.x();
    const Int& p = parent.y();
    const Int threefive = pow3(5);
    for (int sign : {+1, -1}) {
        FormTriple t = eval_forms(sign * p, q);
        if (candidate.x() == abs(t.a) && candidate.y() == abs(t.b)) {
            return SuccessorKind::second;
        }
    }
    for (int sign : {+1, -1}) {
        FormTriple t = eval_forms(sign * p, q);
        Int ua = abs(t.a);
        Int ub = abs(t.b);
        if (divides(threefive, ua) && divides(threefive, ub) &&
            candidate.x() == exact_div(ua, threefive) &&
            candidate.y() == exact_div(ub, threefive)) {
            return SuccessorKind::first;
        }
    }
    return SuccessorKind::neither;
}

}  // namespace descent_forge
