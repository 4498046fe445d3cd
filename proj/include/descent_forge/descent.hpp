#pragma once

#include "descent_forge/successor.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <vector>

namespace descent_forge {

using json = nlohmann::ordered_json;

/// One descent move: child is the recorded kind of successor of parent.
/// delta is 1 exactly for second-successor steps and 3^5 for first-successor
/// steps; variant indexes the sign choice (+x,+y), (-x,+y), (+x,-y), (-x,-y)
/// whose incidence produced the parent.
struct DescentStep {
    PPSolution child;
    PPSolution parent;
    SuccessorKind kind;
    int variant;  // 1..4
    Rational theta;
    Int delta;
};

/// Per-variant diagnostics for the sign-variant selection: the incidence of
/// (sx*x, sy*y, z) reduced to p/q, the gcd of the form values there, and
/// whether that gcd avoids both 7 and 59.
struct VariantInfo {
    int index;  // 1..4
    int sx;     // +1 or -1
    int sy;
    Rational theta;
    Int delta;
    bool admissible;
};

/// Analyzes all four sign variants of s (which must not be the root).
std::array<VariantInfo, 4> variant_analysis(const PPSolution& s);

/// Maps a non-root pp-solution to the unique smaller pp-solution it is a
/// successor of. Error on the root; every other failure mode is a theorem
/// violation and raises an internal check.
DescentStep predecessor(const PPSolution& s);

struct DescentPath {
    PPSolution start;
    std::vector<DescentStep> steps;  // child exponents strictly decrease; last parent is the root
};

DescentPath descend_to_root(const PPSolution& s);

/// Certificate format: the start triple plus one record per step giving
/// the parent reached as (x, y, m, kind, variant, theta, delta), with x, y
/// and delta as decimal strings. A verifier needs only the recognition
/// criterion to replay it.
json certificate_json(const DescentPath& path);

/// Replays a certificate using recognize_successor alone; true iff every
/// recorded step is the claimed kind of successor relation, exponents
/// strictly decrease, and the chain ends at (1, 2, 5).
bool check_certificate(const json& certificate);

}  // namespace descent_forge
