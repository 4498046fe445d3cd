#include "descent_forge/descent.hpp"

#include <optional>

namespace descent_forge {

namespace {

constexpr int kVariantSigns[4][2] = {{+1, +1}, {-1, +1}, {+1, -1}, {-1, -1}};

struct PredecessorChoice {
    PPSolution parent;
    SuccessorKind kind;
};

}  // namespace

std::array<VariantInfo, 4> variant_analysis(const PPSolution& s) {
    if (s.is_root()) {
        throw std::domain_error("root has no predecessor");
    }
    unsigned long m = s.m();
    internal_check(m % 2 == 1, "solution exponents are odd");
    internal_check(m >= 15, "non-root solutions have exponent >= 15");
    unsigned long n = (m - 1) / 2;
    Int z = pow3(n);  // 7x^2 + 59y^2 = 3^m = 3z^2

    std::array<std::optional<VariantInfo>, 4> out;
    for (int i = 0; i < 4; ++i) {
        int sx = kVariantSigns[i][0];
        int sy = kVariantSigns[i][1];
        Rational theta = incidence(sx * s.x(), sy * s.y(), z);
        Reconstruction rec = reconstruct_from_incidence(theta);
        bool admissible = !divides(Int(7), rec.delta) && !divides(Int(59), rec.delta);
        out[i] = VariantInfo{i + 1, sx, sy, theta, rec.delta, admissible};
    }
    return {*out[0], *out[1], *out[2], *out[3]};
}

DescentStep predecessor(const PPSolution& s) {
    if (s.is_root()) {
        throw std::domain_error("root has no predecessor");
    }
    unsigned long n = (s.m() - 1) / 2;
    Int z = pow3(n);

    std::optional<DescentStep> chosen;
    for (int i = 0; i < 4 && !chosen; ++i) {
        int sx = kVariantSigns[i][0];
        int sy = kVariantSigns[i][1];
        Int vx = sx * s.x();
        Int vy = sy * s.y();
        Rational theta = incidence(vx, vy, z);
        Reconstruction rec = reconstruct_from_incidence(theta);
        if (divides(Int(7), rec.delta) || divides(Int(59), rec.delta)) {
            continue;
        }
        // Admissible variant: delta | 2*3^5, and an even delta would force
        // 7q^2 + 59p^2 = 2*3^(n+s-2), which has no solution; so delta is a
        // power of 3, and 3 | delta forces exactly 3^5.
        internal_check(mpz_odd_p(rec.delta.get_mpz_t()), "descent delta is odd");
        internal_check(rec.delta == 1 || rec.delta == pow3(5), "descent delta is 1 or 3^5");
        internal_check(rec.x == vx && rec.y == vy && rec.z == z,
                       "incidence reconstruction returns the variant triple");
        const Int& p = theta.num();
        const Int& q = theta.den();
        SuccessorKind kind =
            rec.delta == 1 ? SuccessorKind::second : SuccessorKind::first;
        unsigned long parent_m = rec.delta == 1 ? n - 2 : n + 3;
        PPSolution parent(q, abs(p), parent_m);
        internal_check(parent.m() < s.m(), "descent strictly decreases the exponent");
        internal_check(recognize_successor(s, parent) == kind,
                       "recognition criterion confirms the descent step");
        chosen = DescentStep{s, std::move(parent), kind, i + 1, theta, rec.delta};
    }
    internal_check(chosen.has_value(), "some sign variant avoids the divisors 7 and 59");
    return *chosen;
}

DescentPath descend_to_root(const PPSolution& s) {
    DescentPath path{s, {}};
    PPSolution current = s;
    while (!current.is_root()) {
        DescentStep step = predecessor(current);
        current = step.parent;
        path.steps.push_back(std::move(step));
    }
    return path;
}

namespace {

json solution_record(const PPSolution& s) {
    json j;
    j["x"] = s.x().get_str();
    j["y"] = s.y().get_str();
    j["m"] = s.m();
    return j;
}

}  // namespace

json certificate_json(const DescentPath& path) {
    json cert;
    cert["start"] = solution_record(path.start);
    cert["steps"] = json::array();
    for (const DescentStep& step : path.steps) {
        json rec = solution_record(step.parent);
        rec["kind"] = to_string(step.kind);
        rec["variant"] = step.variant;
        rec["theta"] = step.theta.str();
        rec["delta"] = step.delta.get_str();
        cert["steps"].push_back(std::move(rec));
    }
    return cert;
}

bool check_certificate(const json& certificate) {
    try {
        const json& start = certificate.at("start");
        PPSolution current(Int(start.at("x").get<std::string>()),
                           Int(start.at("y").get<std::string>()),
                           start.at("m").get<unsigned long>());
        for (const json& rec : certificate.at("steps")) {
            PPSolution parent(Int(rec.at("x").get<std::string>()),
                              Int(rec.at("y").get<std::string>()),
                              rec.at("m").get<unsigned long>());
            if (parent.m() >= current.m()) {
                return false;
            }
            std::string kind = rec.at("kind").get<std::string>();
            SuccessorKind recognized = recognize_successor(current, parent);
            if (recognized == SuccessorKind::neither || kind != to_string(recognized)) {
                return false;
            }
            current = parent;
        }
        return current == PPSolution::root();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace descent_forge
