// Command-line surface for the 7x^2 + 59y^2 = 3^m toolkit: tree
// generation, solution verification, descent certificates, the
// brute-force oracle and the ternary solvability criterion.
//
// stdout carries data only (JSONL or CSV records, certificates, verdict
// words); diagnostics go to stderr. Big integers are rendered as decimal
// strings so no consumer ever parses them through a lossy numeric type.

#include "descent_forge/descent.hpp"
#include "descent_forge/oracle.hpp"
#include "descent_forge/tree.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace df = descent_forge;

namespace {

df::Int parse_int(const std::string& text, const std::string& what) {
    try {
        return df::Int(text);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(what, "'" + text + "' is not a decimal integer");
    }
}

unsigned long parse_exponent(const std::string& text, const std::string& what) {
    df::Int value = parse_int(text, what);
    if (value <= 0 || !value.fits_ulong_p()) {
        throw CLI::ValidationError(what, "'" + text + "' is not a usable positive exponent");
    }
    return value.get_ui();
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("DESCENT_FORGE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("DESCENT_FORGE_BUDGET",
                                       std::string("'") + env + "' is not an integer");
        }
    }
    return df::kDefaultIterationBudget;
}

void emit_generate(const std::vector<df::TreeNode>& nodes, const std::string& format) {
    if (format == "csv") {
        std::cout << "m,x,y,depth,path\n";
        for (const df::TreeNode& node : nodes) {
            std::cout << node.solution.m() << ',' << node.solution.x().get_str() << ','
                      << node.solution.y().get_str() << ',' << node.depth << ',' << node.path
                      << '\n';
        }
        return;
    }
    for (const df::TreeNode& node : nodes) {
        df::json rec;
        rec["m"] = node.solution.m();
        rec["x"] = node.solution.x().get_str();
        rec["y"] = node.solution.y().get_str();
        rec["depth"] = node.depth;
        rec["path"] = node.path;
        std::cout << rec.dump() << '\n';
    }
}

int run_verify(const std::string& xs, const std::string& ys, const std::string& ms) {
    df::Int x = parse_int(xs, "x");
    df::Int y = parse_int(ys, "y");
    df::Int m = parse_int(ms, "m");
    if (!m.fits_slong_p()) {
        throw CLI::ValidationError("m", "exponent out of range");
    }
    df::SolutionClass cls = df::verify(x, y, m.get_si());
    switch (cls.tag) {
        case df::SolutionTag::pp_solution:
            std::cout << "pp_solution\n";
            return 0;
        case df::SolutionTag::primitive_nonpositive:
            std::cout << "primitive_nonpositive\n";
            return 1;
        case df::SolutionTag::imprimitive:
            std::cout << "imprimitive (gcd " << cls.scaled_by.get_str() << ")\n";
            return 1;
        case df::SolutionTag::not_a_solution:
            std::cout << "not_a_solution\n";
            return 2;
    }
    return 2;
}

df::PPSolution parse_solution(const std::string& xs, const std::string& ys,
                              const std::string& ms) {
    return df::PPSolution(parse_int(xs, "x"), parse_int(ys, "y"), parse_exponent(ms, "m"));
}

void emit_successor(const df::PPSolution& s, const std::string& which) {
    df::PPSolution next = which == "first" ? df::first_successor(s) : df::second_successor(s);
    df::json rec;
    rec["which"] = which;
    rec["m"] = next.m();
    rec["x"] = next.x().get_str();
    rec["y"] = next.y().get_str();
    std::cout << rec.dump() << '\n';
}

int run_oracle(const df::EquationSpec& spec, unsigned long m_max, std::uint64_t budget) {
    df::OracleSweep sweep = df::oracle_sweep(spec, m_max, budget);
    for (const auto& [m, hits] : sweep.hits) {
        for (const df::OracleHit& hit : hits) {
            df::json rec;
            rec["m"] = m;
            rec["x"] = hit.x.get_str();
            rec["y"] = hit.y.get_str();
            rec["primitive"] = hit.primitive;
            std::cout << rec.dump() << '\n';
        }
    }
    if (sweep.truncated) {
        df::json marker;
        marker["truncated"] = true;
        marker["at_m"] = sweep.truncated_at;
        std::cout << marker.dump() << '\n';
        std::cerr << "budget exhausted before m = " << sweep.truncated_at
                  << "; results above are complete for smaller exponents\n";
    }
    std::cerr << "suitable exponents:";
    for (unsigned long m : sweep.suitable) {
        std::cerr << ' ' << m;
    }
    std::cerr << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"all primitive positive solutions of 7x^2 + 59y^2 = 3^m: "
                 "generation, verification, descent certificates, brute-force oracle"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "enumerate pp-solutions sorted by exponent");
    std::string gen_max_m;
    std::string gen_format = "jsonl";
    generate->add_option("--max-m", gen_max_m, "largest exponent to emit (>= 5)")->required();
    generate->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "classify a triple against the equation");
    std::string vx, vy, vm;
    verify_cmd->add_option("x", vx)->required();
    verify_cmd->add_option("y", vy)->required();
    verify_cmd->add_option("m", vm)->required();

    // descend
    auto* descend = app.add_subcommand("descend", "emit a descent certificate down to (1,2,5)");
    std::string dx, dy, dm;
    descend->add_option("x", dx)->required();
    descend->add_option("y", dy)->required();
    descend->add_option("m", dm)->required();

    // successor
    auto* successor = app.add_subcommand("successor", "compute successors of a pp-solution");
    std::string sx, sy, sm, which;
    successor->add_option("x", sx)->required();
    successor->add_option("y", sy)->required();
    successor->add_option("m", sm)->required();
    successor->add_option("--which", which, "first or second; default emits both")
        ->check(CLI::IsMember({"first", "second"}));

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force scan of a*x^2 + b*y^2 = lambda*k^m");
    std::string oa = "7", ob = "59", olambda = "1", ok = "3";
    std::string om_max;
    std::optional<std::uint64_t> obudget;
    oracle->add_option("--a", oa, "x^2 coefficient");
    oracle->add_option("--b", ob, "y^2 coefficient");
    oracle->add_option("--lambda", olambda, "multiplier of the power");
    oracle->add_option("--k", ok, "power base (>= 2)");
    oracle->add_option("--m-max", om_max, "scan exponents 1..m_max")->required();
    oracle->add_option("--budget", obudget, "total scan-iteration budget");

    // check-solvability
    auto* solv = app.add_subcommand("check-solvability",
                                    "Legendre criterion for a*x^2 + b*y^2 = c*z^2");
    std::string ca, cb, cc;
    solv->add_option("a", ca)->required();
    solv->add_option("b", cb)->required();
    solv->add_option("c", cc)->required();

    // suitable
    auto* suitable = app.add_subcommand("suitable", "does exponent m admit a primitive solution");
    std::string um;
    suitable->add_option("m", um)->required();

    try {
        app.parse(argc, argv);

        if (*generate) {
            df::Int max_m = parse_int(gen_max_m, "--max-m");
            if (max_m < 5 || !max_m.fits_ulong_p()) {
                throw CLI::ValidationError("--max-m", "must be an integer >= 5");
            }
            emit_generate(df::enumerate_tree(max_m.get_ui()), gen_format);
            return 0;
        }
        if (*verify_cmd) {
            return run_verify(vx, vy, vm);
        }
        if (*descend) {
            df::DescentPath path = df::descend_to_root(parse_solution(dx, dy, dm));
            std::cout << df::certificate_json(path).dump(2) << '\n';
            return 0;
        }
        if (*successor) {
            df::PPSolution s = parse_solution(sx, sy, sm);
            if (which.empty()) {
                emit_successor(s, "first");
                emit_successor(s, "second");
            } else {
                emit_successor(s, which);
            }
            return 0;
        }
        if (*oracle) {
            df::EquationSpec spec(parse_int(oa, "--a"), parse_int(ob, "--b"),
                                  parse_int(olambda, "--lambda"), parse_int(ok, "--k"));
            return run_oracle(spec, parse_exponent(om_max, "--m-max"), resolve_budget(obudget));
        }
        if (*solv) {
            bool solvable = df::ternary_solvable(parse_int(ca, "a"), parse_int(cb, "b"),
                                                 parse_int(cc, "c"));
            std::cout << (solvable ? "solvable\n" : "unsolvable\n");
            return solvable ? 0 : 1;
        }
        if (*suitable) {
            df::Int m = parse_int(um, "m");
            if (!m.fits_slong_p()) {
                throw CLI::ValidationError("m", "exponent out of range");
            }
            bool ok_m = df::is_suitable(m.get_si());
            std::cout << (ok_m ? "suitable\n" : "not suitable\n");
            return ok_m ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
