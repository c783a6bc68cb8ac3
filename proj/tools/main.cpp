#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "choquet/io.hpp"

namespace {

using namespace choquet;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMath = 3;

std::vector<double> parse_function_arg(const std::string& arg) {
    std::vector<double> values;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ParseError("cannot parse function value '" + item + "'");
        }
    }
    if (values.empty()) throw ParseError("empty function list");
    return values;
}

int cmd_validate(const std::string& path) {
    auto problem = io::parse_problem_file(path);
    auto tol = Tolerances::from_env();
    try {
        auto set = problem.reference_set(tol);
        auto report = set.validate();
        std::cout << io::serialize_validation(problem, report).dump(2) << "\n";
        return kExitOk;
    } catch (const DegenerateSet& e) {
        std::cerr << "degenerate reference set: " << e.what() << "\n";
        return kExitValidation;
    }
}

int cmd_approximate(const std::string& path, bool text_mode) {
    auto problem = io::parse_problem_file(path);
    auto tol = Tolerances::from_env();
    auto set = problem.reference_set(tol);
    set.validate();
    auto p = problem.probability_vector(set);
    auto report = quantum::choquet(set, p);
    if (text_mode) {
        std::cout << io::format_report_text(report);
    } else {
        std::cout << io::serialize_report(problem, report).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_classical(const std::string& path, const std::vector<std::string>& function_args,
                  bool print_mobius) {
    auto problem = io::parse_problem_file(path);
    if (!problem.capacity) throw ParseError("problem has no 'capacity' section");
    const auto& mu = *problem.capacity;
    for (const auto& arg : function_args) {
        classical::RankedFunction f(parse_function_arg(arg));
        double value = classical::choquet_integral(f, mu);
        std::cout << "C(" << arg << ") = " << value << "\n";
    }
    if (print_mobius) {
        auto mob = classical::mobius(mu);
        std::cout << "mobius transform:\n";
        for (classical::Mask a = 1; a < mob.values().size(); ++a) {
            std::cout << "  mask " << a << ": " << mob.at(a) << "\n";
        }
    }
    return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
    auto pa = io::parse_problem_file(path_a);
    auto pb = io::parse_problem_file(path_b);
    auto tol = Tolerances::from_env();
    auto set = pa.reference_set(tol);
    set.validate();
    auto set_b = pb.reference_set(tol);
    if (set.d() != set_b.d() || set.n() != set_b.n()) {
        throw ParseError("the two problems use different reference sets");
    }
    for (int i = 0; i < set.n(); ++i) {
        if ((set.vector(i) - set_b.vector(i)).norm() > 1e-12) {
            throw ParseError("the two problems use different reference sets");
        }
    }
    auto p1 = pa.probability_vector(set);
    auto p2 = pb.probability_vector(set);
    auto verdict = comonotone::are_comonotonic_states(p1, p2, tol);
    switch (verdict.kind) {
        case comonotone::ComonotonicityKind::comonotonic: std::cout << "comonotonic"; break;
        case comonotone::ComonotonicityKind::weakly: std::cout << "weakly comonotonic"; break;
        case comonotone::ComonotonicityKind::neither: std::cout << "neither"; break;
    }
    if (verdict.boundary) std::cout << " (boundary)";
    std::cout << "\n";
    try {
        auto order = comonotone::compare(set, p1, p2);
        std::cout << "Tr[C]: " << order.left_trace << " vs " << order.right_trace << " -> ";
        switch (order.relation) {
            case comonotone::Relation::succeeds: std::cout << "first succeeds second"; break;
            case comonotone::Relation::precedes: std::cout << "first precedes second"; break;
            case comonotone::Relation::equivalent: std::cout << "equivalent"; break;
        }
        std::cout << "\n";
    } catch (const DifferentClass&) {
        std::cout << "preorder: not comparable (different comonotone classes)\n";
    } catch (const BoundaryInput&) {
        std::cout << "preorder: not comparable (boundary input)\n";
    }
    return kExitOk;
}

int cmd_family(const std::string& path, int samples, std::uint64_t seed, bool seed_given) {
    auto problem = io::parse_problem_file(path);
    if (!problem.probabilities) throw ParseError("'family' needs explicit probabilities");
    auto tol = Tolerances::from_env();
    auto set = problem.reference_set(tol);
    set.validate();
    quantum::ProbabilityVector p(*problem.probabilities);
    if (!seed_given && problem.seed) seed = *problem.seed;
    auto fam = family::solve_family(set, p);
    auto psd = family::psd_members(fam, samples, seed, tol);
    auto cmp = family::compare_with_choquet(set, p, fam, samples, seed);
    std::cout << io::serialize_family(problem, fam, psd, cmp).dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Choquet integrals of capacities and partially known density matrices"};
    app.require_subcommand(1);

    std::string path, path_b;
    bool json_mode = false, text_mode = false, print_mobius = false;
    std::vector<std::string> functions;
    int samples = 1000;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "Check a reference set for degeneracy");
    validate->add_option("file", path, "problem file")->required();

    auto* approximate =
        app.add_subcommand("approximate", "Compute C(rho), R(rho), bounds and error");
    approximate->add_option("file", path, "problem file")->required();
    approximate->add_flag("--json", json_mode, "JSON output (default)");
    approximate->add_flag("--text", text_mode, "four-decimal text output");

    auto* classical_cmd = app.add_subcommand("classical", "Classical Choquet integrals");
    classical_cmd->add_option("file", path, "problem file with a capacity section")->required();
    classical_cmd->add_option("--function", functions, "comma-separated values, repeatable")
        ->required();
    classical_cmd->add_flag("--mobius", print_mobius, "print the Moebius table");

    auto* compare = app.add_subcommand("compare", "Comonotonicity and preorder verdict");
    compare->add_option("fileA", path, "first problem file")->required();
    compare->add_option("fileB", path_b, "second problem file")->required();

    auto* family_cmd = app.add_subcommand("family", "Affine solution family and PSD sampling");
    family_cmd->add_option("file", path, "problem file with probabilities")->required();
    family_cmd->add_option("--samples", samples, "number of sampled members");
    auto* seed_opt = family_cmd->add_option("--seed", seed, "sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (approximate->parsed()) return cmd_approximate(path, text_mode);
        if (classical_cmd->parsed()) return cmd_classical(path, functions, print_mobius);
        if (compare->parsed()) return cmd_compare(path, path_b);
        if (family_cmd->parsed()) return cmd_family(path, samples, seed, seed_opt->count() > 0);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DegenerateSet& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const BoundViolation& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitMath;
    } catch (const InconsistentSystem& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitMath;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return kExitOk;
}
