#include <algorithm>
#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpoly/certifier.hpp"
#include "dpoly/homogenization.hpp"
#include "dpoly/json_io.hpp"
#include "dpoly/kolchin.hpp"
#include "dpoly/parser.hpp"
#include "dpoly/printer.hpp"

namespace {

using dpoly::ContextPtr;
using dpoly::DiffPolynomial;
using nlohmann::json;

// Exit codes: 0 success / positive verdict, 1 usage, 2 parse error,
// 3 negative verdict (INCOMPATIBLE and friends, is-homog false).
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerdict = 3;

struct GlobalOptions {
    std::size_t m = 1;
    bool m_given = false;
    std::string vars_csv;
    std::string format = "text";
};

std::string read_expression(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        std::size_t a = 0, b = item.size();
        while (a < b && std::isspace(static_cast<unsigned char>(item[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(item[b - 1]))) --b;
        if (a < b) out.push_back(item.substr(a, b - a));
    }
    return out;
}

ContextPtr ring_for(const GlobalOptions& global, const std::string& expr) {
    std::vector<std::string> vars = split_csv(global.vars_csv);
    if (vars.empty()) vars = dpoly::scan_identifiers(expr);
    if (vars.empty()) vars = {"y"};
    return dpoly::make_context(global.m, std::move(vars));
}

void emit(const GlobalOptions& global, const json& payload, const std::string& text) {
    if (global.format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

json inputs_json(const ContextPtr& ctx, const std::string& expr) {
    return json{{"expr", expr}, {"m", ctx->derivation_count()}, {"vars", ctx->variables()}};
}

int run_derive(const GlobalOptions& global, const std::string& raw_expr, std::size_t i) {
    const std::string expr = read_expression(raw_expr);
    const ContextPtr ctx = ring_for(global, expr);
    if (i < 1 || i > ctx->derivation_count()) {
        std::cerr << "error: derivation index " << i << " out of range (m = "
                  << ctx->derivation_count() << ")\n";
        return kExitUsage;
    }
    const DiffPolynomial f = dpoly::parse_polynomial(expr, ctx);
    const std::string result = dpoly::print(f.apply_derivation(i - 1));

    json inputs = inputs_json(ctx, expr);
    inputs["i"] = i;
    emit(global, json{{"command", "derive"}, {"inputs", inputs}, {"result", result}},
         result + "\n");
    return kExitOk;
}

int run_homog(const GlobalOptions& global, const std::string& raw_expr,
              std::vector<std::string> vars, const std::string& fresh) {
    const std::string expr = read_expression(raw_expr);
    const ContextPtr ctx = ring_for(global, expr);
    const DiffPolynomial f = dpoly::parse_polynomial(expr, ctx);
    if (vars.empty()) vars = ctx->variables();
    const auto h = dpoly::homogenize(f, vars, fresh);

    json inputs = inputs_json(ctx, expr);
    inputs["affine_vars"] = vars;
    inputs["fresh"] = fresh;
    emit(global,
         json{{"command", "homog"},
              {"inputs", inputs},
              {"result", {{"homogenized", dpoly::print(h.result)}, {"degree", h.degree}}}},
         "homogenized: " + dpoly::print(h.result) + "\ndegree: " + std::to_string(h.degree) +
             "\n");
    return kExitOk;
}

int run_is_homog(const GlobalOptions& global, const std::string& raw_expr, std::uint32_t degree,
                 std::vector<std::string> vars) {
    const std::string expr = read_expression(raw_expr);
    const ContextPtr ctx = ring_for(global, expr);
    const DiffPolynomial f = dpoly::parse_polynomial(expr, ctx);
    if (vars.empty()) vars = ctx->variables();
    const bool homogeneous = dpoly::is_delta_homogeneous(f, vars, degree);

    json inputs = inputs_json(ctx, expr);
    inputs["d"] = degree;
    inputs["checked_vars"] = vars;
    emit(global,
         json{{"command", "is-homog"}, {"inputs", inputs}, {"result", {{"homogeneous", homogeneous}}}},
         std::string(homogeneous ? "true" : "false") + "\n");
    return homogeneous ? kExitOk : kExitVerdict;
}

int run_kolchin(const GlobalOptions& global, std::size_t i) {
    const std::size_t m = global.m_given ? global.m : std::max<std::size_t>(1, i);
    const dpoly::KolchinWitness witness = dpoly::build_kolchin_witness(i, m);

    std::ostringstream text;
    text << "derivation: " << witness.derivation << "\n"
         << "f1: " << dpoly::print(witness.f1) << "\n"
         << "f2: " << dpoly::print(witness.f2) << "\n"
         << "identity: d" << witness.derivation << "(f1) = d" << witness.derivation
         << "(y)*f2\n"
         << "identity_holds: true\n"
         << "homogenized: " << dpoly::print(witness.homogenized) << "\n"
         << "degree: " << witness.degree << "\n"
         << "value_at_infinity: " << dpoly::print(witness.infinity_value) << "\n"
         << "excludes_infinity: true\n";

    json payload = dpoly::kolchin_to_json(witness);
    emit(global,
         json{{"command", "kolchin"},
              {"inputs", {{"i", i}, {"m", m}}},
              {"result", payload}},
         text.str());
    return kExitOk;
}

int run_certify(const GlobalOptions& global, const std::string& system_text,
                const std::string& seed_text) {
    const dpoly::FirstOrderSystem sys = dpoly::FirstOrderSystem::parse(system_text);
    const dpoly::LaurentRelation seed = dpoly::parse_seed(seed_text, sys.derivation_count());
    const dpoly::Certificate cert = dpoly::certify_complete(sys, seed);

    std::ostringstream text;
    text << "verdict: " << dpoly::to_string(cert.verdict) << "\n";
    for (std::size_t i = 1; i <= sys.derivation_count(); ++i) {
        text << "equation " << i << ": " << sys.equation_string(i) << "\n";
    }
    for (const auto& pair : cert.integrability.pairs) {
        text << "integrability (" << pair.i << "," << pair.j
             << "): " << (pair.compatible ? "ok" : "fails, commutator " + dpoly::print(pair.commutator))
             << "\n";
    }
    for (const auto& check : cert.infinity_checks) {
        text << "H" << check.derivation << ": " << dpoly::print(check.homogenized) << " (degree "
             << check.degree << ", value at [1,0] = " << check.value.to_string() << ")\n";
    }
    for (const auto& witness : cert.monic_witnesses) {
        text << "monic " << witness.derivation << ": " << dpoly::print(witness.scaling.scaled)
             << " (n = " << witness.scaling.power
             << ", scale = " << witness.scaling.scale.to_string() << ")\n";
    }
    if (cert.reduction) {
        text << "seed: " << dpoly::print_relation(cert.reduction->seed) << "\n";
        std::size_t n = 0;
        for (const auto& step : cert.reduction->steps) {
            text << "step " << ++n << " [d" << step.derivation
                 << "]: " << dpoly::print_relation(step.output) << "\n";
        }
        text << "final: " << dpoly::print_relation(cert.reduction->final_relation) << "\n";
    }

    emit(global,
         json{{"command", "certify"},
              {"inputs", {{"system", system_text}, {"seed", seed_text}}},
              {"result", dpoly::certificate_to_json(cert)}},
         text.str());

    const bool positive = cert.verdict == dpoly::Verdict::Certified ||
                          cert.verdict == dpoly::Verdict::ReducesToConstants;
    return positive ? kExitOk : kExitVerdict;
}

int run_reduce(const GlobalOptions& global, const std::string& relation_text,
               const std::string& system_text) {
    const dpoly::FirstOrderSystem sys = dpoly::FirstOrderSystem::parse(system_text);
    const dpoly::LaurentRelation seed = dpoly::parse_seed(relation_text, sys.derivation_count());
    if (sys.first_nonlinear() == 0) {
        std::cerr << "error: every P_i is linear; the reduction needs deg P_i >= 2\n";
        return kExitUsage;
    }
    const dpoly::ReductionTrace trace = dpoly::run_reduction(seed, sys);

    std::ostringstream text;
    std::size_t n = 0;
    json steps = json::array();
    for (const auto& step : trace.steps) {
        text << "step " << ++n << " [d" << step.derivation
             << "]: " << dpoly::print_relation(step.output) << "\n";
        json introduced = json::array();
        for (const auto& [name, definition] : step.introduced) {
            introduced.push_back({{"generator", name}, {"definition", dpoly::print(definition)}});
        }
        steps.push_back({{"derivation", step.derivation},
                         {"input", dpoly::print_relation(step.input)},
                         {"introduced", introduced},
                         {"normalized", dpoly::print_relation(step.normalized)},
                         {"differentiated", dpoly::print_identity(step.differentiated)},
                         {"solved",
                          {{"generator", step.solved_generator},
                           {"exponent", step.solved_exponent},
                           {"rhs", dpoly::print_series(step.solved_rhs)}}},
                         {"output", dpoly::print_relation(step.output)}});
    }
    text << "final: " << dpoly::print_relation(trace.final_relation) << "\n";

    const int final_max = trace.final_relation.rhs().is_zero() ? 0 : trace.final_relation.max_degree();
    emit(global,
         json{{"command", "reduce"},
              {"inputs", {{"relation", relation_text}, {"system", system_text}}},
              {"result",
               {{"final", dpoly::print_relation(trace.final_relation)},
                {"final_max_degree", final_max},
                {"step_count", trace.steps.size()}}},
              {"trace", steps}},
         text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"differential polynomial algebra: homogenization, the projective-line "
                 "counterexample, and completeness certificates for first-order systems"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("-m,--derivations", global.m, "number of commuting derivations")
        ->default_val(1);
    app.add_option("--vars", global.vars_csv,
                   "comma-separated ring variables (default: inferred from the expression)");
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    std::string expr;
    std::string fresh;
    std::string system_text;
    std::string seed_text = dpoly::kSeedDefault;
    std::string relation_text;
    std::vector<std::string> affine_vars;
    std::vector<std::string> checked_vars;
    std::size_t derivation_index = 1;
    std::uint32_t degree = 0;

    CLI::App* derive = app.add_subcommand("derive", "apply one derivation to an expression");
    derive->add_option("-i,--index", derivation_index, "derivation index (1-based)")->required();
    derive->add_option("expr", expr, "expression, or '-' for stdin")->required();

    CLI::App* homog = app.add_subcommand("homog", "homogenize an expression");
    homog->add_option("expr", expr, "expression, or '-' for stdin")->required();
    homog->add_option("--var", affine_vars, "affine variable to homogenize (repeatable; default: all)");
    homog->add_option("--fresh", fresh, "name of the fresh homogenizing variable")->required();

    CLI::App* is_homog = app.add_subcommand("is-homog", "test homogeneity of a given degree");
    is_homog->add_option("expr", expr, "expression, or '-' for stdin")->required();
    is_homog->add_option("-d,--degree", degree, "degree to test")->required();
    is_homog->add_option("--var", checked_vars, "variable subset to scale (repeatable; default: all)");

    CLI::App* kolchin = app.add_subcommand("kolchin", "emit the projective-line counterexample report");
    kolchin->add_option("-i,--index", derivation_index, "derivation index (1-based)")->default_val(1);

    CLI::App* certify = app.add_subcommand("certify", "build a completeness certificate");
    certify->add_option("--system", system_text, "system 'd1(y)=P1;...;dm(y)=Pm'")->required();
    certify->add_option("--seed", seed_text, "seed relation (default '1 = m1*x + m0')");

    CLI::App* reduce = app.add_subcommand("reduce", "run the degree reduction on a relation");
    reduce->add_option("--relation", relation_text, "relation '1 = ...'")->required();
    reduce->add_option("--system", system_text, "system 'd1(y)=P1;...;dm(y)=Pm'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    global.m_given = app.count("-m") > 0 || app.count("--derivations") > 0;

    try {
        if (derive->parsed()) return run_derive(global, expr, derivation_index);
        if (homog->parsed()) return run_homog(global, expr, affine_vars, fresh);
        if (is_homog->parsed()) return run_is_homog(global, expr, degree, checked_vars);
        if (kolchin->parsed()) return run_kolchin(global, derivation_index);
        if (certify->parsed()) return run_certify(global, system_text, seed_text);
        if (reduce->parsed()) return run_reduce(global, relation_text, system_text);
    } catch (const dpoly::ParseError& e) {
        std::cerr << "parse error at byte " << e.offset() << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return kExitVerdict;
    }
    return kExitUsage;
}
