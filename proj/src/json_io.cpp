#include "dpoly/json_io.hpp"

#include <stdexcept>

#include "dpoly/parser.hpp"
#include "dpoly/printer.hpp"

namespace dpoly {

using nlohmann::json;

namespace {

json step_to_json(const ReductionStep& step) {
    json introduced = json::array();
    for (const auto& [name, definition] : step.introduced) {
        introduced.push_back({{"generator", name}, {"definition", print(definition)}});
    }
    return json{{"derivation", step.derivation},
                {"input", print_relation(step.input)},
                {"introduced", introduced},
                {"normalized", print_relation(step.normalized)},
                {"differentiated", print_identity(step.differentiated)},
                {"solved",
                 {{"generator", step.solved_generator},
                  {"exponent", step.solved_exponent},
                  {"rhs", print_series(step.solved_rhs)}}},
                {"output", print_relation(step.output)}};
}

Verdict verdict_from_string(const std::string& s) {
    for (const Verdict v : {Verdict::Certified, Verdict::Incompatible, Verdict::ReducesToConstants,
                            Verdict::InfinityNotExcluded, Verdict::NotMonic,
                            Verdict::ReductionFailed}) {
        if (to_string(v) == s) return v;
    }
    throw std::invalid_argument("certificate: unknown verdict '" + s + "'");
}

LaurentRelation relation_from_json(const std::string& text, const ContextPtr& ctx) {
    return parse_relation(text, ctx);
}

LaurentSeries series_from_json(const std::string& text, const ContextPtr& ctx) {
    // Stored series reuse the relation syntax with a synthetic left side.
    return parse_relation("1 = " + text, ctx).rhs();
}

}  // namespace

json certificate_to_json(const Certificate& cert) {
    const FirstOrderSystem& sys = cert.system;

    json equations = json::array();
    for (std::size_t i = 1; i <= sys.derivation_count(); ++i) {
        equations.push_back(sys.equation_string(i));
    }

    json integrability_pairs = json::array();
    for (const auto& pair : cert.integrability.pairs) {
        integrability_pairs.push_back({{"i", pair.i},
                                       {"j", pair.j},
                                       {"commutator", print(pair.commutator)},
                                       {"compatible", pair.compatible}});
    }

    json infinity = json::array();
    for (const auto& check : cert.infinity_checks) {
        infinity.push_back({{"derivation", check.derivation},
                            {"homogenized", print(check.homogenized)},
                            {"degree", check.degree},
                            {"value_at_one_zero", check.value.to_string()},
                            {"excludes_infinity", check.excludes}});
    }

    json monic = json::array();
    for (const auto& witness : cert.monic_witnesses) {
        monic.push_back({{"derivation", witness.derivation},
                         {"leading_coefficient", witness.leading_coefficient.to_string()},
                         {"scale", witness.scaling.scale.to_string()},
                         {"power", witness.scaling.power},
                         {"scaled", print(witness.scaling.scaled)}});
    }

    json axioms = json::array();
    for (const auto& axiom : cert.axioms) {
        axioms.push_back({{"name", axiom.name}, {"statement", axiom.statement}});
    }

    json out{{"schema", "dpoly.certificate"},
             {"version", Certificate::kSchemaVersion},
             {"system", {{"m", sys.derivation_count()}, {"variable", sys.variable()}, {"equations", equations}}},
             {"verdict", to_string(cert.verdict)},
             {"integrability",
              {{"compatible", cert.integrability.compatible}, {"pairs", integrability_pairs}}},
             {"infinity_checks", infinity},
             {"monic_witnesses", monic},
             {"axioms", axioms}};

    if (cert.reduction) {
        json steps = json::array();
        for (const auto& step : cert.reduction->steps) steps.push_back(step_to_json(step));
        out["reduction"] = {
            {"seed", print_relation(cert.reduction->seed)},
            {"generators", cert.reduction->seed.context()->variables()},
            {"steps", steps},
            {"final", print_relation(cert.reduction->final_relation)},
        };
    } else {
        out["reduction"] = nullptr;
    }
    return out;
}

Certificate certificate_from_json(const json& j) {
    if (j.at("schema").get<std::string>() != "dpoly.certificate" ||
        j.at("version").get<int>() != Certificate::kSchemaVersion) {
        throw std::invalid_argument("certificate: unsupported schema");
    }

    const auto& jsys = j.at("system");
    std::string system_text;
    for (const auto& eq : jsys.at("equations")) {
        if (!system_text.empty()) system_text += ";";
        system_text += eq.get<std::string>();
    }
    FirstOrderSystem sys = FirstOrderSystem::parse(system_text);
    const ContextPtr ring = sys.ring();

    Certificate cert{sys,
                     verdict_from_string(j.at("verdict").get<std::string>()),
                     {{}, j.at("integrability").at("compatible").get<bool>()},
                     {},
                     {},
                     {},
                     std::nullopt};

    for (const auto& jp : j.at("integrability").at("pairs")) {
        cert.integrability.pairs.push_back({jp.at("i").get<std::size_t>(),
                                            jp.at("j").get<std::size_t>(),
                                            parse_polynomial(jp.at("commutator").get<std::string>(), ring),
                                            jp.at("compatible").get<bool>()});
    }

    for (const auto& jc : j.at("infinity_checks")) {
        const ContextPtr hring =
            make_context(sys.derivation_count(), {sys.variable(), sys.variable() + "1"});
        cert.infinity_checks.push_back(
            {jc.at("derivation").get<std::size_t>(),
             parse_polynomial(jc.at("homogenized").get<std::string>(), hring),
             jc.at("degree").get<std::uint32_t>(),
             Rational::from_string(jc.at("value_at_one_zero").get<std::string>()),
             jc.at("excludes_infinity").get<bool>()});
    }

    for (const auto& jw : j.at("monic_witnesses")) {
        cert.monic_witnesses.push_back(
            {jw.at("derivation").get<std::size_t>(),
             Rational::from_string(jw.at("leading_coefficient").get<std::string>()),
             MonicScaling{Rational::from_string(jw.at("scale").get<std::string>()),
                          jw.at("power").get<std::uint32_t>(),
                          parse_polynomial(jw.at("scaled").get<std::string>(), ring)}});
    }

    for (const auto& ja : j.at("axioms")) {
        cert.axioms.push_back(
            {ja.at("name").get<std::string>(), ja.at("statement").get<std::string>()});
    }

    if (!j.at("reduction").is_null()) {
        const auto& jr = j.at("reduction");
        ContextPtr ctx = make_context(sys.derivation_count(),
                                      jr.at("generators").get<std::vector<std::string>>());
        const LaurentRelation seed = relation_from_json(jr.at("seed").get<std::string>(), ctx);

        std::vector<ReductionStep> steps;
        for (const auto& js : jr.at("steps")) {
            const LaurentRelation input = relation_from_json(js.at("input").get<std::string>(), ctx);
            std::vector<std::pair<std::string, DiffPolynomial>> introduced;
            for (const auto& ji : js.at("introduced")) {
                ctx = extended_context(ctx, ji.at("generator").get<std::string>());
                introduced.emplace_back(ji.at("generator").get<std::string>(),
                                        parse_polynomial(ji.at("definition").get<std::string>(), ctx));
            }
            steps.push_back(ReductionStep{
                js.at("derivation").get<std::size_t>(),
                input,
                std::move(introduced),
                relation_from_json(js.at("normalized").get<std::string>(), ctx),
                series_from_json(js.at("differentiated").get<std::string>().substr(4), ctx),
                js.at("solved").at("generator").get<std::string>(),
                js.at("solved").at("exponent").get<int>(),
                series_from_json(js.at("solved").at("rhs").get<std::string>(), ctx),
                relation_from_json(js.at("output").get<std::string>(), ctx)});
        }
        const LaurentRelation final_relation =
            relation_from_json(jr.at("final").get<std::string>(), ctx);
        cert.reduction = ReductionTrace{seed, std::move(steps), final_relation};
    }
    return cert;
}

json kolchin_to_json(const KolchinWitness& w) {
    return json{{"schema", "dpoly.kolchin"},
                {"version", 1},
                {"derivation", w.derivation},
                {"f1", print(w.f1)},
                {"f2", print(w.f2)},
                {"identity", "d" + std::to_string(w.derivation) + "(f1) = d" +
                                 std::to_string(w.derivation) + "(y)*f2"},
                {"identity_holds", true},
                {"homogenized", print(w.homogenized)},
                {"degree", w.degree},
                {"value_at_infinity", print(w.infinity_value)},
                {"excludes_infinity", !w.infinity_value.is_zero()},
                {"remarks",
                 json::array(
                     {"every solution of f1 = 0 with d" + std::to_string(w.derivation) +
                          "(y) != 0 also satisfies f2 = 0",
                      "the homogenization of f1 is non-zero at (y, y1) = (1, 0), so the "
                      "projective closure in y omits the point at infinity"})}};
}

}  // namespace dpoly
