#include "qsocle/serialize.hpp"

#include "json.hpp"

#include "qsocle/error.hpp"

namespace qsocle {

namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("unexpected JSON shape: ") + e.what());
    }
}

Json report_json(const QuasiSocleReport& report) {
    Json j;
    j["semigroup"] = report.semigroup.generators();
    j["s"] = report.s;
    j["q"] = report.q;
    j["socle_generators"] = report.socle_ideal.generators();
    j["integral_over_q"] = report.integral_over_q;
    j["mq_stable"] = report.mq_stable;
    j["reduction_number"] = report.reduction_number ? Json(*report.reduction_number) : Json(nullptr);
    j["cm"] = report.cm ? Json(*report.cm) : Json(nullptr);
    j["vv_table"] = report.vv_table;
    j["lengths"] = report.lengths;
    return j;
}

Json parameters_json(const ParameterMap& values) {
    Json j = Json::object();
    for (const auto& [key, value] : values) j[key] = value;
    return j;
}

ParameterMap parameters_from(const Json& j) {
    ParameterMap out;
    for (const auto& [key, value] : j.items()) out[key] = value.get<Exponent>();
    return out;
}

}  // namespace

std::string to_json(const NumericalSemigroup& h) {
    Json j;
    j["generators"] = h.generators();
    j["frobenius"] = h.frobenius();
    j["conductor"] = h.conductor();
    j["symmetric"] = h.is_symmetric();
    return j.dump();
}

NumericalSemigroup semigroup_from_json(const std::string& text) {
    const Json j = parse(text);
    return guarded([&] {
        const auto gens = j.at("generators").get<std::vector<Exponent>>();
        return NumericalSemigroup(gens);
    });
}

std::string to_json(const SemigroupIdeal& ideal) {
    Json j;
    j["semigroup"] = ideal.ambient().generators();
    j["generators"] = ideal.generators();
    return j.dump();
}

SemigroupIdeal ideal_from_json(const std::string& text) {
    const Json j = parse(text);
    return guarded([&] {
        const NumericalSemigroup h(j.at("semigroup").get<std::vector<Exponent>>());
        const auto gens = j.at("generators").get<std::vector<Exponent>>();
        return SemigroupIdeal(h, gens);
    });
}

std::string to_json(const QuasiSocleReport& report) {
    return report_json(report).dump();
}

QuasiSocleReport report_from_json(const std::string& text) {
    const Json j = parse(text);
    return guarded([&] {
        const NumericalSemigroup h(j.at("semigroup").get<std::vector<Exponent>>());
        const auto gens = j.at("socle_generators").get<std::vector<Exponent>>();
        QuasiSocleReport report{
            .semigroup = h,
            .s = j.at("s").get<Exponent>(),
            .q = j.at("q").get<int>(),
            .socle_ideal = SemigroupIdeal(h, gens),
            .integral_over_q = j.at("integral_over_q").get<bool>(),
            .mq_stable = j.at("mq_stable").get<bool>(),
            .reduction_number = std::nullopt,
            .cm = std::nullopt,
            .vv_table = j.at("vv_table").get<std::vector<bool>>(),
            .lengths = j.at("lengths").get<std::vector<Exponent>>(),
        };
        if (!j.at("reduction_number").is_null()) report.reduction_number = j["reduction_number"].get<int>();
        if (!j.at("cm").is_null()) report.cm = j["cm"].get<bool>();
        return report;
    });
}

std::string to_json(const VerificationOutcome& outcome) {
    Json j;
    j["statement"] = std::string(to_string(outcome.statement));
    j["semigroup"] = outcome.semigroup;
    j["parameters"] = parameters_json(outcome.parameters);
    j["hypotheses_met"] = outcome.hypotheses_met;
    j["conclusion_holds"] = outcome.conclusion_holds ? Json(*outcome.conclusion_holds) : Json(nullptr);
    if (outcome.counterexample) {
        Json c;
        c["description"] = outcome.counterexample->description;
        c["witness"] = parameters_json(outcome.counterexample->witness);
        j["counterexample"] = c;
    } else {
        j["counterexample"] = nullptr;
    }
    return j.dump();
}

VerificationOutcome outcome_from_json(const std::string& text) {
    const Json j = parse(text);
    return guarded([&] {
        VerificationOutcome out;
        out.statement = parse_statement_id(j.at("statement").get<std::string>());
        out.semigroup = j.at("semigroup").get<std::vector<Exponent>>();
        out.parameters = parameters_from(j.at("parameters"));
        out.hypotheses_met = j.at("hypotheses_met").get<bool>();
        if (!j.at("conclusion_holds").is_null()) out.conclusion_holds = j["conclusion_holds"].get<bool>();
        if (const auto& c = j.at("counterexample"); !c.is_null())
            out.counterexample = Counterexample{c.at("description").get<std::string>(), parameters_from(c.at("witness"))};
        return out;
    });
}

std::string to_json(StatementId id, const SweepSummary& summary) {
    Json j;
    j["statement"] = std::string(to_string(id));
    j["hypotheses_unmet"] = summary.hypotheses_unmet;
    j["holds"] = summary.holds;
    j["fails"] = summary.fails;
    return j.dump();
}

std::string to_json(const std::vector<QuasiSocleReport>& reports) {
    Json j = Json::array();
    for (const auto& report : reports) j.push_back(report_json(report));
    return j.dump();
}

}  // namespace qsocle
