#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsocle/acceptance.hpp"
#include "qsocle/dense.hpp"
#include "qsocle/error.hpp"
#include "qsocle/quasisocle.hpp"
#include "qsocle/serialize.hpp"
#include "qsocle/statements.hpp"
#include "qsocle/tables.hpp"

namespace qsocle::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Human, Markdown, Csv, Json };

Format parse_format(const std::string& name) {
    if (name == "human") return Format::Human;
    if (name == "markdown") return Format::Markdown;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw ParseError("unknown format '" + name + "' (expected human, markdown, csv or json)");
}

std::string default_format() {
    const char* env = std::getenv("QSOCLE_FORMAT");
    return env && *env ? env : "human";
}

std::string join(const std::vector<Exponent>& values, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
    return out;
}

std::string yes(bool b) {
    return b ? "yes" : "no";
}

// Display width in code points, so that 𝔪 and ∞ count as one column.
std::size_t display_width(const std::string& text) {
    return static_cast<std::size_t>(
        std::count_if(text.begin(), text.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& text, std::size_t width) {
    return text + std::string(width - std::min(width, display_width(text)), ' ');
}

std::string render_text(const Table& table) {
    std::vector<std::size_t> widths(table.header.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], display_width(row[i]));
    };
    measure(table.header);
    for (const auto& row : table.rows) measure(row);

    std::ostringstream out;
    if (!table.caption.empty()) out << table.caption << "\n\n";
    auto line = [&](const std::vector<std::string>& row) {
        std::string text;
        for (std::size_t i = 0; i < row.size(); ++i) text += (i ? "  " : "") + pad(row[i], widths[i]);
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out << text << "\n";
    };
    line(table.header);
    std::vector<std::string> rule;
    for (std::size_t w : widths) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : table.rows) line(row);
    if (!table.notes.empty()) {
        out << "\n";
        for (const auto& note : table.notes) out << note << "\n";
    }
    return out.str();
}

std::string render(const Table& table, Format format) {
    switch (format) {
        case Format::Markdown: return render_markdown(table);
        case Format::Csv: return render_csv(table);
        default: return render_text(table);
    }
}

Table key_value_table(std::vector<std::pair<std::string, std::string>> rows) {
    Table table;
    table.header = {"property", "value"};
    for (auto& [k, v] : rows) table.rows.push_back({std::move(k), std::move(v)});
    return table;
}

std::vector<Exponent> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("range must look like LO:HI, got '" + text + "'");
    try {
        const Exponent lo = std::stoll(text.substr(0, colon));
        const Exponent hi = std::stoll(text.substr(colon + 1));
        std::vector<Exponent> out;
        for (Exponent n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    } catch (const std::logic_error&) {
        throw ParseError("range must look like LO:HI, got '" + text + "'");
    }
}

ParameterMap parse_params(const std::vector<std::string>& items) {
    ParameterMap out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("parameter must look like key=value, got '" + item + "'");
        try {
            out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
        } catch (const std::logic_error&) {
            throw ParseError("parameter value must be an integer in '" + item + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------- commands

struct Options {
    std::string format = default_format();
    std::vector<Exponent> gens;
    Exponent s = 0;
    int q = 0;
    std::vector<Exponent> s_list;
    std::string s_range;
    int example = 0;
    bool full_columns = false;
    bool grouped = false;

    std::vector<std::string> statements;
    bool all = false;
    bool acceptance = false;
    std::vector<int> criteria;
    std::vector<std::string> params;
    bool outcomes = false;
    SweepBounds bounds;

    std::size_t cases = 500;
    std::uint64_t seed = 20240229;
    Exponent c_max = 200;
};

int cmd_semigroup(const Options& o, std::ostream& out) {
    const NumericalSemigroup h(o.gens);
    const Format format = parse_format(o.format);
    if (format == Format::Json) {
        out << to_json(h) << "\n";
        return kOk;
    }
    const SemigroupInvariants inv = h.invariants();
    Table table = key_value_table({
        {"semigroup", h.to_string()},
        {"multiplicity", std::to_string(inv.multiplicity)},
        {"frobenius", std::to_string(inv.frobenius)},
        {"conductor", std::to_string(inv.conductor)},
        {"genus", std::to_string(inv.genus)},
        {"gaps", join(inv.gaps)},
        {"apery set", join(h.apery_set(h.multiplicity()))},
        {"symmetric", inv.symmetric ? "yes (k[[H]] is Gorenstein)" : "no"},
    });
    out << render(table, format);
    return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    const NumericalSemigroup h(o.gens);
    const Format format = parse_format(o.format);
    const QuasiSocleReport report = analyze(h, o.s, o.q);
    if (format == Format::Json) {
        out << to_json(report) << "\n";
        return kOk;
    }
    std::string vv;
    for (std::size_t i = 0; i < report.vv_table.size(); ++i)
        vv += (i ? ", " : "") + std::string("n=") + std::to_string(i + 1) + " " + yes(report.vv_table[i]);
    Table table = key_value_table({
        {"semigroup", h.to_string()},
        {"s", std::to_string(report.s)},
        {"q", std::to_string(report.q)},
        {"I", ideal_cell(report)},
        {"integral over Q", yes(report.integral_over_q)},
        {mq_header(report.q), yes_no(report.mq_stable)},
        {"r_Q(I)", reduction_cell(report)},
        {"G(I) is CM", cm_cell(report)},
        {"Q ∩ I^(n+1) = QI^n", vv.empty() ? "-" : vv},
        {"lengths I^(n+1)/QI^n", report.lengths.empty() ? "-" : join(report.lengths)},
    });
    out << render(table, format);
    return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    const MqColumn mq = o.full_columns ? MqColumn::Show : MqColumn::Auto;

    if (o.example != 0) {
        if (o.example < 1 || o.example > 3) throw InvalidParameters("--example takes 1, 2 or 3");
        const Table table = reproduce_tables()[static_cast<std::size_t>(o.example - 1)];
        if (format == Format::Json) throw InvalidParameters("--example tables render as human, markdown or csv");
        out << render(table, format);
        return kOk;
    }

    if (o.gens.empty()) throw InvalidParameters("table needs --gens or --example");
    if (o.q < 1) throw InvalidParameters("table needs --q >= 1");
    const NumericalSemigroup h(o.gens);
    std::vector<Exponent> s_values = o.s_list;
    if (!o.s_range.empty()) {
        for (Exponent s : parse_range(o.s_range))
            if (s > 0 && h.contains(s)) s_values.push_back(s);
    }
    if (s_values.empty()) throw InvalidParameters("table needs --s-list or --s-range with at least one member");

    if (format == Format::Json) {
        std::vector<QuasiSocleReport> reports;
        for (Exponent s : s_values) reports.push_back(analyze(h, s, o.q));
        out << to_json(reports) << "\n";
        return kOk;
    }
    const Table table = o.grouped ? build_grouped_table(h, o.q, s_values, mq) : build_table(h, o.q, s_values, mq);
    out << render(table, format);
    return kOk;
}

std::string describe(const VerificationOutcome& o) {
    std::string text(to_string(o.statement));
    if (!o.semigroup.empty()) text += " H=<" + join(o.semigroup) + ">";
    for (const auto& [k, v] : o.parameters) text += " " + k + "=" + std::to_string(v);
    if (!o.hypotheses_met) return text + ": hypotheses not met";
    if (o.conclusion_holds.value_or(false)) return text + ": conclusion holds";
    text += ": conclusion FAILS";
    if (o.counterexample) {
        text += " (" + o.counterexample->description;
        for (const auto& [k, v] : o.counterexample->witness) text += ", " + k + "=" + std::to_string(v);
        text += ")";
    }
    return text;
}

int cmd_acceptance(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    std::vector<int> ids = o.criteria.empty() ? acceptance_ids() : o.criteria;
    bool ok = true;
    for (int id : ids) {
        const CriterionResult r = run_criterion(id);
        ok = ok && r.passed();
        if (format == Format::Json) {
            Json j;
            j["criterion"] = r.id;
            j["name"] = r.name;
            j["passed"] = r.passed();
            j["seconds"] = r.seconds;
            j["limit_seconds"] = r.limit_seconds;
            j["failures"] = r.failures;
            out << j.dump() << "\n";
        } else {
            out << format_result(r);
        }
        out.flush();
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.acceptance) return cmd_acceptance(o, out);
    const Format format = parse_format(o.format);

    std::vector<StatementId> ids;
    if (o.all) ids.assign(kAllStatements.begin(), kAllStatements.end());
    for (const auto& name : o.statements) ids.push_back(parse_statement_id(name));
    if (ids.empty()) throw InvalidParameters("verify needs --statement, --all or --acceptance");

    // Explicit parameters run a single check instead of a sweep.
    if (!o.params.empty() || !o.gens.empty()) {
        if (ids.size() != 1) throw InvalidParameters("--param and --gens need exactly one --statement");
        StatementParams params;
        params.values = parse_params(o.params);
        if (!o.gens.empty()) params.semigroup = NumericalSemigroup(o.gens);
        const VerificationOutcome outcome = check_statement(ids.front(), params);
        out << (format == Format::Json ? to_json(outcome) : describe(outcome)) << "\n";
        const bool failed = outcome.hypotheses_met && !outcome.conclusion_holds.value_or(false);
        return failed ? kVerificationFailed : kOk;
    }

    Table table;
    table.header = {"statement", "holds", "fails", "hypotheses unmet"};
    bool ok = true;
    for (StatementId id : ids) {
        std::vector<std::string> failures;
        const SweepSummary summary = sweep_into(id, o.bounds, [&](const VerificationOutcome& outcome) {
            const bool failed = outcome.hypotheses_met && !outcome.conclusion_holds.value_or(false);
            if (format == Format::Json && (o.outcomes || failed)) out << to_json(outcome) << "\n";
            else if (failed) failures.push_back(describe(outcome));
        });
        ok = ok && summary.fails == 0;
        if (format == Format::Json) {
            out << to_json(id, summary) << "\n";
        } else {
            table.rows.push_back({std::string(to_string(id)), std::to_string(summary.holds),
                                  std::to_string(summary.fails), std::to_string(summary.hypotheses_unmet)});
            table.notes.insert(table.notes.end(), failures.begin(), failures.end());
        }
    }
    if (format != Format::Json) out << render(table, format);
    return ok ? kOk : kVerificationFailed;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    const OracleCampaignResult result = run_oracle_campaign(o.seed, o.cases, o.c_max);
    constexpr OracleOp kOps[] = {OracleOp::Product, OracleOp::Colon, OracleOp::Intersection, OracleOp::Equality};
    if (format == Format::Json) {
        Json j;
        j["cases"] = result.cases;
        j["seed"] = o.seed;
        j["max_conductor"] = o.c_max;
        Json per = Json::object();
        for (OracleOp op : kOps) per[std::string(to_string(op))] = result.per_op[static_cast<std::size_t>(op)];
        j["per_op"] = per;
        Json list = Json::array();
        for (const auto& d : result.disagreements)
            list.push_back({{"op", std::string(to_string(d.op))}, {"semigroup", d.semigroup}, {"lhs", d.lhs}, {"rhs", d.rhs}});
        j["disagreements"] = list;
        out << j.dump() << "\n";
    } else {
        Table table;
        table.header = {"operation", "cases"};
        for (OracleOp op : kOps)
            table.rows.push_back({std::string(to_string(op)),
                                  std::to_string(result.per_op[static_cast<std::size_t>(op)])});
        table.rows.push_back({"disagreements", std::to_string(result.disagreements.size())});
        for (const auto& d : result.disagreements)
            table.notes.push_back(std::string(to_string(d.op)) + " in <" + join(d.semigroup) + ">: (" + join(d.lhs) +
                                  ") vs (" + join(d.rhs) + ")");
        out << render(table, format);
    }
    return result.disagreements.empty() ? kOk : kVerificationFailed;
}

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "human, markdown, csv or json (default: $QSOCLE_FORMAT or human)")
        ->check(CLI::IsMember({"human", "markdown", "csv", "json"}));
}

void add_gens(CLI::App* cmd, Options& o, bool required) {
    auto* opt = cmd->add_option("--gens", o.gens, "semigroup generators, comma separated")->delimiter(',');
    if (required) opt->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Quasi-socle ideals in numerical semigroup rings"};
    app.name("qsocle");
    app.require_subcommand(1);

    auto* semigroup = app.add_subcommand("semigroup", "invariants of a numerical semigroup");
    add_gens(semigroup, o, true);
    add_format(semigroup, o);

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze I = (t^s) : m^q");
    add_gens(analyze_cmd, o, true);
    analyze_cmd->add_option("--s", o.s, "exponent of the parameter t^s")->required();
    analyze_cmd->add_option("--q", o.q, "power of the maximal ideal")->required();
    add_format(analyze_cmd, o);

    auto* table = app.add_subcommand("table", "one row per s: I, CM verdict, reduction number");
    add_gens(table, o, false);
    table->add_option("--q", o.q, "power of the maximal ideal");
    table->add_option("--s-list", o.s_list, "exponents s, comma separated")->delimiter(',');
    table->add_option("--s-range", o.s_range, "all members s in LO:HI");
    table->add_option("--example", o.example, "reproduce worked-example table 1, 2 or 3");
    table->add_flag("--full-columns", o.full_columns, "always show the m^q I = m^q Q column");
    table->add_flag("--grouped", o.grouped, "merge rows that agree up to translation by s");
    add_format(table, o);

    auto* verify = app.add_subcommand("verify", "check statements or run the acceptance suite");
    verify->add_option("--statement", o.statements, "statement id, e.g. RED_FORMULA (repeatable)");
    verify->add_flag("--all", o.all, "sweep every statement");
    verify->add_flag("--acceptance", o.acceptance, "run the acceptance criteria");
    verify->add_option("--criterion", o.criteria, "restrict --acceptance to these criteria");
    verify->add_option("--param", o.params, "key=value for a single check (repeatable)");
    add_gens(verify, o, false);
    verify->add_flag("--outcomes", o.outcomes, "with json, print every outcome, not only failures");
    verify->add_option("--a-min", o.bounds.a_min, "smallest a for <a,a+1> sweeps");
    verify->add_option("--a-max", o.bounds.a_max, "largest a for <a,a+1> sweeps");
    verify->add_option("--max-conductor", o.bounds.max_conductor, "conductor cap for random semigroups");
    verify->add_option("--family-conductor", o.bounds.family_conductor, "conductor cap for the Gorenstein family");
    verify->add_option("--s-factor", o.bounds.s_factor, "sweep s up to this multiple of the conductor");
    verify->add_option("--q-extra", o.bounds.q_extra, "extra q values past the natural range");
    verify->add_option("--seed", o.bounds.seed, "seed for random semigroups");
    verify->add_option("--random-semigroups", o.bounds.random_semigroups, "number of random semigroups");
    add_format(verify, o);

    auto* oracle = app.add_subcommand("oracle", "randomized comparison against the dense oracle");
    oracle->add_option("--cases", o.cases, "number of comparisons");
    oracle->add_option("--seed", o.seed, "random seed");
    oracle->add_option("--c-max", o.c_max, "conductor cap");
    add_format(oracle, o);

    std::vector<std::string> argv_storage{"qsocle"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*semigroup) return cmd_semigroup(o, out);
        if (*analyze_cmd) return cmd_analyze(o, out);
        if (*table) return cmd_table(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*oracle) return cmd_oracle(o, out);
    } catch (const InvariantViolation& e) {
        err << "qsocle: internal check failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "qsocle: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qsocle::cli
