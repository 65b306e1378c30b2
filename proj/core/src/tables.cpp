#include "qsocle/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace qsocle {

namespace {

std::string power_label(const std::string& base, Exponent n) {
    return n == 1 ? base : base + "^" + std::to_string(n);
}

std::string relative_ideal(const std::vector<Exponent>& offsets) {
    std::string out = "(";
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (i) out += ",";
        out += offsets[i] == 0 ? "s" : "s+" + std::to_string(offsets[i]);
    }
    return out + ")";
}

std::vector<std::string> header_for(int q, bool with_mq) {
    std::vector<std::string> header{"s", "I", "G(I) is CM", "r_Q(I)"};
    if (with_mq) header.push_back(mq_header(q));
    return header;
}

bool show_mq(MqColumn mq, const std::vector<QuasiSocleReport>& reports) {
    if (mq == MqColumn::Show) return true;
    if (mq == MqColumn::Hide) return false;
    return !std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.mq_stable; });
}

std::vector<QuasiSocleReport> analyze_all(const NumericalSemigroup& h, int q, std::span<const Exponent> s_values) {
    std::vector<QuasiSocleReport> reports;
    reports.reserve(s_values.size());
    for (Exponent s : s_values) reports.push_back(analyze(h, s, q));
    return reports;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string ideal_cell(const QuasiSocleReport& report) {
    std::string cell = report.socle_ideal.to_string();
    if (report.socle_ideal == SemigroupIdeal::maximal(report.semigroup)) cell += " = 𝔪";
    return cell;
}

std::string cm_cell(const QuasiSocleReport& report) {
    if (!report.cm) return "n/a";
    return yes_no(*report.cm);
}

std::string reduction_cell(const QuasiSocleReport& report) {
    return report.reduction_number ? std::to_string(*report.reduction_number) : "∞";
}

std::string yes_no(bool value) {
    return value ? "Yes" : "No";
}

std::string mq_header(int q) {
    const std::string mq = power_label("𝔪", q);
    return mq + "I=" + mq + "Q";
}

Table build_table(const NumericalSemigroup& h, int q, std::span<const Exponent> s_values, MqColumn mq) {
    const auto reports = analyze_all(h, q, s_values);
    const bool with_mq = show_mq(mq, reports);
    Table table;
    table.header = header_for(q, with_mq);
    for (const auto& report : reports) {
        std::vector<std::string> row{std::to_string(report.s), ideal_cell(report), cm_cell(report),
                                     reduction_cell(report)};
        if (with_mq) row.push_back(yes_no(report.mq_stable));
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table build_grouped_table(const NumericalSemigroup& h, int q, std::span<const Exponent> s_values, MqColumn mq) {
    const auto reports = analyze_all(h, q, s_values);
    const bool with_mq = show_mq(mq, reports);

    using Key = std::tuple<std::vector<Exponent>, std::string, std::string, bool>;
    std::map<Key, std::vector<Exponent>> groups;
    std::vector<Key> order;
    for (const auto& report : reports) {
        std::vector<Exponent> offsets;
        for (Exponent g : report.socle_ideal.generators()) offsets.push_back(g - report.s);
        Key key{std::move(offsets), cm_cell(report), reduction_cell(report), report.mq_stable};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(report.s);
    }

    // The largest group goes last as "otherwise"; ties resolve to the later group.
    std::size_t generic = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (groups[order[i]].size() >= groups[order[generic]].size()) generic = i;

    Table table;
    table.header = header_for(q, with_mq);
    auto emit = [&](const Key& key, std::string label) {
        std::vector<std::string> row{std::move(label), relative_ideal(std::get<0>(key)), std::get<1>(key),
                                     std::get<2>(key)};
        if (with_mq) row.push_back(yes_no(std::get<3>(key)));
        table.rows.push_back(std::move(row));
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == generic) continue;
        std::string label;
        for (Exponent s : groups[order[i]]) label += (label.empty() ? "" : ", ") + std::to_string(s);
        emit(order[i], label);
    }
    if (!order.empty()) emit(order[generic], order.size() == 1 ? "all" : "otherwise");
    return table;
}

std::vector<std::string> non_cm_notes(const QuasiSocleReport& report) {
    std::vector<std::string> notes;
    if (!report.cm || *report.cm) return notes;
    std::ostringstream out;
    out << "s = " << report.s << ":";
    for (std::size_t n = 1; n < report.lengths.size(); ++n) {
        out << (n == 1 ? " " : ", ") << "ℓ(" << power_label("I", static_cast<Exponent>(n + 1)) << "/Q"
            << power_label("I", static_cast<Exponent>(n)) << ") = " << report.lengths[n];
    }
    for (std::size_t i = 0; i < report.vv_table.size(); ++i) {
        if (report.vv_table[i]) continue;
        const auto n = static_cast<Exponent>(i + 1);
        out << "; Q ∩ " << power_label("I", n + 1) << " ≠ Q" << power_label("I", n);
        break;
    }
    notes.push_back(out.str());
    return notes;
}

std::vector<Exponent> members_in_power(const NumericalSemigroup& h, int q, Exponent bound, bool inside) {
    const SemigroupIdeal mq = max_ideal_power(h, q);
    std::vector<Exponent> out;
    for (Exponent s = 1; s <= bound; ++s)
        if (h.contains(s) && mq.contains(s) == inside) out.push_back(s);
    return out;
}

std::string render_markdown(const Table& table) {
    std::ostringstream out;
    if (!table.caption.empty()) out << table.caption << "\n\n";
    auto line = [&](const std::vector<std::string>& cells) {
        out << "|";
        for (const auto& cell : cells) out << " " << cell << " |";
        out << "\n";
    };
    line(table.header);
    out << "|";
    for (std::size_t i = 0; i < table.header.size(); ++i) out << "---|";
    out << "\n";
    for (const auto& row : table.rows) line(row);
    if (!table.notes.empty()) {
        out << "\n";
        for (const auto& note : table.notes) out << note << "\n";
    }
    return out.str();
}

std::string render_csv(const Table& table) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
        out << "\n";
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
    return out.str();
}

std::vector<Table> reproduce_tables() {
    std::vector<Table> tables;

    const NumericalSemigroup h1{10, 13, 16, 17, 19};
    std::vector<Exponent> s1;
    for (Exponent s = 1; s < 20; ++s)
        if (h1.contains(s)) s1.push_back(s);
    Table t1 = build_table(h1, 3, s1);
    t1.caption = "Table 1: s < 20";
    for (Exponent s : s1) {
        auto notes = non_cm_notes(analyze(h1, s, 3));
        t1.notes.insert(t1.notes.end(), notes.begin(), notes.end());
    }
    tables.push_back(std::move(t1));

    const NumericalSemigroup h2{7, 10, 18, 22};
    const Exponent bound = 3 * h2.conductor();
    Table t2 = build_table(h2, 3, members_in_power(h2, 3, bound, false));
    t2.caption = "Table 2: Q ⊄ 𝔪^3";
    tables.push_back(std::move(t2));

    Table t3 = build_grouped_table(h2, 3, members_in_power(h2, 3, bound, true));
    t3.caption = "Table 3: Q ⊆ 𝔪^3, s ≤ " + std::to_string(bound);
    tables.push_back(std::move(t3));
    return tables;
}

}  // namespace qsocle
