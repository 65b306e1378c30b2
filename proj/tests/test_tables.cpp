#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qsocle/tables.hpp"

using namespace qsocle;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(QSOCLE_FIXTURES_DIR) + "/" + name);
    EXPECT_TRUE(in.good()) << name;
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

struct PrintedRow {
    std::string s;
    std::vector<Exponent> generators;  // relative to s when the row is written with s
    std::vector<std::string> verdicts;
};

// Parses "| s | (g1,g2,...)[ = 𝔪] | CM | r [| mq] |" rows of a markdown table.
std::vector<PrintedRow> parse_rows(const std::string& markdown) {
    std::vector<PrintedRow> rows;
    std::istringstream in(markdown);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.rfind("|", 0) != 0) continue;
        if (line.rfind("|---", 0) == 0) {
            header_seen = true;
            continue;
        }
        if (!header_seen) continue;
        std::vector<std::string> cells;
        std::istringstream cells_in(line.substr(1));
        std::string cell;
        while (std::getline(cells_in, cell, '|')) {
            const auto b = cell.find_first_not_of(' ');
            const auto e = cell.find_last_not_of(' ');
            cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
        }
        PrintedRow row;
        row.s = cells[0];
        std::string gens = cells[1].substr(1, cells[1].find(')') - 1);
        std::istringstream g(gens);
        std::string item;
        while (std::getline(g, item, ',')) {
            if (item == "s") row.generators.push_back(0);
            else if (item.rfind("s+", 0) == 0) row.generators.push_back(std::stoll(item.substr(2)));
            else row.generators.push_back(std::stoll(item));
        }
        row.verdicts.assign(cells.begin() + 2, cells.end());
        rows.push_back(row);
    }
    return rows;
}

bool same_ideal(const NumericalSemigroup& h, Exponent s, const std::vector<Exponent>& printed, bool relative,
                const SemigroupIdeal& computed) {
    std::vector<Exponent> gens;
    for (Exponent g : printed) {
        const Exponent n = relative ? s + g : g;
        if (!h.contains(n)) return false;
        gens.push_back(n);
    }
    return ideal_from_generators(h, gens) == computed;
}

}  // namespace

TEST(Tables, GoldenMarkdown) {
    const auto tables = reproduce_tables();
    ASSERT_EQ(tables.size(), 3u);
    EXPECT_EQ(render_markdown(tables[0]), read_fixture("table1.md"));
    EXPECT_EQ(render_markdown(tables[1]), read_fixture("table2.md"));
    EXPECT_EQ(render_markdown(tables[2]), read_fixture("table3.md"));
}

TEST(Tables, GoldenCsv) {
    EXPECT_EQ(render_csv(reproduce_tables()[1]), read_fixture("table2.csv"));
}

TEST(Tables, SecondTableMatchesTranscriptionByteForByte) {
    EXPECT_EQ(render_markdown(reproduce_tables()[1]), read_fixture("transcribed_table2.md"));
}

TEST(Tables, FirstTableAgainstTranscription) {
    const NumericalSemigroup h{10, 13, 16, 17, 19};
    std::vector<std::string> mismatches;
    for (const auto& row : parse_rows(read_fixture("transcribed_table1.md"))) {
        const Exponent s = std::stoll(row.s);
        const auto report = analyze(h, s, 3);
        if (!same_ideal(h, s, row.generators, false, report.socle_ideal)) mismatches.push_back(row.s + " I");
        if (row.verdicts[0] != cm_cell(report)) mismatches.push_back(row.s + " CM");
        if (row.verdicts[1] != reduction_cell(report)) mismatches.push_back(row.s + " r");
    }
    // The printed generator lists at s=17 and s=19 and the CM verdict at s=13
    // disagree with exhaustive recomputation; every other cell agrees.
    EXPECT_EQ(mismatches, (std::vector<std::string>{"13 CM", "17 I", "19 I"}));
}

TEST(Tables, ThirdTableAgainstTranscription) {
    const NumericalSemigroup h{7, 10, 18, 22};
    const auto rows = parse_rows(read_fixture("transcribed_table3.md"));
    ASSERT_EQ(rows.size(), 2u);
    for (Exponent s : members_in_power(h, 3, 3 * h.conductor(), true)) {
        const auto report = analyze(h, s, 3);
        const PrintedRow& row = s == 21 ? rows[0] : rows[1];
        EXPECT_TRUE(same_ideal(h, s, row.generators, true, report.socle_ideal)) << "s=" << s;
        EXPECT_EQ(row.verdicts[0], cm_cell(report)) << "s=" << s;
        EXPECT_EQ(row.verdicts[1], reduction_cell(report)) << "s=" << s;
        EXPECT_EQ(row.verdicts[2], yes_no(report.mq_stable)) << "s=" << s;
    }
}

TEST(Tables, MqColumnRule) {
    const NumericalSemigroup h{10, 13, 16, 17, 19};
    const std::vector<Exponent> s{10, 13};
    EXPECT_EQ(build_table(h, 3, s).header.size(), 4u);
    EXPECT_EQ(build_table(h, 3, s, MqColumn::Show).header.size(), 5u);
    const NumericalSemigroup h2{7, 10, 18, 22};
    EXPECT_EQ(build_table(h2, 3, std::vector<Exponent>{7, 10}).header.size(), 5u);
    EXPECT_EQ(build_table(h2, 3, std::vector<Exponent>{7, 10}, MqColumn::Hide).header.size(), 4u);
}

TEST(Tables, CellRendering) {
    const auto not_integral = analyze(NumericalSemigroup{3, 4}, 3, 3);
    EXPECT_EQ(reduction_cell(not_integral), "∞");
    EXPECT_EQ(cm_cell(not_integral), "n/a");
    EXPECT_EQ(ideal_cell(analyze(NumericalSemigroup{10, 13, 16, 17, 19}, 10, 3)), "(10,13,16,17,19) = 𝔪");
    EXPECT_EQ(mq_header(1), "𝔪I=𝔪Q");
}

TEST(Tables, CsvQuotesCommas) {
    Table t;
    t.header = {"s", "I"};
    t.rows = {{"7", "(7,18)"}};
    EXPECT_EQ(render_csv(t), "s,I\n7,\"(7,18)\"\n");
}
