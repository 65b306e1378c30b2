#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsocle/quasisocle.hpp"

namespace qsocle {

/// A rendered-ready table: header and rows of display cells, plus free-text
/// notes printed after the markdown form.
struct Table {
    std::string caption;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

/// Whether to include the m^q I = m^q Q column. Auto drops it when every
/// row reads Yes.
enum class MqColumn { Auto, Show, Hide };

/// Display helpers shared with the CLI.
std::string ideal_cell(const QuasiSocleReport& report);
std::string cm_cell(const QuasiSocleReport& report);
std::string reduction_cell(const QuasiSocleReport& report);
std::string yes_no(bool value);
std::string mq_header(int q);

/// One row per s: s | I | G(I) is CM | r_Q(I) [| m^q I = m^q Q].
Table build_table(const NumericalSemigroup& h, int q, std::span<const Exponent> s_values,
                  MqColumn mq = MqColumn::Auto);

/// Like build_table, but rows whose ideals are translates of each other and
/// share every verdict are merged. The largest group is labelled
/// "otherwise" and its ideal is written relative to s, e.g. (s,s+4,...).
Table build_grouped_table(const NumericalSemigroup& h, int q, std::span<const Exponent> s_values,
                          MqColumn mq = MqColumn::Auto);

/// Notes on non-CM rows: the lengths of I^(n+1)/QI^n and the first n with
/// Q ∩ I^(n+1) != QI^n.
std::vector<std::string> non_cm_notes(const QuasiSocleReport& report);

/// Positive members s <= bound with t^s in m^q (or not in m^q).
std::vector<Exponent> members_in_power(const NumericalSemigroup& h, int q, Exponent bound, bool inside);

std::string render_markdown(const Table& table);
std::string render_csv(const Table& table);

/// The three worked-example tables: <10,13,16,17,19> with q=3 and s < 20;
/// <7,10,18,22> with q=3 split by whether t^s lies in m^3 (s up to 3c).
std::vector<Table> reproduce_tables();

}  // namespace qsocle
