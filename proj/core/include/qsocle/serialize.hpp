#pragma once

#include <string>
#include <vector>

#include "qsocle/ideal.hpp"
#include "qsocle/quasisocle.hpp"
#include "qsocle/semigroup.hpp"
#include "qsocle/statements.hpp"

namespace qsocle {

// JSON forms (single line, fields in documented order). Every *_from_json
// throws ParseError on malformed input.

/// {"generators":[...],"frobenius":n,"conductor":n,"symmetric":b}
std::string to_json(const NumericalSemigroup& h);
NumericalSemigroup semigroup_from_json(const std::string& text);

/// {"semigroup":[...],"generators":[...]}
std::string to_json(const SemigroupIdeal& ideal);
SemigroupIdeal ideal_from_json(const std::string& text);

/// {"semigroup":[...],"s":n,"q":n,"socle_generators":[...],"integral_over_q":b,
///  "mq_stable":b,"reduction_number":n|null,"cm":b|null,"vv_table":[...],"lengths":[...]}
std::string to_json(const QuasiSocleReport& report);
QuasiSocleReport report_from_json(const std::string& text);

/// {"statement":"ID","semigroup":[...],"parameters":{...},"hypotheses_met":b,
///  "conclusion_holds":b|null,"counterexample":{"description":...,"witness":{...}}|null}
std::string to_json(const VerificationOutcome& outcome);
VerificationOutcome outcome_from_json(const std::string& text);

/// {"statement":"ID","hypotheses_unmet":n,"holds":n,"fails":n}
std::string to_json(StatementId id, const SweepSummary& summary);

/// A JSON array of the given reports.
std::string to_json(const std::vector<QuasiSocleReport>& reports);

}  // namespace qsocle
