#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsocle/semigroup.hpp"

namespace qsocle {

/// One checker per published result about quasi-socle ideals. The wire
/// names (MAIN_THM, ...) are stable and used by the CLI and JSON output.
enum class StatementId {
    MainTheorem,          // MAIN_THM
    ReflectionLemma,      // REFLECTION_LEMMA
    IntegralityLemma,     // INTEGRALITY_LEMMA
    GorensteinQ2,         // GORENSTEIN_Q2
    GmtCorollary,         // GMT_COR
    Aa1Membership,        // AA1_MEMBERSHIP
    Aa1C1C2Iff,           // AA1_C1C2_IFF
    Aa1IntegralEquiv,     // AA1_INTEGRAL_EQUIV
    Aa1Corollary,         // AA1_COR
    GeneratorFormula,     // GEN_FORMULA
    ReductionFormula,     // RED_FORMULA
    ReductionBound,       // RED_BOUND
    NonCmA,               // NONCM_A
    NonCmB,               // NONCM_B
    CmIff,                // CM_IFF
};

inline constexpr std::array<StatementId, 15> kAllStatements = {
    StatementId::MainTheorem,      StatementId::ReflectionLemma,  StatementId::IntegralityLemma,
    StatementId::GorensteinQ2,     StatementId::GmtCorollary,     StatementId::Aa1Membership,
    StatementId::Aa1C1C2Iff,       StatementId::Aa1IntegralEquiv, StatementId::Aa1Corollary,
    StatementId::GeneratorFormula, StatementId::ReductionFormula, StatementId::ReductionBound,
    StatementId::NonCmA,           StatementId::NonCmB,           StatementId::CmIff,
};

std::string_view to_string(StatementId id) noexcept;
/// Throws UnknownStatement.
StatementId parse_statement_id(std::string_view name);

using ParameterMap = std::map<std::string, Exponent>;

/// Inputs to a checker. Statements about a general H read `semigroup`;
/// statements about <a, a+1> read "a" (and others) from `values`.
struct StatementParams {
    std::optional<NumericalSemigroup> semigroup;
    ParameterMap values;
};

struct Counterexample {
    std::string description;
    ParameterMap witness;
};

struct VerificationOutcome {
    StatementId statement;
    ParameterMap parameters;
    std::vector<Exponent> semigroup;  // empty for <a, a+1> statements
    bool hypotheses_met = false;
    std::optional<bool> conclusion_holds;
    std::optional<Counterexample> counterexample;
};

/// Evaluates the hypotheses as stated, then the conclusion. Never throws for
/// a failed conclusion; throws InvalidParameters for missing or malformed
/// parameters.
VerificationOutcome check_statement(StatementId id, const StatementParams& params);

/// Default ranges: a <= 12, conductor <= 200, s <= 3c, q <= a + 2.
struct SweepBounds {
    Exponent a_min = 2;
    Exponent a_max = 12;
    Exponent max_conductor = 200;
    /// Conductor cap for the Gorenstein family used by the H-statements.
    Exponent family_conductor = 150;
    Exponent s_factor = 3;
    Exponent q_extra = 2;
    std::uint64_t seed = 20240229;
    std::size_t random_semigroups = 60;
    /// Overrides the generated family for H-statements when non-empty.
    std::vector<NumericalSemigroup> semigroups;
};

struct SweepSummary {
    std::size_t hypotheses_unmet = 0;
    std::size_t holds = 0;
    std::size_t fails = 0;

    std::size_t total() const noexcept { return hypotheses_unmet + holds + fails; }
};

struct SweepResult {
    StatementId statement;
    std::vector<VerificationOutcome> outcomes;  // sorted by parameter tuple
    SweepSummary summary;
};

SweepResult sweep(StatementId id, const SweepBounds& bounds = {});

/// Streaming form of sweep: each outcome is passed to `visit` in order and
/// only the summary is kept.
SweepSummary sweep_into(StatementId id, const SweepBounds& bounds,
                        const std::function<void(const VerificationOutcome&)>& visit);

SweepSummary summarize(const std::vector<VerificationOutcome>& outcomes);

}  // namespace qsocle
