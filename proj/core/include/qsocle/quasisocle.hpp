#pragma once

#include <optional>
#include <vector>

#include "qsocle/ideal.hpp"
#include "qsocle/semigroup.hpp"

namespace qsocle {

/// Verdicts for the two hypotheses of the main theorem at a fixed q:
///   c1: t^n in m^q for every integer n >= c;
///   c2: every n in H with t^n not in m^(q-1) satisfies n < a(q-1).
/// A failing condition carries the first offending exponent.
struct ConditionCheck {
    bool c1 = true;
    std::optional<Exponent> c1_witness;
    bool c2 = true;
    std::optional<Exponent> c2_witness;

    bool both() const noexcept { return c1 && c2; }
};

struct GradedCmCheck {
    /// Absent when Q is not a reduction of I (not evaluated).
    std::optional<bool> cm;
    /// Entry n-1 records Q ∩ I^(n+1) == Q I^n for n = 1..r_Q(I).
    std::vector<bool> vv_table;
};

struct QuasiSocleReport {
    NumericalSemigroup semigroup;
    Exponent s = 0;
    int q = 0;
    SemigroupIdeal socle_ideal;
    bool integral_over_q = false;
    bool mq_stable = false;
    /// Absent means infinite (I is not integral over Q).
    std::optional<int> reduction_number;
    std::optional<bool> cm;
    std::vector<bool> vv_table;
    /// Entry n is length(I^(n+1) / Q I^n) for n = 0..r_Q(I)-1.
    std::vector<Exponent> lengths;
};

/// s = a*ell + r in <a, a+1> with 0 <= r < a, p = (a-1) + (ell-q), k = ell - r.
struct AA1Decomposition {
    Exponent a = 0;
    Exponent q = 0;
    Exponent s = 0;
    Exponent ell = 0;
    Exponent r = 0;
    Exponent p = 0;
    Exponent k = 0;
};

/// m^q; q = 0 gives the unit ideal.
SemigroupIdeal max_ideal_power(const NumericalSemigroup& h, int q);

/// I = (t^s) : m^q. Throws NotInSemigroup unless 0 < s in H.
SemigroupIdeal quasi_socle(const NumericalSemigroup& h, Exponent s, int q);

ConditionCheck condition_check(const NumericalSemigroup& h, int q);

/// r_Q(I) for Q = (t^s), absent when I is not contained in the integral
/// closure of Q. Throws NotContainingQ unless t^s is in I.
std::optional<int> reduction_number(const NumericalSemigroup& h, Exponent s, const SemigroupIdeal& ideal);

/// Valabrega-Valla test of Q ∩ I^(n+1) = Q I^n up to the reduction number.
GradedCmCheck graded_cm_check(const NumericalSemigroup& h, Exponent s, const SemigroupIdeal& ideal);

/// m^q I == m^q Q for I = quasi_socle(h, s, q).
bool mq_stability(const NumericalSemigroup& h, Exponent s, int q);

QuasiSocleReport analyze(const NumericalSemigroup& h, Exponent s, int q);

/// Throws NotInSemigroup unless 0 < s in <a, a+1>, InvalidParameters for a < 2 or q < 1.
AA1Decomposition decompose(Exponent a, Exponent q, Exponent s);

/// Closed-form generators Q + m^(p+1) + (t^(ap+i) | p-ell+r < i <= p) for
/// H = <a, a+1>. Requires q < a and s < aq, else throws HypothesisNotMet.
SemigroupIdeal predicted_socle_gens(Exponent a, Exponent q, Exponent s);

/// ceil((a-1)/(ell+1)). Requires 1 <= ell < a-1, else throws HypothesisNotMet.
int predicted_reduction_number(Exponent a, Exponent ell);

}  // namespace qsocle
