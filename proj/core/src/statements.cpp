#include "qsocle/statements.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "qsocle/dense.hpp"
#include "qsocle/error.hpp"
#include "qsocle/families.hpp"
#include "qsocle/ideal.hpp"
#include "qsocle/quasisocle.hpp"

namespace qsocle {

namespace {

struct NamedStatement {
    StatementId id;
    std::string_view name;
};

constexpr std::array<NamedStatement, 15> kNames = {{
    {StatementId::MainTheorem, "MAIN_THM"},
    {StatementId::ReflectionLemma, "REFLECTION_LEMMA"},
    {StatementId::IntegralityLemma, "INTEGRALITY_LEMMA"},
    {StatementId::GorensteinQ2, "GORENSTEIN_Q2"},
    {StatementId::GmtCorollary, "GMT_COR"},
    {StatementId::Aa1Membership, "AA1_MEMBERSHIP"},
    {StatementId::Aa1C1C2Iff, "AA1_C1C2_IFF"},
    {StatementId::Aa1IntegralEquiv, "AA1_INTEGRAL_EQUIV"},
    {StatementId::Aa1Corollary, "AA1_COR"},
    {StatementId::GeneratorFormula, "GEN_FORMULA"},
    {StatementId::ReductionFormula, "RED_FORMULA"},
    {StatementId::ReductionBound, "RED_BOUND"},
    {StatementId::NonCmA, "NONCM_A"},
    {StatementId::NonCmB, "NONCM_B"},
    {StatementId::CmIff, "CM_IFF"},
}};

Exponent need(const ParameterMap& values, const std::string& key) {
    auto it = values.find(key);
    if (it == values.end()) throw InvalidParameters("missing parameter '" + key + "'");
    return it->second;
}

const NumericalSemigroup& need_semigroup(const StatementParams& params) {
    if (!params.semigroup) throw InvalidParameters("statement needs a semigroup");
    return *params.semigroup;
}

int as_q(Exponent q) {
    if (q < 1) throw InvalidParameters("q must be >= 1, got " + std::to_string(q));
    return static_cast<int>(q);
}

// Collects conclusion clauses; the first failing clause becomes the counterexample.
class Verdict {
public:
    Verdict(StatementId id, ParameterMap parameters, std::vector<Exponent> semigroup = {}) {
        out_.statement = id;
        out_.parameters = std::move(parameters);
        out_.semigroup = std::move(semigroup);
    }

    VerificationOutcome unmet() {
        out_.hypotheses_met = false;
        return std::move(out_);
    }

    void require(bool holds, std::string description, ParameterMap witness = {}) {
        if (holds || failure_) return;
        failure_ = Counterexample{std::move(description), std::move(witness)};
    }

    VerificationOutcome finish() {
        out_.hypotheses_met = true;
        out_.conclusion_holds = !failure_.has_value();
        out_.counterexample = std::move(failure_);
        return std::move(out_);
    }

private:
    VerificationOutcome out_{};
    std::optional<Counterexample> failure_;
};

bool is_cm(const NumericalSemigroup& h, Exponent s, const SemigroupIdeal& ideal) {
    const auto check = graded_cm_check(h, s, ideal);
    return check.cm.value_or(false);
}

// ---------------------------------------------------------------- general H

struct MainTheoremContext {
    SemigroupIdeal mq;
    ConditionCheck conditions;
};

MainTheoremContext main_context(const NumericalSemigroup& h, int q) {
    return {max_ideal_power(h, q), condition_check(h, q)};
}

VerificationOutcome check_main(const NumericalSemigroup& h, int q, Exponent s, const MainTheoremContext& ctx) {
    Verdict v(StatementId::MainTheorem, {{"q", q}, {"s", s}}, h.generators());
    if (!h.is_symmetric() || !ctx.conditions.both()) return v.unmet();

    const SemigroupIdeal q_ideal = SemigroupIdeal::principal(h, s);
    const SemigroupIdeal ideal = colon(q_ideal, ctx.mq);
    const SemigroupIdeal ideal2 = product(ideal, ideal);
    const SemigroupIdeal qi = shift(ideal, s);

    v.require(product(ctx.mq, ideal) == shift(ctx.mq, s), "m^q I != m^q Q");
    v.require(intersect(q_ideal, ideal2) == qi, "Q ∩ I^2 != QI");
    if (s >= h.conductor()) v.require(ideal2 == qi, "s >= c but I^2 != QI");
    if (s >= h.multiplicity() * (q - 1)) {
        v.require(product(ideal2, ideal) == shift(ideal2, s), "s >= a(q-1) but I^3 != QI^2");
        v.require(is_cm(h, s, ideal), "s >= a(q-1) but G(I) is not Cohen-Macaulay");
    }
    return v.finish();
}

VerificationOutcome check_reflection(const NumericalSemigroup& h, Exponent alpha) {
    Verdict v(StatementId::ReflectionLemma, {{"alpha", alpha}}, h.generators());
    if (h.multiplicity() < 3 || alpha < h.multiplicity() - 1) return v.unmet();
    if (!h.reflection_window_is_symmetric(alpha)) return v.unmet();
    v.require(alpha == h.frobenius(), "reflection holds on [0, alpha] but alpha is not the Frobenius number",
              {{"frobenius", h.frobenius()}});
    v.require(h.is_symmetric(), "reflection holds but H is not symmetric");
    return v.finish();
}

VerificationOutcome check_integrality(const NumericalSemigroup& h, int q, Exponent s, const MainTheoremContext& ctx) {
    Verdict v(StatementId::IntegralityLemma, {{"q", q}, {"s", s}}, h.generators());
    if (!ctx.conditions.c1) return v.unmet();
    v.require(h.multiplicity() * q <= h.conductor(), "c1 holds but a*q > c");
    const SemigroupIdeal ideal = colon(SemigroupIdeal::principal(h, s), ctx.mq);
    v.require(ideal.min_generator() >= s, "c1 holds but I is not contained in the integral closure of Q",
              {{"generator", ideal.min_generator()}});
    return v.finish();
}

VerificationOutcome check_gorenstein_q2(const NumericalSemigroup& h, std::optional<Exponent> s) {
    ParameterMap params;
    if (s) params["s"] = *s;
    Verdict v(StatementId::GorensteinQ2, params, h.generators());
    if (!h.is_symmetric() || h.multiplicity() < 3) return v.unmet();
    const ConditionCheck check = condition_check(h, 2);
    ParameterMap witness;
    if (check.c1_witness) witness["n"] = *check.c1_witness;
    v.require(check.c1, "some n >= c has t^n not in m^2", witness);
    if (s) {
        const SemigroupIdeal ideal = quasi_socle(h, *s, 2);
        v.require(ideal.min_generator() >= *s, "(t^s) : m^2 is not integral over (t^s)");
    }
    return v.finish();
}

VerificationOutcome check_gmt(const NumericalSemigroup& h, Exponent s, const SemigroupIdeal& m2) {
    Verdict v(StatementId::GmtCorollary, {{"s", s}}, h.generators());
    if (!h.is_symmetric() || h.multiplicity() < 3) return v.unmet();
    const SemigroupIdeal ideal = colon(SemigroupIdeal::principal(h, s), m2);
    const SemigroupIdeal ideal2 = product(ideal, ideal);
    v.require(product(m2, ideal) == shift(m2, s), "m^2 I != m^2 Q");
    v.require(product(ideal2, ideal) == shift(ideal2, s), "I^3 != QI^2");
    v.require(is_cm(h, s, ideal), "G(I) is not Cohen-Macaulay");
    if (s >= h.conductor()) v.require(ideal2 == shift(ideal, s), "s >= c but I^2 != QI");
    return v.finish();
}

// ---------------------------------------------------------------- H = <a, a+1>

NumericalSemigroup aa1(Exponent a) {
    if (a < 2) throw InvalidParameters("a must be >= 2, got " + std::to_string(a));
    return NumericalSemigroup{a, a + 1};
}

VerificationOutcome check_aa1_membership(Exponent a, Exponent ell) {
    const NumericalSemigroup h = aa1(a);
    Verdict v(StatementId::Aa1Membership, {{"a", a}, {"ell", ell}});
    if (ell < 0) return v.unmet();
    for (Exponent i = 0; i <= ell; ++i)
        v.require(h.contains(a * ell + i), "i <= ell but a*ell + i not in H", {{"i", i}});
    for (Exponent i = 0; i < a; ++i)
        if (h.contains(a * ell + i)) v.require(i <= ell, "a*ell + i in H with i < a but i > ell", {{"i", i}});

    std::vector<Exponent> formula;
    for (Exponent i = 0; i <= ell; ++i) formula.push_back(a * ell + i);
    const SemigroupIdeal m_ell = max_ideal_power(h, static_cast<int>(ell));
    v.require(m_ell == ideal_from_generators(h, formula), "m^ell != (t^(a*ell+i) | 0 <= i <= ell)");
    const SemigroupIdeal tail =
        ell == 0 ? SemigroupIdeal::unit(h) : principal_integral_closure(h, a * ell);
    v.require(m_ell == tail, "m^ell != (t^n | n in H, n >= a*ell)");

    // Dense cross-check: ell-fold sumset of m against both closed forms.
    const auto& gens = h.generators();
    const Exponent window = a * ell + h.conductor() + 2 * a;
    const Exponent zero[] = {0};
    DenseIdeal dense_power = DenseIdeal::closure(gens, zero, window);
    const DenseIdeal dense_m = DenseIdeal::closure(gens, gens, window);
    for (Exponent i = 0; i < ell; ++i) dense_power = dense_product(dense_power, dense_m);
    v.require(dense_power == DenseIdeal::closure(gens, formula, window), "dense m^ell disagrees with the formula");
    std::vector<Exponent> members_from;
    const DenseIdeal dense_h = dense_semigroup(gens, window);
    for (Exponent n = a * ell; n < window; ++n)
        if (dense_h.test(n)) members_from.push_back(n);
    v.require(dense_power == DenseIdeal::closure(gens, members_from, window),
              "dense m^ell disagrees with {n in H : n >= a*ell}");
    return v.finish();
}

VerificationOutcome check_aa1_c1c2(Exponent a, Exponent q) {
    const NumericalSemigroup h = aa1(a);
    Verdict v(StatementId::Aa1C1C2Iff, {{"a", a}, {"q", q}});
    const ConditionCheck check = condition_check(h, as_q(q));
    v.require(check.both() == (q < a), "(c1 and c2) does not match q < a",
              {{"c1", check.c1}, {"c2", check.c2}});
    return v.finish();
}

VerificationOutcome check_aa1_integral(Exponent a, Exponent q, Exponent s, const SemigroupIdeal& mq) {
    const NumericalSemigroup& h = mq.ambient();
    Verdict v(StatementId::Aa1IntegralEquiv, {{"a", a}, {"q", q}, {"s", s}});
    const SemigroupIdeal ideal = colon(SemigroupIdeal::principal(h, s), mq);
    const bool integral = ideal.min_generator() >= s;
    const bool stable = product(mq, ideal) == shift(mq, s);
    v.require(integral == (q < a) && stable == (q < a), "integral, m^q-stable and q < a disagree",
              {{"integral", integral}, {"mq_stable", stable}});
    return v.finish();
}

VerificationOutcome check_aa1_cor(Exponent a, Exponent q, Exponent s, const SemigroupIdeal& mq) {
    const NumericalSemigroup& h = mq.ambient();
    Verdict v(StatementId::Aa1Corollary, {{"a", a}, {"q", q}, {"s", s}});
    if (q >= a) return v.unmet();
    const SemigroupIdeal ideal = colon(SemigroupIdeal::principal(h, s), mq);
    const SemigroupIdeal ideal2 = product(ideal, ideal);
    if (s >= a * q) v.require(ideal2 == shift(ideal, s), "s >= aq but I^2 != QI");
    if (s >= a * (q - 1)) {
        v.require(product(ideal2, ideal) == shift(ideal2, s), "s >= a(q-1) but I^3 != QI^2");
        v.require(is_cm(h, s, ideal), "s >= a(q-1) but G(I) is not Cohen-Macaulay");
    }
    return v.finish();
}

VerificationOutcome check_gen_formula(Exponent a, Exponent q, Exponent s) {
    const NumericalSemigroup h = aa1(a);
    Verdict v(StatementId::GeneratorFormula, {{"a", a}, {"q", q}, {"s", s}});
    if (q >= a || s >= a * q || s <= 0 || !h.contains(s)) return v.unmet();
    const AA1Decomposition d = decompose(a, q, s);
    const SemigroupIdeal ideal = quasi_socle(h, s, static_cast<int>(q));
    v.require(predicted_socle_gens(a, q, s) == ideal, "closed-form generators differ from Q : m^q",
              {{"ell", d.ell}, {"r", d.r}, {"p", d.p}});
    if (d.r == 0) {
        std::vector<Exponent> gens{s};
        const SemigroupIdeal mp = max_ideal_power(h, static_cast<int>(d.p));
        gens.insert(gens.end(), mp.generators().begin(), mp.generators().end());
        v.require(ideal == ideal_from_generators(h, gens), "r = 0 but I != Q + m^p", {{"p", d.p}});
    }
    return v.finish();
}

VerificationOutcome check_red_formula(Exponent a, Exponent ell, Exponent r) {
    Verdict v(StatementId::ReductionFormula, {{"a", a}, {"ell", ell}, {"r", r}});
    const Exponent q = a - 1;
    const Exponent s = a * ell + r;
    if (a < 2 || ell < 1 || (r != 0 && r != ell) || s >= a * q) return v.unmet();
    const NumericalSemigroup h = aa1(a);
    const SemigroupIdeal ideal = quasi_socle(h, s, static_cast<int>(q));
    const auto check = graded_cm_check(h, s, ideal);
    v.require(check.cm.value_or(false), "G(I) is not Cohen-Macaulay");
    if (r == 0) {
        v.require(ideal == max_ideal_power(h, static_cast<int>(ell)), "r = 0 but I != m^ell");
    } else {
        const auto rq = reduction_number(h, s, ideal);
        const int expected = predicted_reduction_number(a, ell);
        v.require(rq && *rq == expected, "r_Q(I) != ceil((a-1)/(ell+1))",
                  {{"reduction_number", rq.value_or(-1)}, {"expected", expected}});
    }
    return v.finish();
}

VerificationOutcome check_red_bound(Exponent a, Exponent ell, Exponent r) {
    Verdict v(StatementId::ReductionBound, {{"a", a}, {"ell", ell}, {"r", r}});
    const Exponent q = a - 1;
    const Exponent s = a * ell + r;
    if (a < 2 || ell < 1 || r < 0 || r >= ell || s >= a * q) return v.unmet();
    const NumericalSemigroup h = aa1(a);
    const SemigroupIdeal ideal = quasi_socle(h, s, static_cast<int>(q));
    const auto rq = reduction_number(h, s, ideal);
    v.require(rq && *rq <= a - ell, "r_Q(I) > a - ell", {{"reduction_number", rq.value_or(-1)}});
    return v.finish();
}

VerificationOutcome check_noncm_a(Exponent a, Exponent ell) {
    Verdict v(StatementId::NonCmA, {{"a", a}, {"ell", ell}});
    if (ell < 2 || a < ell + 3) return v.unmet();
    const NumericalSemigroup h = aa1(a);
    const Exponent q = a - 1;
    const Exponent s = a * ell + (ell - 1);
    const SemigroupIdeal ideal = quasi_socle(h, s, static_cast<int>(q));
    const auto n = static_cast<unsigned>(a - ell);
    const SemigroupIdeal lower = power(ideal, n - 1);
    const SemigroupIdeal upper = product(lower, ideal);
    v.require(!(intersect(SemigroupIdeal::principal(h, s), upper) == shift(lower, s)),
              "Q ∩ I^(a-ell) == Q I^(a-ell-1)");
    const auto check = graded_cm_check(h, s, ideal);
    v.require(check.cm.has_value() && !*check.cm, "G(I) is Cohen-Macaulay");
    const auto rq = reduction_number(h, s, ideal);
    v.require(rq && *rq == a - ell, "r_Q(I) != a - ell", {{"reduction_number", rq.value_or(-1)}});
    return v.finish();
}

VerificationOutcome check_noncm_b(Exponent a, Exponent ell, Exponent r) {
    Verdict v(StatementId::NonCmB, {{"a", a}, {"ell", ell}, {"r", r}});
    const Exponent k = ell - r;
    if (r <= 0 || r >= ell || 2 * ell + 1 < a || a < ell + k + 2) return v.unmet();
    const NumericalSemigroup h = aa1(a);
    const Exponent q = a - 1;
    const Exponent s = a * ell + r;
    const SemigroupIdeal ideal = quasi_socle(h, s, static_cast<int>(q));
    const SemigroupIdeal ideal2 = product(ideal, ideal);
    const SemigroupIdeal ideal3 = product(ideal2, ideal);
    v.require(!(intersect(SemigroupIdeal::principal(h, s), ideal3) == shift(ideal2, s)), "Q ∩ I^3 == QI^2");
    const auto check = graded_cm_check(h, s, ideal);
    v.require(check.cm.has_value() && !*check.cm, "G(I) is Cohen-Macaulay");
    return v.finish();
}

VerificationOutcome check_cm_iff(Exponent a, Exponent r) {
    Verdict v(StatementId::CmIff, {{"a", a}, {"r", r}});
    if (a < 5 || a % 2 == 0) return v.unmet();
    const Exponent ell = (a - 1) / 2;
    if (r < 0 || r > ell) return v.unmet();
    const NumericalSemigroup h = aa1(a);
    const Exponent s = a * ell + r;
    const SemigroupIdeal ideal = quasi_socle(h, s, static_cast<int>(a - 1));
    const bool cm = is_cm(h, s, ideal);
    v.require(cm == (r == 0 || r == ell), "CM verdict does not match r in {0, ell}", {{"cm", cm}, {"ell", ell}});
    return v.finish();
}

// ---------------------------------------------------------------- sweeps

using Sink = std::function<void(VerificationOutcome)>;

std::vector<NumericalSemigroup> h_family(const SweepBounds& bounds) {
    if (!bounds.semigroups.empty()) return bounds.semigroups;
    GorensteinFamilyOptions options;
    options.max_conductor = bounds.family_conductor;
    return gorenstein_family(options);
}

std::vector<NumericalSemigroup> mixed_family(const SweepBounds& bounds, Exponent min_multiplicity) {
    std::vector<NumericalSemigroup> family = h_family(bounds);
    if (bounds.semigroups.empty() && bounds.random_semigroups > 0) {
        auto extra = random_semigroups(bounds.seed, bounds.random_semigroups, std::max<Exponent>(min_multiplicity, 2),
                                       12, bounds.max_conductor);
        family.insert(family.end(), extra.begin(), extra.end());
    }
    std::erase_if(family, [&](const NumericalSemigroup& h) { return h.multiplicity() < min_multiplicity; });
    return family;
}

template <typename F>
void for_members(const NumericalSemigroup& h, Exponent upper, F&& f) {
    for (Exponent s = h.multiplicity(); s <= upper; ++s)
        if (h.contains(s)) f(s);
}

int q_ceiling(const NumericalSemigroup& h, const SweepBounds& bounds) {
    return static_cast<int>(h.conductor() / h.multiplicity() + bounds.q_extra);
}

void sweep_general(StatementId id, const SweepBounds& bounds, const Sink& sink) {
    switch (id) {
        case StatementId::MainTheorem:
        case StatementId::IntegralityLemma: {
            const bool main = id == StatementId::MainTheorem;
            const auto family = main ? h_family(bounds) : mixed_family(bounds, 2);
            for (const auto& h : family) {
                for (int q = 1; q <= q_ceiling(h, bounds); ++q) {
                    const MainTheoremContext ctx = main_context(h, q);
                    const bool met = main ? h.is_symmetric() && ctx.conditions.both() : ctx.conditions.c1;
                    if (!met) {
                        // Hypotheses do not depend on s; one outcome stands for the whole row.
                        Verdict v(id, {{"q", q}}, h.generators());
                        sink(v.unmet());
                        continue;
                    }
                    for_members(h, bounds.s_factor * h.conductor(), [&](Exponent s) {
                        sink(main ? check_main(h, q, s, ctx) : check_integrality(h, q, s, ctx));
                    });
                }
            }
            return;
        }
        case StatementId::ReflectionLemma: {
            for (const auto& h : mixed_family(bounds, 3))
                for (Exponent alpha = h.multiplicity() - 1; alpha <= 3 * h.conductor(); ++alpha)
                    sink(check_reflection(h, alpha));
            return;
        }
        case StatementId::GorensteinQ2: {
            for (const auto& h : h_family(bounds)) sink(check_gorenstein_q2(h, std::nullopt));
            return;
        }
        case StatementId::GmtCorollary: {
            for (const auto& h : h_family(bounds)) {
                if (!h.is_symmetric() || h.multiplicity() < 3) {
                    sink(Verdict(id, {}, h.generators()).unmet());
                    continue;
                }
                const SemigroupIdeal m2 = max_ideal_power(h, 2);
                for_members(h, bounds.s_factor * h.conductor(), [&](Exponent s) { sink(check_gmt(h, s, m2)); });
            }
            return;
        }
        default:
            break;
    }
}

void sweep_aa1(StatementId id, const SweepBounds& bounds, const Sink& sink) {
    for (Exponent a = std::max<Exponent>(bounds.a_min, 2); a <= bounds.a_max; ++a) {
        const NumericalSemigroup h = aa1(a);
        switch (id) {
            case StatementId::Aa1Membership:
                for (Exponent ell = 0; ell <= 2 * a; ++ell) sink(check_aa1_membership(a, ell));
                break;
            case StatementId::Aa1C1C2Iff:
                for (Exponent q = 1; q <= a + bounds.q_extra; ++q) sink(check_aa1_c1c2(a, q));
                break;
            case StatementId::Aa1IntegralEquiv:
            case StatementId::Aa1Corollary: {
                const bool equiv = id == StatementId::Aa1IntegralEquiv;
                const Exponent q_top = equiv ? a + bounds.q_extra : a - 1;
                for (Exponent q = 1; q <= q_top; ++q) {
                    const SemigroupIdeal mq = max_ideal_power(h, static_cast<int>(q));
                    for_members(h, bounds.s_factor * a * a, [&](Exponent s) {
                        sink(equiv ? check_aa1_integral(a, q, s, mq) : check_aa1_cor(a, q, s, mq));
                    });
                }
                break;
            }
            case StatementId::GeneratorFormula:
                for (Exponent q = 1; q < a; ++q)
                    for_members(h, a * q - 1, [&](Exponent s) { sink(check_gen_formula(a, q, s)); });
                break;
            case StatementId::ReductionFormula:
                for (Exponent ell = 1; ell <= a - 2; ++ell) {
                    sink(check_red_formula(a, ell, 0));
                    sink(check_red_formula(a, ell, ell));
                }
                break;
            case StatementId::ReductionBound:
                for (Exponent ell = 1; ell <= a - 1; ++ell)
                    for (Exponent r = 0; r < ell; ++r) sink(check_red_bound(a, ell, r));
                break;
            case StatementId::NonCmA:
                for (Exponent ell = 1; ell <= a - 1; ++ell) sink(check_noncm_a(a, ell));
                break;
            case StatementId::NonCmB:
                for (Exponent ell = 1; ell <= a - 1; ++ell)
                    for (Exponent r = 0; r <= ell; ++r) sink(check_noncm_b(a, ell, r));
                break;
            case StatementId::CmIff:
                for (Exponent r = 0; r <= (a - 1) / 2; ++r) sink(check_cm_iff(a, r));
                break;
            default:
                break;
        }
    }
}

bool is_general(StatementId id) {
    return id == StatementId::MainTheorem || id == StatementId::ReflectionLemma ||
           id == StatementId::IntegralityLemma || id == StatementId::GorensteinQ2 ||
           id == StatementId::GmtCorollary;
}

}  // namespace

std::string_view to_string(StatementId id) noexcept {
    for (const auto& entry : kNames)
        if (entry.id == id) return entry.name;
    return "?";
}

StatementId parse_statement_id(std::string_view name) {
    for (const auto& entry : kNames)
        if (entry.name == name) return entry.id;
    throw UnknownStatement(std::string(name));
}

VerificationOutcome check_statement(StatementId id, const StatementParams& params) {
    const auto& values = params.values;
    auto optional_value = [&](const std::string& key) -> std::optional<Exponent> {
        auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        return it->second;
    };
    auto member = [&](const NumericalSemigroup& h, Exponent s) {
        if (s <= 0 || !h.contains(s)) throw InvalidParameters("s = " + std::to_string(s) + " is not a positive member");
        return s;
    };

    switch (id) {
        case StatementId::MainTheorem: {
            const auto& h = need_semigroup(params);
            const int q = as_q(need(values, "q"));
            return check_main(h, q, member(h, need(values, "s")), main_context(h, q));
        }
        case StatementId::ReflectionLemma:
            return check_reflection(need_semigroup(params), need(values, "alpha"));
        case StatementId::IntegralityLemma: {
            const auto& h = need_semigroup(params);
            const int q = as_q(need(values, "q"));
            return check_integrality(h, q, member(h, need(values, "s")), main_context(h, q));
        }
        case StatementId::GorensteinQ2: {
            const auto& h = need_semigroup(params);
            auto s = optional_value("s");
            if (s) member(h, *s);
            return check_gorenstein_q2(h, s);
        }
        case StatementId::GmtCorollary: {
            const auto& h = need_semigroup(params);
            return check_gmt(h, member(h, need(values, "s")), max_ideal_power(h, 2));
        }
        case StatementId::Aa1Membership:
            return check_aa1_membership(need(values, "a"), need(values, "ell"));
        case StatementId::Aa1C1C2Iff:
            return check_aa1_c1c2(need(values, "a"), need(values, "q"));
        case StatementId::Aa1IntegralEquiv:
        case StatementId::Aa1Corollary: {
            const Exponent a = need(values, "a");
            const NumericalSemigroup h = aa1(a);
            const Exponent q = as_q(need(values, "q"));
            const Exponent s = member(h, need(values, "s"));
            const SemigroupIdeal mq = max_ideal_power(h, static_cast<int>(q));
            return id == StatementId::Aa1IntegralEquiv ? check_aa1_integral(a, q, s, mq) : check_aa1_cor(a, q, s, mq);
        }
        case StatementId::GeneratorFormula:
            return check_gen_formula(need(values, "a"), as_q(need(values, "q")), need(values, "s"));
        case StatementId::ReductionFormula: {
            const Exponent ell = need(values, "ell");
            return check_red_formula(need(values, "a"), ell, optional_value("r").value_or(ell));
        }
        case StatementId::ReductionBound:
            return check_red_bound(need(values, "a"), need(values, "ell"), need(values, "r"));
        case StatementId::NonCmA:
            return check_noncm_a(need(values, "a"), need(values, "ell"));
        case StatementId::NonCmB:
            return check_noncm_b(need(values, "a"), need(values, "ell"), need(values, "r"));
        case StatementId::CmIff:
            return check_cm_iff(need(values, "a"), need(values, "r"));
    }
    throw UnknownStatement(std::to_string(static_cast<int>(id)));
}

SweepSummary summarize(const std::vector<VerificationOutcome>& outcomes) {
    SweepSummary summary;
    for (const auto& o : outcomes) {
        if (!o.hypotheses_met) ++summary.hypotheses_unmet;
        else if (o.conclusion_holds.value_or(false)) ++summary.holds;
        else ++summary.fails;
    }
    return summary;
}

SweepSummary sweep_into(StatementId id, const SweepBounds& bounds,
                        const std::function<void(const VerificationOutcome&)>& visit) {
    SweepSummary summary;
    const Sink sink = [&](VerificationOutcome o) {
        if (!o.hypotheses_met) ++summary.hypotheses_unmet;
        else if (o.conclusion_holds.value_or(false)) ++summary.holds;
        else ++summary.fails;
        visit(o);
    };
    if (is_general(id)) sweep_general(id, bounds, sink);
    else sweep_aa1(id, bounds, sink);
    return summary;
}

SweepResult sweep(StatementId id, const SweepBounds& bounds) {
    SweepResult result{id, {}, {}};
    result.summary = sweep_into(id, bounds, [&](const VerificationOutcome& o) { result.outcomes.push_back(o); });
    return result;
}

}  // namespace qsocle
