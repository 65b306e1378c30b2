#include "qsocle/quasisocle.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "qsocle/error.hpp"

namespace qsocle {

namespace {

void require_positive_member(const NumericalSemigroup& h, Exponent s) {
    if (s <= 0 || !h.contains(s)) throw NotInSemigroup(s);
}

void require_q(int q, int minimum) {
    if (q < minimum)
        throw InvalidParameters("q must be >= " + std::to_string(minimum) + ", got " + std::to_string(q));
}

bool integral_over_principal(const SemigroupIdeal& ideal, Exponent s) {
    return ideal.min_generator() >= s;
}

// First exponent at which every larger integer lies in m^j (j >= 1): peel
// off j-1 copies of the multiplicity from a positive member >= c.
Exponent power_tail_start(const NumericalSemigroup& h, int j) {
    return static_cast<Exponent>(j - 1) * h.multiplicity() + std::max<Exponent>(h.conductor(), 1);
}

struct PowerChain {
    std::optional<int> reduction;
    std::vector<SemigroupIdeal> powers;  // I^0 .. I^(r+1) when r is finite
};

PowerChain build_power_chain(const NumericalSemigroup& h, Exponent s, const SemigroupIdeal& ideal) {
    if (!(ideal.ambient() == h)) throw AmbientMismatch();
    if (!ideal.contains(s)) throw NotContainingQ(s);

    PowerChain chain;
    chain.powers.push_back(SemigroupIdeal::unit(h));
    if (!integral_over_principal(ideal, s)) return chain;

    const Exponent cap =
        length_quotient(principal_integral_closure(h, s), SemigroupIdeal::principal(h, s)) + 2;
    for (int n = 0; n <= cap; ++n) {
        chain.powers.push_back(product(chain.powers.back(), ideal));
        const SemigroupIdeal& next = chain.powers.back();
        if (next == shift(chain.powers[static_cast<std::size_t>(n)], s)) {
            chain.reduction = n;
            return chain;
        }
    }
    throw InvariantViolation("reduction number search for s=" + std::to_string(s) + " in " +
                             h.to_string() + " exceeded the cap " + std::to_string(cap));
}

GradedCmCheck vv_from_chain(const NumericalSemigroup& h, Exponent s, const PowerChain& chain) {
    GradedCmCheck out;
    if (!chain.reduction) return out;
    const SemigroupIdeal q_ideal = SemigroupIdeal::principal(h, s);
    const auto r = static_cast<std::size_t>(*chain.reduction);
    for (std::size_t n = 1; n <= r; ++n)
        out.vv_table.push_back(intersect(q_ideal, chain.powers[n + 1]) == shift(chain.powers[n], s));
    out.cm = std::all_of(out.vv_table.begin(), out.vv_table.end(), [](bool b) { return b; });
    return out;
}

}  // namespace

SemigroupIdeal max_ideal_power(const NumericalSemigroup& h, int q) {
    require_q(q, 0);
    return power(SemigroupIdeal::maximal(h), static_cast<unsigned>(q));
}

SemigroupIdeal quasi_socle(const NumericalSemigroup& h, Exponent s, int q) {
    require_positive_member(h, s);
    require_q(q, 1);
    return colon(SemigroupIdeal::principal(h, s), max_ideal_power(h, q));
}

ConditionCheck condition_check(const NumericalSemigroup& h, int q) {
    require_q(q, 1);
    const Exponent a = h.multiplicity();
    const Exponent c = h.conductor();
    ConditionCheck out;

    const SemigroupIdeal mq = max_ideal_power(h, q);
    const Exponent c1_end = power_tail_start(h, q);
    for (Exponent n = c; n < c1_end; ++n) {
        if (!mq.contains(n)) {
            out.c1 = false;
            out.c1_witness = n;
            break;
        }
    }
#ifndef NDEBUG
    for (Exponent n = c1_end; n < c1_end + a; ++n) assert(mq.contains(n));
#endif

    if (q >= 2) {
        const SemigroupIdeal mq1 = max_ideal_power(h, q - 1);
        const Exponent c2_end = power_tail_start(h, q - 1);
        for (Exponent n = a * (q - 1); n < c2_end; ++n) {
            if (h.contains(n) && !mq1.contains(n)) {
                out.c2 = false;
                out.c2_witness = n;
                break;
            }
        }
#ifndef NDEBUG
        for (Exponent n = c2_end; n < c2_end + a; ++n) assert(mq1.contains(n));
#endif
    }
    return out;
}

std::optional<int> reduction_number(const NumericalSemigroup& h, Exponent s, const SemigroupIdeal& ideal) {
    return build_power_chain(h, s, ideal).reduction;
}

GradedCmCheck graded_cm_check(const NumericalSemigroup& h, Exponent s, const SemigroupIdeal& ideal) {
    return vv_from_chain(h, s, build_power_chain(h, s, ideal));
}

bool mq_stability(const NumericalSemigroup& h, Exponent s, int q) {
    const SemigroupIdeal ideal = quasi_socle(h, s, q);
    const SemigroupIdeal mq = max_ideal_power(h, q);
    return product(mq, ideal) == shift(mq, s);
}

QuasiSocleReport analyze(const NumericalSemigroup& h, Exponent s, int q) {
    const SemigroupIdeal mq = [&] {
        require_positive_member(h, s);
        require_q(q, 1);
        return max_ideal_power(h, q);
    }();
    SemigroupIdeal ideal = colon(SemigroupIdeal::principal(h, s), mq);

    const PowerChain chain = build_power_chain(h, s, ideal);
    GradedCmCheck vv = vv_from_chain(h, s, chain);

    std::vector<Exponent> lengths;
    if (chain.reduction) {
        for (std::size_t n = 0; n < static_cast<std::size_t>(*chain.reduction); ++n)
            lengths.push_back(length_quotient(chain.powers[n + 1], shift(chain.powers[n], s)));
    }

    const bool integral = integral_over_principal(ideal, s);
    const bool stable = product(mq, ideal) == shift(mq, s);
    assert(!stable || integral);

    return QuasiSocleReport{
        .semigroup = h,
        .s = s,
        .q = q,
        .socle_ideal = std::move(ideal),
        .integral_over_q = integral,
        .mq_stable = stable,
        .reduction_number = chain.reduction,
        .cm = vv.cm,
        .vv_table = std::move(vv.vv_table),
        .lengths = std::move(lengths),
    };
}

AA1Decomposition decompose(Exponent a, Exponent q, Exponent s) {
    if (a < 2) throw InvalidParameters("decompose needs a >= 2, got " + std::to_string(a));
    if (q < 1) throw InvalidParameters("decompose needs q >= 1, got " + std::to_string(q));
    const NumericalSemigroup h{a, a + 1};
    require_positive_member(h, s);
    AA1Decomposition d;
    d.a = a;
    d.q = q;
    d.s = s;
    d.ell = s / a;
    d.r = s % a;
    d.p = (a - 1) + (d.ell - q);
    d.k = d.ell - d.r;
    return d;
}

SemigroupIdeal predicted_socle_gens(Exponent a, Exponent q, Exponent s) {
    const AA1Decomposition d = decompose(a, q, s);
    if (q >= a) throw HypothesisNotMet("closed-form generators need q < a");
    if (s >= a * q) throw HypothesisNotMet("closed-form generators need s < a*q");

    const NumericalSemigroup h{a, a + 1};
    std::vector<Exponent> gens{s};
    // m^(p+1) = (t^(a(p+1)+i) | 0 <= i <= p+1)
    for (Exponent i = 0; i <= d.p + 1; ++i) gens.push_back(a * (d.p + 1) + i);
    for (Exponent i = d.p - d.ell + d.r + 1; i <= d.p; ++i) gens.push_back(a * d.p + i);
    return ideal_from_generators(h, gens);
}

int predicted_reduction_number(Exponent a, Exponent ell) {
    if (ell < 1 || ell >= a - 1)
        throw HypothesisNotMet("reduction formula needs 1 <= ell < a-1, got ell=" + std::to_string(ell) +
                               ", a=" + std::to_string(a));
    return static_cast<int>((a - 1 + ell) / (ell + 1));
}

}  // namespace qsocle
