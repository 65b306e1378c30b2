#include "qsocle/ideal.hpp"

#include <algorithm>
#include <cassert>

#include "qsocle/error.hpp"

namespace qsocle {

namespace {

void require_same_ambient(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs) {
    if (!(lhs.ambient() == rhs.ambient())) throw AmbientMismatch();
}

std::vector<Exponent> minimal_subset(const NumericalSemigroup& h, std::vector<Exponent> exps) {
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<Exponent> kept;
    for (Exponent e : exps) {
        // A redundant candidate is always covered by an earlier kept generator.
        const bool redundant =
            std::any_of(kept.begin(), kept.end(), [&](Exponent g) { return h.contains(e - g); });
        if (!redundant) kept.push_back(e);
    }
    return kept;
}

}  // namespace

SemigroupIdeal::SemigroupIdeal(Minimal, NumericalSemigroup ambient, std::vector<Exponent> minimal)
    : ambient_(std::move(ambient)), generators_(std::move(minimal)) {
    if (generators_.empty()) throw ZeroIdealUnsupported();
}

SemigroupIdeal::SemigroupIdeal(NumericalSemigroup ambient, std::span<const Exponent> exponents)
    : ambient_(std::move(ambient)) {
    if (exponents.empty()) throw ZeroIdealUnsupported();
    for (Exponent e : exponents)
        if (!ambient_.contains(e)) throw NotInSemigroup(e);
    generators_ = minimal_subset(ambient_, {exponents.begin(), exponents.end()});
}

SemigroupIdeal::SemigroupIdeal(NumericalSemigroup ambient, std::initializer_list<Exponent> exponents)
    : SemigroupIdeal(std::move(ambient), std::span<const Exponent>(exponents.begin(), exponents.size())) {}

SemigroupIdeal SemigroupIdeal::unit(NumericalSemigroup ambient) {
    return SemigroupIdeal(Minimal{}, std::move(ambient), {0});
}

SemigroupIdeal SemigroupIdeal::principal(NumericalSemigroup ambient, Exponent s) {
    if (!ambient.contains(s)) throw NotInSemigroup(s);
    return SemigroupIdeal(Minimal{}, std::move(ambient), {s});
}

SemigroupIdeal SemigroupIdeal::maximal(NumericalSemigroup ambient) {
    auto gens = ambient.generators();
    return SemigroupIdeal(Minimal{}, std::move(ambient), std::move(gens));
}

bool SemigroupIdeal::contains(Exponent n) const noexcept {
    for (Exponent g : generators_) {
        if (g > n) break;
        if (ambient_.contains(n - g)) return true;
    }
    return false;
}

bool SemigroupIdeal::contains(const SemigroupIdeal& other) const {
    require_same_ambient(*this, other);
    return std::all_of(other.generators_.begin(), other.generators_.end(),
                       [&](Exponent g) { return contains(g); });
}

std::string SemigroupIdeal::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(generators_[i]);
    }
    out += ')';
    return out;
}

bool operator==(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs) {
    return lhs.ambient_ == rhs.ambient_ && lhs.generators_ == rhs.generators_;
}

SemigroupIdeal minimalize(const NumericalSemigroup& ambient, std::vector<Exponent> exponents) {
    if (exponents.empty()) throw ZeroIdealUnsupported();
    assert(std::all_of(exponents.begin(), exponents.end(),
                       [&](Exponent e) { return ambient.contains(e); }));
    return SemigroupIdeal(SemigroupIdeal::Minimal{}, ambient,
                          minimal_subset(ambient, std::move(exponents)));
}

SemigroupIdeal ideal_from_generators(const NumericalSemigroup& ambient,
                                     std::span<const Exponent> exponents) {
    return SemigroupIdeal(ambient, exponents);
}

SemigroupIdeal product(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs) {
    require_same_ambient(lhs, rhs);
    std::vector<Exponent> sums;
    sums.reserve(lhs.generators().size() * rhs.generators().size());
    for (Exponent x : lhs.generators())
        for (Exponent y : rhs.generators()) sums.push_back(x + y);
    return minimalize(lhs.ambient(), std::move(sums));
}

SemigroupIdeal power(const SemigroupIdeal& ideal, unsigned exponent) {
    SemigroupIdeal result = SemigroupIdeal::unit(ideal.ambient());
    for (unsigned i = 0; i < exponent; ++i) result = product(result, ideal);
    return result;
}

SemigroupIdeal shift(const SemigroupIdeal& ideal, Exponent s) {
    if (!ideal.ambient().contains(s)) throw NotInSemigroup(s);
    std::vector<Exponent> gens = ideal.generators();
    for (Exponent& g : gens) g += s;
    return minimalize(ideal.ambient(), std::move(gens));
}

SemigroupIdeal colon(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs) {
    require_same_ambient(lhs, rhs);
    const NumericalSemigroup& h = lhs.ambient();
    // Everything >= min(lhs) + c is in the colon, and members past one more
    // multiplicity are non-minimal, so the scan below is complete.
    const Exponent window = lhs.tail_start() + h.multiplicity();
    auto in_colon = [&](Exponent n) {
        return std::all_of(rhs.generators().begin(), rhs.generators().end(),
                           [&](Exponent g) { return lhs.contains(n + g); });
    };
    std::vector<Exponent> members;
    for (Exponent n = 0; n < window; ++n)
        if (h.contains(n) && in_colon(n)) members.push_back(n);
#ifndef NDEBUG
    for (Exponent n = lhs.tail_start(); n < window + h.multiplicity(); ++n) assert(in_colon(n));
#endif
    return minimalize(h, std::move(members));
}

SemigroupIdeal intersect(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs) {
    require_same_ambient(lhs, rhs);
    const NumericalSemigroup& h = lhs.ambient();
    const Exponent tail = std::max(lhs.tail_start(), rhs.tail_start());
    const Exponent window = tail + h.multiplicity();
    std::vector<Exponent> members;
    for (Exponent n = 0; n < window; ++n)
        if (lhs.contains(n) && rhs.contains(n)) members.push_back(n);
#ifndef NDEBUG
    for (Exponent n = tail; n < window; ++n) assert(lhs.contains(n) && rhs.contains(n));
#endif
    return minimalize(h, std::move(members));
}

bool equals(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs) {
    require_same_ambient(lhs, rhs);
    return lhs.generators() == rhs.generators();
}

Exponent length_quotient(const SemigroupIdeal& larger, const SemigroupIdeal& smaller) {
    if (!larger.contains(smaller)) throw NotASubideal();
    Exponent count = 0;
    for (Exponent n = larger.min_generator(); n < smaller.tail_start(); ++n)
        if (larger.contains(n) && !smaller.contains(n)) ++count;
    return count;
}

SemigroupIdeal principal_integral_closure(const NumericalSemigroup& ambient, Exponent s) {
    if (s <= 0 || !ambient.contains(s)) throw NotInSemigroup(s);
    std::vector<Exponent> members;
    const Exponent window = s + ambient.conductor() + ambient.multiplicity();
    for (Exponent n = s; n < window; ++n)
        if (ambient.contains(n)) members.push_back(n);
    return minimalize(ambient, std::move(members));
}

}  // namespace qsocle
