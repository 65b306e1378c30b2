#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsocle/semigroup.hpp"

namespace qsocle {

/// A nonzero monomial ideal of k[[H]], stored as its minimal exponent
/// generators. The exponent set is the union of g + H over generators g.
class SemigroupIdeal {
public:
    /// Minimalizes `exponents`. Throws ZeroIdealUnsupported on an empty list
    /// and NotInSemigroup for an exponent outside H.
    SemigroupIdeal(NumericalSemigroup ambient, std::span<const Exponent> exponents);
    SemigroupIdeal(NumericalSemigroup ambient, std::initializer_list<Exponent> exponents);

    static SemigroupIdeal unit(NumericalSemigroup ambient);
    static SemigroupIdeal principal(NumericalSemigroup ambient, Exponent s);
    static SemigroupIdeal maximal(NumericalSemigroup ambient);

    const NumericalSemigroup& ambient() const noexcept { return ambient_; }
    const std::vector<Exponent>& generators() const noexcept { return generators_; }
    Exponent min_generator() const noexcept { return generators_.front(); }

    bool is_unit() const noexcept { return generators_.front() == 0; }
    bool is_principal() const noexcept { return generators_.size() == 1; }

    /// n - g in H for some generator g.
    bool contains(Exponent n) const noexcept;
    /// other is a subideal of *this.
    bool contains(const SemigroupIdeal& other) const;

    /// Every n >= tail_start() is in the ideal.
    Exponent tail_start() const noexcept { return min_generator() + ambient_.conductor(); }

    /// Tuple notation "(g1,g2,...)".
    std::string to_string() const;

    friend bool operator==(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs);

private:
    struct Minimal {};
    SemigroupIdeal(Minimal, NumericalSemigroup ambient, std::vector<Exponent> minimal);

    friend SemigroupIdeal minimalize(const NumericalSemigroup&, std::vector<Exponent>);

    NumericalSemigroup ambient_;
    std::vector<Exponent> generators_;
};

/// Builds an ideal from exponents known to be in H, skipping membership checks.
SemigroupIdeal minimalize(const NumericalSemigroup& ambient, std::vector<Exponent> exponents);

SemigroupIdeal ideal_from_generators(const NumericalSemigroup& ambient,
                                     std::span<const Exponent> exponents);

SemigroupIdeal product(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs);
SemigroupIdeal power(const SemigroupIdeal& ideal, unsigned exponent);
/// Principal shift: (t^s) * ideal.
SemigroupIdeal shift(const SemigroupIdeal& ideal, Exponent s);

/// {x in A : x * rhs is contained in lhs}.
SemigroupIdeal colon(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs);
SemigroupIdeal intersect(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs);
/// Throws AmbientMismatch when the ideals live in different rings.
bool equals(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs);

/// Length of larger/smaller, i.e. the number of exponents in `larger` that
/// are not in `smaller`. Throws NotASubideal unless smaller is contained in larger.
Exponent length_quotient(const SemigroupIdeal& larger, const SemigroupIdeal& smaller);

/// Integral closure of (t^s): all t^n with n in H and n >= s.
SemigroupIdeal principal_integral_closure(const NumericalSemigroup& ambient, Exponent s);

}  // namespace qsocle
