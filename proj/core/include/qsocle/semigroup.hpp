#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsocle {

using Exponent = std::int64_t;

struct SemigroupInvariants {
    Exponent frobenius = -1;
    Exponent conductor = 0;
    Exponent multiplicity = 1;
    std::vector<Exponent> gaps;
    std::size_t genus = 0;
    bool symmetric = true;
};

/// A numerical semigroup H = <a_1, ..., a_k> with gcd 1.
///
/// Construction minimalizes the generator list and precomputes the Apery set
/// with respect to the multiplicity, the Frobenius number and a membership
/// table on [0, conductor). Instances are immutable and share their tables,
/// so copies are cheap and safe to hand across threads.
class NumericalSemigroup {
public:
    /// Throws EmptyGenerators, InvalidGenerator (entry < 1) or NotCofinite (gcd != 1).
    explicit NumericalSemigroup(std::span<const Exponent> generators);
    NumericalSemigroup(std::initializer_list<Exponent> generators);

    /// Minimal generators in ascending order.
    const std::vector<Exponent>& generators() const noexcept;
    Exponent multiplicity() const noexcept;
    Exponent frobenius() const noexcept;
    Exponent conductor() const noexcept;

    bool contains(Exponent n) const noexcept;

    /// Entry i is the least element of H congruent to i mod m.
    /// Throws InvalidAperyBase unless 0 < m and m is in H.
    std::vector<Exponent> apery_set(Exponent m) const;

    SemigroupInvariants invariants() const;
    bool is_symmetric() const noexcept;

    /// Tests n in H <=> alpha - n not in H for every n in [0, alpha].
    /// Requires multiplicity >= 3 and alpha >= multiplicity - 1, otherwise
    /// throws HypothesisNotMet.
    bool reflection_window_is_symmetric(Exponent alpha) const;

    /// Canonical text form "<g1,g2,...>".
    std::string to_string() const;
    /// Accepts "<g1,g2,...>" or a bare comma separated list. Throws ParseError.
    static NumericalSemigroup parse(std::string_view text);

    friend bool operator==(const NumericalSemigroup& lhs, const NumericalSemigroup& rhs) noexcept;

private:
    struct Tables;
    std::shared_ptr<const Tables> tables_;
};

Exponent gcd_of(std::span<const Exponent> values) noexcept;

}  // namespace qsocle
