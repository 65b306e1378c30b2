#pragma once

#include <cstdint>
#include <vector>

#include "qsocle/semigroup.hpp"

namespace qsocle {

/// <10,13,16,17,19> and <7,10,18,22>, the two worked examples.
std::vector<NumericalSemigroup> example_semigroups();

/// Every symmetric numerical semigroup with conductor <= max_conductor,
/// found by walking the semigroup tree (remove a minimal generator above
/// the Frobenius number). Practical up to max_conductor of about 30.
std::vector<NumericalSemigroup> all_symmetric_semigroups(Exponent max_conductor);

/// Symmetric semigroups with conductor <= max_conductor from three sources:
///   - two-generated <a,b> with gcd 1,
///   - the full tree enumeration up to conductor `exhaustive_conductor`,
///   - three-generated gluings <d*a, d*b, e> that are symmetric,
/// plus the two worked examples regardless of conductor. Sorted by
/// (conductor, generators) and deduplicated.
struct GorensteinFamilyOptions {
    Exponent max_conductor = 150;
    Exponent exhaustive_conductor = 24;
    Exponent max_two_generated_multiplicity = 12;
    Exponent max_glue_factor = 4;
};
std::vector<NumericalSemigroup> gorenstein_family(const GorensteinFamilyOptions& options = {});

/// `count` pseudo-random semigroups (fixed by `seed`) with multiplicity in
/// [min_multiplicity, max_multiplicity] and conductor <= max_conductor.
std::vector<NumericalSemigroup> random_semigroups(std::uint64_t seed, std::size_t count,
                                                  Exponent min_multiplicity, Exponent max_multiplicity,
                                                  Exponent max_conductor);

}  // namespace qsocle
