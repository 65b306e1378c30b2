#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qsocle/ideal.hpp"
#include "qsocle/semigroup.hpp"

namespace qsocle {

/// Exponent set of a monomial ideal as a bit table over [0, bound).
///
/// Built only from the raw semigroup generators by forward sieving; it never
/// consults NumericalSemigroup's tables or SemigroupIdeal's minimalization,
/// so it serves as an independent oracle for the generator-based arithmetic.
class DenseIdeal {
public:
    /// Closure of `seeds` under adding the semigroup generators, on [0, bound).
    static DenseIdeal closure(std::span<const Exponent> semigroup_generators,
                              std::span<const Exponent> seeds, Exponent bound);

    Exponent bound() const noexcept { return static_cast<Exponent>(bits_.size()); }
    bool test(Exponent n) const noexcept {
        return n >= 0 && n < bound() && bits_[static_cast<std::size_t>(n)] != 0;
    }
    /// Start of the trailing run of members inside the window.
    Exponent tail_all_ones_from() const noexcept;
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    /// Restriction to [0, new_bound), new_bound <= bound().
    DenseIdeal truncated(Exponent new_bound) const;

    friend bool operator==(const DenseIdeal&, const DenseIdeal&) = default;

private:
    explicit DenseIdeal(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
    friend DenseIdeal dense_product(const DenseIdeal&, const DenseIdeal&);
    friend DenseIdeal dense_intersection(const DenseIdeal&, const DenseIdeal&);
    friend DenseIdeal dense_colon(const DenseIdeal&, const DenseIdeal&, const DenseIdeal&, Exponent,
                                  Exponent);

    std::vector<std::uint8_t> bits_;
};

/// Dense semigroup membership on [0, bound) by sieving the generators.
DenseIdeal dense_semigroup(std::span<const Exponent> generators, Exponent bound);

/// Conductor read off a dense semigroup sieve: one past the last gap. The
/// sieve must extend at least one multiplicity past the Frobenius number.
Exponent dense_conductor(std::span<const Exponent> generators, Exponent sieve_bound);

/// Sumset restricted to [0, min(bound)).
DenseIdeal dense_product(const DenseIdeal& lhs, const DenseIdeal& rhs);
/// Pointwise AND on the common window.
DenseIdeal dense_intersection(const DenseIdeal& lhs, const DenseIdeal& rhs);
/// {n in H : n + m in lhs for all m in rhs with m < rhs_window}, on [0, out_bound).
/// `lhs` must cover [0, out_bound + rhs_window).
DenseIdeal dense_colon(const DenseIdeal& semigroup, const DenseIdeal& lhs, const DenseIdeal& rhs,
                       Exponent rhs_window, Exponent out_bound);

enum class OracleOp { Product, Colon, Intersection, Equality };

std::string_view to_string(OracleOp op) noexcept;
/// Throws ParseError on an unknown name.
OracleOp parse_oracle_op(std::string_view name);

/// Smallest admissible oracle bound: max over operands of
/// (min generator + conductor) + multiplicity + 1.
Exponent oracle_bound(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs);

/// Recomputes `op` densely and compares with the generator-based result.
/// Throws InsufficientBound if bound < max(min generator + c + a) over the operands.
bool oracle_compare(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs, OracleOp op, Exponent bound);

struct OracleDisagreement {
    std::vector<Exponent> semigroup;
    std::vector<Exponent> lhs;
    std::vector<Exponent> rhs;
    OracleOp op;
};

struct OracleCampaignResult {
    std::size_t cases = 0;
    std::array<std::size_t, 4> per_op{};  // indexed by OracleOp
    std::vector<OracleDisagreement> disagreements;
};

/// `cases` pseudo-random (H, I, J, op) comparisons, fixed by `seed`, with
/// conductor(H) <= max_conductor. Operations rotate through all four tags;
/// half of the equality cases compare an ideal with a redundant
/// presentation of itself.
OracleCampaignResult run_oracle_campaign(std::uint64_t seed, std::size_t cases, Exponent max_conductor);

}  // namespace qsocle
