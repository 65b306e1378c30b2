#include "qsocle/dense.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "qsocle/error.hpp"
#include "qsocle/families.hpp"

namespace qsocle {

namespace {

std::vector<std::uint8_t> sieve(std::span<const Exponent> generators, std::span<const Exponent> seeds,
                                Exponent bound) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(std::max<Exponent>(bound, 0)), 0);
    for (Exponent s : seeds)
        if (s >= 0 && s < bound) bits[static_cast<std::size_t>(s)] = 1;
    for (Exponent n = 0; n < bound; ++n) {
        if (!bits[static_cast<std::size_t>(n)]) continue;
        for (Exponent g : generators)
            if (n + g < bound) bits[static_cast<std::size_t>(n + g)] = 1;
    }
    return bits;
}

}  // namespace

DenseIdeal DenseIdeal::closure(std::span<const Exponent> semigroup_generators,
                               std::span<const Exponent> seeds, Exponent bound) {
    return DenseIdeal(sieve(semigroup_generators, seeds, bound));
}

Exponent DenseIdeal::tail_all_ones_from() const noexcept {
    Exponent n = bound();
    while (n > 0 && bits_[static_cast<std::size_t>(n - 1)]) --n;
    return n;
}

DenseIdeal DenseIdeal::truncated(Exponent new_bound) const {
    new_bound = std::clamp<Exponent>(new_bound, 0, bound());
    return DenseIdeal(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + new_bound));
}

DenseIdeal dense_semigroup(std::span<const Exponent> generators, Exponent bound) {
    const Exponent zero[] = {0};
    return DenseIdeal::closure(generators, zero, bound);
}

Exponent dense_conductor(std::span<const Exponent> generators, Exponent sieve_bound) {
    const DenseIdeal h = dense_semigroup(generators, sieve_bound);
    const Exponent tail = h.tail_all_ones_from();
    const Exponent smallest = *std::min_element(generators.begin(), generators.end());
    if (sieve_bound - tail < smallest)
        throw InsufficientBound(sieve_bound, tail + smallest);
    return tail;
}

DenseIdeal dense_product(const DenseIdeal& lhs, const DenseIdeal& rhs) {
    const Exponent bound = std::min(lhs.bound(), rhs.bound());
    std::vector<std::uint8_t> out(static_cast<std::size_t>(bound), 0);
    for (Exponent x = 0; x < bound; ++x) {
        if (!lhs.test(x)) continue;
        for (Exponent y = 0; x + y < bound; ++y)
            if (rhs.test(y)) out[static_cast<std::size_t>(x + y)] = 1;
    }
    return DenseIdeal(std::move(out));
}

DenseIdeal dense_intersection(const DenseIdeal& lhs, const DenseIdeal& rhs) {
    const Exponent bound = std::min(lhs.bound(), rhs.bound());
    std::vector<std::uint8_t> out(static_cast<std::size_t>(bound), 0);
    for (Exponent n = 0; n < bound; ++n) out[static_cast<std::size_t>(n)] = lhs.test(n) && rhs.test(n);
    return DenseIdeal(std::move(out));
}

DenseIdeal dense_colon(const DenseIdeal& semigroup, const DenseIdeal& lhs, const DenseIdeal& rhs,
                       Exponent rhs_window, Exponent out_bound) {
    if (lhs.bound() < out_bound + rhs_window) throw InsufficientBound(lhs.bound(), out_bound + rhs_window);
    std::vector<Exponent> rhs_members;
    for (Exponent m = 0; m < rhs_window; ++m)
        if (rhs.test(m)) rhs_members.push_back(m);
    std::vector<std::uint8_t> out(static_cast<std::size_t>(out_bound), 0);
    for (Exponent n = 0; n < out_bound; ++n) {
        if (!semigroup.test(n)) continue;
        out[static_cast<std::size_t>(n)] = std::all_of(rhs_members.begin(), rhs_members.end(),
                                                       [&](Exponent m) { return lhs.test(n + m); });
    }
    return DenseIdeal(std::move(out));
}

std::string_view to_string(OracleOp op) noexcept {
    switch (op) {
        case OracleOp::Product: return "product";
        case OracleOp::Colon: return "colon";
        case OracleOp::Intersection: return "intersection";
        case OracleOp::Equality: return "equality";
    }
    return "?";
}

OracleOp parse_oracle_op(std::string_view name) {
    for (OracleOp op : {OracleOp::Product, OracleOp::Colon, OracleOp::Intersection, OracleOp::Equality})
        if (to_string(op) == name) return op;
    throw ParseError("unknown oracle operation '" + std::string(name) + "'");
}

Exponent oracle_bound(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs) {
    const NumericalSemigroup& h = lhs.ambient();
    return std::max(lhs.tail_start(), rhs.tail_start()) + h.multiplicity() + 1;
}

bool oracle_compare(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs, OracleOp op, Exponent bound) {
    if (!(lhs.ambient() == rhs.ambient())) throw AmbientMismatch();
    const NumericalSemigroup& h = lhs.ambient();
    const Exponent required = std::max(lhs.tail_start(), rhs.tail_start()) + h.multiplicity();
    if (bound < required) throw InsufficientBound(bound, required);

    const auto& sg = h.generators();
    // Products start their tail at min(lhs) + min(rhs) + c, which can exceed
    // `bound`; comparing on twice the bound covers every operation's result.
    const Exponent window = 2 * bound;
    const Exponent a = h.multiplicity();
    const Exponent c = dense_conductor(sg, window + a);

    auto dense_of = [&](const SemigroupIdeal& ideal, Exponent b) {
        return DenseIdeal::closure(sg, ideal.generators(), b);
    };

    switch (op) {
        case OracleOp::Product: {
            const DenseIdeal expected = dense_product(dense_of(lhs, window), dense_of(rhs, window));
            return expected == dense_of(product(lhs, rhs), window);
        }
        case OracleOp::Intersection: {
            const DenseIdeal expected = dense_intersection(dense_of(lhs, window), dense_of(rhs, window));
            return expected == dense_of(intersect(lhs, rhs), window);
        }
        case OracleOp::Colon: {
            const Exponent rhs_window = rhs.min_generator() + c + a;
            const DenseIdeal expected = dense_colon(dense_semigroup(sg, window), dense_of(lhs, window + rhs_window),
                                                    dense_of(rhs, rhs_window), rhs_window, window);
            return expected == dense_of(colon(lhs, rhs), window);
        }
        case OracleOp::Equality: {
            const bool dense_equal = dense_of(lhs, window) == dense_of(rhs, window);
            return dense_equal == equals(lhs, rhs);
        }
    }
    return false;
}

OracleCampaignResult run_oracle_campaign(std::uint64_t seed, std::size_t cases, Exponent max_conductor) {
    constexpr std::size_t kCasesPerSemigroup = 10;
    const std::size_t semigroup_count = (cases + kCasesPerSemigroup - 1) / kCasesPerSemigroup;
    const auto family = random_semigroups(seed, semigroup_count, 2, 20, max_conductor);

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto pick = [&](Exponent lo, Exponent hi) { return std::uniform_int_distribution<Exponent>(lo, hi)(rng); };
    auto random_member = [&](const NumericalSemigroup& h, Exponent hi) {
        Exponent n = pick(0, hi);
        while (!h.contains(n)) ++n;
        return n;
    };
    auto random_ideal = [&](const NumericalSemigroup& h) {
        const Exponent hi = h.conductor() + 2 * h.multiplicity();
        std::vector<Exponent> gens;
        for (Exponent i = pick(1, 4); i > 0; --i) gens.push_back(random_member(h, hi));
        return ideal_from_generators(h, gens);
    };

    constexpr OracleOp kOps[] = {OracleOp::Product, OracleOp::Colon, OracleOp::Intersection, OracleOp::Equality};
    OracleCampaignResult result;
    for (std::size_t i = 0; i < cases; ++i) {
        const NumericalSemigroup& h = family[i / kCasesPerSemigroup];
        const OracleOp op = kOps[i % 4];
        const SemigroupIdeal lhs = random_ideal(h);
        SemigroupIdeal rhs = random_ideal(h);
        if (op == OracleOp::Equality && pick(0, 1) == 0) {
            std::vector<Exponent> gens = lhs.generators();
            for (Exponent k = pick(1, 3); k > 0; --k) gens.push_back(gens[0] + random_member(h, h.conductor()));
            rhs = ideal_from_generators(h, gens);
        }
        ++result.cases;
        ++result.per_op[static_cast<std::size_t>(op)];
        if (!oracle_compare(lhs, rhs, op, oracle_bound(lhs, rhs)))
            result.disagreements.push_back({h.generators(), lhs.generators(), rhs.generators(), op});
    }
    return result;
}

}  // namespace qsocle
