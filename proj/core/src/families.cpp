#include "qsocle/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qsocle/error.hpp"

namespace qsocle {

namespace {

// A node of the semigroup tree: gap set as a bit mask (bit n set iff n is a gap).
struct TreeNode {
    std::uint64_t gaps = 0;
    Exponent frobenius = -1;
};

bool is_member(const TreeNode& node, Exponent n) {
    if (n < 0) return false;
    if (n > node.frobenius) return true;
    return ((node.gaps >> n) & 1U) == 0;
}

Exponent multiplicity_of(const TreeNode& node) {
    Exponent m = 1;
    while (!is_member(node, m)) ++m;
    return m;
}

std::vector<Exponent> minimal_generators(const TreeNode& node) {
    const Exponent m = multiplicity_of(node);
    std::vector<Exponent> gens;
    for (Exponent g = m; g <= std::max(node.frobenius + m, m); ++g) {
        if (!is_member(node, g)) continue;
        bool decomposable = false;
        for (Exponent x = m; x <= g - m && !decomposable; ++x)
            decomposable = is_member(node, x) && is_member(node, g - x);
        if (!decomposable) gens.push_back(g);
    }
    return gens;
}

void walk(const TreeNode& node, Exponent max_conductor, std::vector<NumericalSemigroup>& out) {
    const auto gens = minimal_generators(node);
    const auto genus = static_cast<Exponent>(std::popcount(node.gaps));
    if (2 * genus == node.frobenius + 1) out.emplace_back(gens);
    for (Exponent g : gens) {
        if (g <= node.frobenius || g + 1 > max_conductor) continue;
        walk(TreeNode{node.gaps | (std::uint64_t{1} << g), g}, max_conductor, out);
    }
}

void sort_unique(std::vector<NumericalSemigroup>& family) {
    std::sort(family.begin(), family.end(), [](const auto& x, const auto& y) {
        if (x.conductor() != y.conductor()) return x.conductor() < y.conductor();
        return x.generators() < y.generators();
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace

std::vector<NumericalSemigroup> example_semigroups() {
    return {NumericalSemigroup{10, 13, 16, 17, 19}, NumericalSemigroup{7, 10, 18, 22}};
}

std::vector<NumericalSemigroup> all_symmetric_semigroups(Exponent max_conductor) {
    if (max_conductor > 63) throw InvalidParameters("tree enumeration supports conductor <= 63");
    std::vector<NumericalSemigroup> out;
    walk(TreeNode{}, max_conductor, out);
    sort_unique(out);
    return out;
}

std::vector<NumericalSemigroup> gorenstein_family(const GorensteinFamilyOptions& options) {
    const Exponent cmax = options.max_conductor;
    std::vector<NumericalSemigroup> family = all_symmetric_semigroups(std::min(options.exhaustive_conductor, cmax));

    for (Exponent a = 2; a <= options.max_two_generated_multiplicity; ++a)
        for (Exponent b = a + 1; (a - 1) * (b - 1) <= cmax; ++b)
            if (std::gcd(a, b) == 1) family.push_back(NumericalSemigroup{a, b});

    // Gluing <a,b> (scaled by d) with e in <a,b> keeps the semigroup symmetric.
    for (Exponent a = 2; a <= 8; ++a) {
        for (Exponent b = a + 1; b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const NumericalSemigroup base{a, b};
            for (Exponent d = 2; d <= options.max_glue_factor; ++d) {
                for (Exponent e = a + 1; e <= cmax; ++e) {
                    if (std::gcd(d, e) != 1 || !base.contains(e) || e == b) continue;
                    const NumericalSemigroup glued{d * a, d * b, e};
                    if (glued.conductor() <= cmax && glued.is_symmetric() && glued.generators().size() == 3)
                        family.push_back(glued);
                }
            }
        }
    }

    sort_unique(family);
    for (auto& h : example_semigroups())
        if (std::find(family.begin(), family.end(), h) == family.end()) family.push_back(h);
    return family;
}

std::vector<NumericalSemigroup> random_semigroups(std::uint64_t seed, std::size_t count, Exponent min_multiplicity,
                                                  Exponent max_multiplicity, Exponent max_conductor) {
    if (min_multiplicity < 2 || max_multiplicity < min_multiplicity)
        throw InvalidParameters("random semigroups need 2 <= min_multiplicity <= max_multiplicity");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Exponent> mult(min_multiplicity, max_multiplicity);
    std::uniform_int_distribution<int> extra(1, 4);
    std::vector<NumericalSemigroup> out;
    while (out.size() < count) {
        const Exponent m = mult(rng);
        std::uniform_int_distribution<Exponent> offset(1, 2 * m);
        std::vector<Exponent> gens{m};
        const int k = extra(rng);
        for (int i = 0; i < k; ++i) gens.push_back(m + offset(rng));
        if (gcd_of(gens) != 1) continue;
        NumericalSemigroup h(gens);
        if (h.conductor() <= max_conductor && h.multiplicity() == m) out.push_back(std::move(h));
    }
    return out;
}

}  // namespace qsocle
