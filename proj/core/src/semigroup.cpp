#include "qsocle/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "qsocle/error.hpp"

namespace qsocle {

namespace {

// Membership tables are dense over [0, conductor); refuse semigroups whose
// table would not fit comfortably in memory.
constexpr Exponent kMaxConductor = Exponent{1} << 28;

}  // namespace

struct NumericalSemigroup::Tables {
    std::vector<Exponent> generators;
    std::vector<Exponent> apery;  // w.r.t. multiplicity
    std::vector<std::uint8_t> member;  // [0, conductor)
    Exponent frobenius = -1;
    bool symmetric = true;
};

Exponent gcd_of(std::span<const Exponent> values) noexcept {
    Exponent g = 0;
    for (Exponent v : values) g = std::gcd(g, v);
    return g;
}

NumericalSemigroup::NumericalSemigroup(std::initializer_list<Exponent> generators)
    : NumericalSemigroup(std::span<const Exponent>(generators.begin(), generators.size())) {}

NumericalSemigroup::NumericalSemigroup(std::span<const Exponent> input) {
    if (input.empty()) throw EmptyGenerators();
    for (Exponent g : input)
        if (g < 1) throw InvalidGenerator(g);

    std::vector<Exponent> gens(input.begin(), input.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (Exponent g = gcd_of(gens); g != 1) throw NotCofinite(g);

    auto t = std::make_shared<Tables>();
    const Exponent a = gens.front();

    // Apery set modulo the multiplicity by relaxation over residue classes.
    constexpr Exponent kInf = std::numeric_limits<Exponent>::max();
    t->apery.assign(static_cast<std::size_t>(a), kInf);
    t->apery[0] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (Exponent i = 0; i < a; ++i) {
            const Exponent base = t->apery[static_cast<std::size_t>(i)];
            if (base == kInf) continue;
            for (Exponent g : gens) {
                auto j = static_cast<std::size_t>((i + g) % a);
                if (base + g < t->apery[j]) {
                    t->apery[j] = base + g;
                    changed = true;
                }
            }
        }
    }

    t->frobenius = *std::max_element(t->apery.begin(), t->apery.end()) - a;
    const Exponent conductor = t->frobenius + 1;
    if (conductor > kMaxConductor)
        throw Error("conductor " + std::to_string(conductor) + " exceeds the supported size");

    t->member.resize(static_cast<std::size_t>(conductor));
    for (Exponent n = 0; n < conductor; ++n)
        t->member[static_cast<std::size_t>(n)] = n >= t->apery[static_cast<std::size_t>(n % a)];

    auto in_h = [&](Exponent n) {
        if (n < 0) return false;
        if (n >= conductor) return true;
        return t->member[static_cast<std::size_t>(n)] != 0;
    };

    // g is a minimal generator iff it is not a sum of two positive members.
    for (Exponent g : gens) {
        bool decomposable = false;
        for (Exponent h = a; h <= g - a && !decomposable; ++h)
            decomposable = in_h(h) && in_h(g - h);
        if (!decomposable) t->generators.push_back(g);
    }

    for (Exponent n = 0; n <= t->frobenius && t->symmetric; ++n)
        t->symmetric = in_h(n) != in_h(t->frobenius - n);

    tables_ = std::move(t);
}

const std::vector<Exponent>& NumericalSemigroup::generators() const noexcept {
    return tables_->generators;
}

Exponent NumericalSemigroup::multiplicity() const noexcept { return tables_->generators.front(); }

Exponent NumericalSemigroup::frobenius() const noexcept { return tables_->frobenius; }

Exponent NumericalSemigroup::conductor() const noexcept { return tables_->frobenius + 1; }

bool NumericalSemigroup::contains(Exponent n) const noexcept {
    if (n < 0) return false;
    if (n > tables_->frobenius) return true;
    return tables_->member[static_cast<std::size_t>(n)] != 0;
}

std::vector<Exponent> NumericalSemigroup::apery_set(Exponent m) const {
    if (m <= 0 || !contains(m)) throw InvalidAperyBase(m);
    if (m == multiplicity()) return tables_->apery;

    std::vector<Exponent> result(static_cast<std::size_t>(m), -1);
    Exponent found = 0;
    // Every residue class is hit by [conductor, conductor + m).
    for (Exponent n = 0; found < m; ++n) {
        auto& slot = result[static_cast<std::size_t>(n % m)];
        if (slot < 0 && contains(n)) {
            slot = n;
            ++found;
        }
    }
    return result;
}

SemigroupInvariants NumericalSemigroup::invariants() const {
    SemigroupInvariants inv;
    inv.frobenius = frobenius();
    inv.conductor = conductor();
    inv.multiplicity = multiplicity();
    for (Exponent n = 1; n <= inv.frobenius; ++n)
        if (!contains(n)) inv.gaps.push_back(n);
    inv.genus = inv.gaps.size();
    inv.symmetric = is_symmetric();
    return inv;
}

bool NumericalSemigroup::is_symmetric() const noexcept { return tables_->symmetric; }

bool NumericalSemigroup::reflection_window_is_symmetric(Exponent alpha) const {
    const Exponent a = multiplicity();
    if (a < 3)
        throw HypothesisNotMet("reflection window test needs multiplicity >= 3, got " +
                               std::to_string(a));
    if (alpha < a - 1)
        throw HypothesisNotMet("reflection window test needs alpha >= " + std::to_string(a - 1) +
                               ", got " + std::to_string(alpha));
    for (Exponent n = 0; n <= alpha; ++n)
        if (contains(n) == contains(alpha - n)) return false;
    return true;
}

std::string NumericalSemigroup::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(generators()[i]);
    }
    out += '>';
    return out;
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
    std::vector<Exponent> gens;
    std::string_view rest = text;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n'))
            s.remove_suffix(1);
        return s;
    };
    rest = trim(rest);
    if (!rest.empty() && rest.front() == '<') {
        if (rest.back() != '>') throw ParseError("unterminated semigroup literal: " + std::string(text));
        rest = rest.substr(1, rest.size() - 2);
    }
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto token = trim(rest.substr(0, comma));
        Exponent value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc{} || ptr != last)
            throw ParseError("bad generator '" + std::string(token) + "' in " + std::string(text));
        gens.push_back(value);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
        if (trim(rest).empty()) throw ParseError("trailing comma in " + std::string(text));
    }
    return NumericalSemigroup(gens);
}

bool operator==(const NumericalSemigroup& lhs, const NumericalSemigroup& rhs) noexcept {
    return lhs.tables_ == rhs.tables_ || lhs.tables_->generators == rhs.tables_->generators;
}

}  // namespace qsocle
