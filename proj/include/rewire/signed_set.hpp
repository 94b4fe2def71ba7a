#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rewire {

enum class Sign : std::uint8_t { Positive, Negative };

constexpr Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

constexpr char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

/// An element of a signed set, tagged with the atom it came from. An empty
/// name means the unit I.
struct Leaf {
    std::string atom;
    Sign sign = Sign::Positive;

    bool is_unit() const { return atom.empty(); }
    std::string atom_text() const { return is_unit() ? std::string("I") : atom; }

    friend bool operator==(const Leaf&, const Leaf&) = default;
};

using SignedSet = std::vector<Leaf>;

/// Disjoint union, left block first.
SignedSet tensor_ss(const SignedSet& x, const SignedSet& y);

/// Every sign reversed.
SignedSet dual_ss(const SignedSet& x);

}  // namespace rewire
