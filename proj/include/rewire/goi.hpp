#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rewire/base.hpp"
#include "rewire/signed_set.hpp"

namespace rewire {

enum class Side : std::uint8_t { Source, Target };

/// A leaf of the source or target signed set of a morphism.
struct Endpoint {
    Side side = Side::Source;
    std::uint32_t index = 0;

    std::string to_string() const { return (side == Side::Source ? "s" : "t") + std::to_string(index); }

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
    friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

constexpr Endpoint src(std::uint32_t i) { return {Side::Source, i}; }
constexpr Endpoint tgt(std::uint32_t i) { return {Side::Target, i}; }

/// One directed edge out of a domain endpoint.
struct Hop {
    Endpoint to;
    std::optional<PathMorphism> label;

    friend bool operator==(const Hop&, const Hop&) = default;
};

/// Morphism X -> Y of Int(Setp): a partial function from X+ + Y- to X- + Y+,
/// each edge optionally labelled by a base-category path.
///
/// Edges live in a dense table indexed by slot: source leaves first, then
/// target leaves.
class PartialLeafFun {
public:
    PartialLeafFun() = default;
    PartialLeafFun(SignedSet source, SignedSet target);

    static PartialLeafFun identity(const SignedSet& x);

    const SignedSet& source() const { return source_; }
    const SignedSet& target() const { return target_; }

    std::size_t slot_count() const { return out_.size(); }
    std::size_t slot(Endpoint e) const;
    Endpoint endpoint(std::size_t slot) const;
    bool valid(Endpoint e) const;
    const Leaf& leaf(Endpoint e) const;

    /// X+ + Y-: where edges may start.
    bool is_domain(Endpoint e) const;
    /// X- + Y+: where edges may end.
    bool is_codomain(Endpoint e) const;

    /// Throws Error when `from` is not a domain endpoint or `hop.to` not a
    /// codomain endpoint.
    void set(Endpoint from, Hop hop);
    void erase(Endpoint from);

    const std::optional<Hop>& at(Endpoint from) const { return out_[slot(from)]; }
    const std::optional<Hop>& at_slot(std::size_t s) const { return out_[s]; }

    std::vector<std::pair<Endpoint, Hop>> edges() const;
    std::size_t edge_count() const;
    /// Defined on every domain endpoint.
    bool total() const;

    friend bool operator==(const PartialLeafFun&, const PartialLeafFun&) = default;

private:
    SignedSet source_;
    SignedSet target_;
    std::vector<std::optional<Hop>> out_;
};

/// Canonical text of the edge table; equal iff the functions are equal.
std::string edge_key(const PartialLeafFun& f);

/// Path composition, f first. An edge <l, l'> is present iff a finite
/// directed path runs from l to l' in the union of f and g; paths that close
/// into a cycle through the middle set vanish. The composite edge is labelled
/// by the composite of the hop labels when every hop is labelled.
PartialLeafFun compose_plf(const PartialLeafFun& f, const PartialLeafFun& g);

/// Middle-set leaf indices visited by the path that produced the composite
/// edge out of `from`, in visiting order. Throws Error when the composite has
/// no such edge or it does not end at `to`.
std::vector<std::uint32_t> unique_path(const PartialLeafFun& f, const PartialLeafFun& g,
                                       Endpoint from, Endpoint to);

}  // namespace rewire
