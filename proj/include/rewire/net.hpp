#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rewire/cutelim.hpp"
#include "rewire/linking.hpp"

namespace rewire {

/// Retargets the edge out of a unit leaf.
struct RewireStep {
    Endpoint unit_leaf;
    Endpoint old_target;
    Endpoint new_target;

    RewireStep inverse() const { return {unit_leaf, new_target, old_target}; }
    std::string to_string() const;

    friend bool operator==(const RewireStep&, const RewireStep&) = default;
};

enum class Outcome { Equal, Distinct, Inconclusive };

std::string to_string(Outcome o);

struct EquivalenceVerdict {
    Outcome outcome = Outcome::Distinct;
    /// Shortest rewiring chain from f to g when equal.
    std::vector<RewireStep> witness;
    /// Class members visited.
    std::size_t explored = 0;

    bool equal() const { return outcome == Outcome::Equal; }
};

struct SearchOptions {
    std::size_t max_states = 1'000'000;
    /// Off means only identical leaf functions are equal.
    bool allow_rewiring = true;
    Execution exec = Execution::Serial;
};

/// Validity test for candidate leaf functions during the class search.
using Validity = std::function<bool(const PartialLeafFun&)>;

/// Throws Error if `step` does not start from the current edge.
PartialLeafFun apply_step(const PartialLeafFun& f, const RewireStep& step);
Linking apply_step(const Linking& f, const RewireStep& step);

/// Every single-edge retargeting of a unit edge that stays valid.
std::vector<RewireStep> similar_steps(const PartialLeafFun& f, const Validity& valid);
std::vector<RewireStep> similar_steps(const Linking& f);
std::vector<Linking> similar_neighbors(const Linking& f);

/// Breadth-first class search from f; reaching g gives a shortest witness.
EquivalenceVerdict equivalent(const PartialLeafFun& f, const PartialLeafFun& g, const Validity& valid,
                              const SearchOptions& options = {});
/// Throws Error unless both have the same shapes and are valid.
EquivalenceVerdict equivalent(const Linking& f, const Linking& g, const SearchOptions& options = {});
EquivalenceVerdict equivalent(const OneSidedLinking& f, const OneSidedLinking& g, const SearchOptions& options = {});

/// The whole similarity class of f in BFS order. Throws BoundExceeded above
/// `max_states` members.
std::vector<Linking> similarity_class(const Linking& f, std::size_t max_states = 1'000'000);

/// Representative of the composite net.
inline Linking net_compose(const Linking& f, const Linking& g) { return compose(f, g); }

/// All valid linkings S -> T over a discrete base: generator leaves matched
/// within each atom with identity labels, unit edges sent anywhere legal.
/// Throws BoundExceeded when the shapes have more than `max_leaves` leaves.
std::vector<Linking> enumerate_linkings(const Shape& source, const Shape& target, std::size_t max_leaves = 12);

/// The linkings S -> T grouped into similarity classes.
std::vector<std::vector<Linking>> enumerate_nets(const Shape& source, const Shape& target,
                                                 std::size_t max_leaves = 12);

}  // namespace rewire
