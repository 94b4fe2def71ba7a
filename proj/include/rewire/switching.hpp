#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rewire/goi.hpp"
#include "rewire/shape.hpp"

namespace rewire {

/// Serial kernels are the reference; parallel ones must agree exactly.
enum class Execution { Serial, Parallel };

/// A switched tensor: exactly one of its two argument edges survives in any
/// switching.
struct SwitchedPair {
    std::uint32_t node;
    std::uint32_t left;
    std::uint32_t right;
};

/// Undirected graph of a leaf function: parse forests plus linking edges
/// (plus cut edges in the one-sided case).
struct SwitchingGraph {
    std::uint32_t vertex_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fixed;
    std::vector<SwitchedPair> switched;

    /// Adds the parse tree of `s`; tensors whose sign equals `switched_sign`
    /// become switched pairs. Returns the vertex offset of the tree.
    std::uint32_t add_tree(const Shape& s, Sign switched_sign);
};

/// Entry k keeps the left (0) or right (1) argument edge of switched pair k.
using SwitchingChoice = std::vector<std::uint8_t>;

bool switching_is_tree(const SwitchingGraph& g, const SwitchingChoice& choice);

struct SwitchingVerdict {
    bool all_trees = true;
    /// A switching that is not a tree, when one was found.
    std::optional<SwitchingChoice> witness;
    std::string reason;
};

/// Graph contraction with union-find: fixed edges are contracted, then a
/// switched pair is absorbed once both argument edges reach the same class.
/// Accepts iff everything collapses to one class.
SwitchingVerdict contract(const SwitchingGraph& g);

class BoundExceeded : public Error {
public:
    using Error::Error;
};

struct EnumerationVerdict {
    bool all_trees = true;
    /// First failing switching in mask order (bit k = choice k).
    std::optional<SwitchingChoice> witness;
    std::uint64_t switchings = 0;
};

/// Tries all 2^k switchings. Throws BoundExceeded if k > bound.
EnumerationVerdict enumerate_switchings(const SwitchingGraph& g, std::size_t bound = 20,
                                        Execution exec = Execution::Serial);

enum class Condition { Totality, Bijection, Labelling, Switching };

std::string to_string(Condition c);

/// Outcome of a criterion check. Invalid reports name the failed condition
/// and carry a witness: the offending leaf, or a switching that is not a tree.
struct SwitchingReport {
    bool valid = true;
    std::optional<Condition> condition;
    std::optional<Endpoint> leaf;
    std::optional<SwitchingChoice> switching;
    std::string detail;

    explicit operator bool() const { return valid; }
    std::string to_string() const;
};

/// Totality, bijection on generator leaves and labelling for a leaf function
/// in either presentation. Returns a valid report when all three hold.
SwitchingReport check_matching(const PartialLeafFun& f);

}  // namespace rewire
