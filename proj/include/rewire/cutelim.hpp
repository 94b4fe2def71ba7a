#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rewire/linking.hpp"

namespace rewire {

/// One-sided presentation: a leaf function on the forest of a cut sequent.
///
/// Trees are numbered sequent shapes first; cut k contributes tree n+2k
/// (its S) and tree n+2k+1 (S'). Leaves are numbered globally in tree order
/// and every endpoint lives on the target side of the underlying function,
/// so negative leaves are the domain and positive leaves the codomain.
class OneSidedLinking {
public:
    explicit OneSidedLinking(CutSequent shapes);
    OneSidedLinking(CutSequent shapes, PartialLeafFun fun);

    const CutSequent& shapes() const { return shapes_; }
    const PartialLeafFun& fun() const { return fun_; }

    std::size_t tree_count() const { return trees_.size(); }
    const Shape& tree(std::size_t t) const { return trees_[t]; }
    std::uint32_t leaf_offset(std::size_t t) const { return offsets_[t]; }
    std::uint32_t leaf_count() const { return offsets_.back(); }
    /// Tree containing a global leaf.
    std::size_t tree_of(std::uint32_t leaf) const;

    /// Global index of leaf i of tree t.
    std::uint32_t global(std::size_t t, std::uint32_t i) const { return offsets_[t] + i; }

    void set(std::uint32_t from, std::uint32_t to, std::optional<PathMorphism> label = std::nullopt);
    const std::optional<Hop>& at(std::uint32_t from) const { return fun_.at(tgt(from)); }

    std::string edge_key() const;

    friend bool operator==(const OneSidedLinking& a, const OneSidedLinking& b)
    {
        return a.shapes_ == b.shapes_ && a.fun_ == b.fun_;
    }

private:
    CutSequent shapes_;
    std::vector<Shape> trees_;
    std::vector<std::uint32_t> offsets_;
    PartialLeafFun fun_;
};

/// Every tree switches at negative tensors; each cut adds an edge between
/// the roots of its pair.
SwitchingGraph switching_graph(const OneSidedLinking& f);

SwitchingReport check_one_sided(const OneSidedLinking& f);

/// f : S -> T as a one-sided linking on |- S', T.
OneSidedLinking two_to_one(const Linking& f);

/// Inverse of two_to_one. Throws Error unless the sequent is exactly
/// |- S', T with no cuts.
Linking one_to_two(const OneSidedLinking& f);

/// One reduction of cut `index`. Atomic cuts disappear and their edges are
/// spliced; tensor cuts split in place into two cuts; dual cuts swap sides.
OneSidedLinking eliminate_cut(const OneSidedLinking& f, std::size_t index);

enum class Strategy { Leftmost, Rightmost, Random };

struct Normalization {
    OneSidedLinking result;
    std::size_t steps = 0;
};

/// Repeats eliminate_cut until no cut remains. `seed` drives Strategy::Random.
Normalization normalize_stepwise(const OneSidedLinking& f, Strategy strategy = Strategy::Leftmost,
                                 std::uint64_t seed = 0);

/// Direct normal form: each sequent leaf follows edges through cut partners
/// until it reaches another sequent leaf.
OneSidedLinking turbo_normalize(const OneSidedLinking& f);

/// Nodes in the stored S trees: the exact number of stepwise reductions.
std::size_t cut_size(const CutSequent& s);

/// Chain S0 -> S1 -> ... -> Sn as |- S0', Sn with cuts S1 .. S(n-1).
OneSidedLinking fold_chain(const std::vector<Linking>& chain);

}  // namespace rewire
