#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rewire/goi.hpp"
#include "rewire/shape.hpp"
#include "rewire/switching.hpp"

namespace rewire {

/// Raised when an operation that must preserve validity produced an invalid
/// result. Indicates a bug, never bad input.
class InternalFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Candidate morphism S -> T: a partial leaf function on leaves(S) and
/// leaves(T). Whether it is a linking is decided by check_linking.
class Linking {
public:
    Linking(Shape source, Shape target);
    /// Throws Error when `fun` is not over leaves(source) and leaves(target).
    Linking(Shape source, Shape target, PartialLeafFun fun);

    const Shape& source() const { return source_; }
    const Shape& target() const { return target_; }
    const PartialLeafFun& fun() const { return fun_; }

    void set(Endpoint from, Endpoint to, std::optional<PathMorphism> label = std::nullopt);
    void erase(Endpoint from) { fun_.erase(from); }
    const std::optional<Hop>& at(Endpoint from) const { return fun_.at(from); }

    /// Canonical text of the edges alone; equal for equal leaf functions.
    std::string edge_key() const;
    /// edge_key prefixed by both shapes.
    std::string key() const;

    friend bool operator==(const Linking& a, const Linking& b)
    {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.fun_ == b.fun_;
    }

private:
    Shape source_;
    Shape target_;
    PartialLeafFun fun_;
};

/// Source trees switch at positive tensors, target trees at negative ones.
SwitchingGraph switching_graph(const Linking& f);
std::size_t switched_tensor_count(const Linking& f);

/// Full criterion with the contraction checker. Never throws on invalid
/// input; the report names the failed condition and a witness.
SwitchingReport check_linking(const Linking& f);

/// Same verdict by trying every switching. Throws BoundExceeded above
/// `bound` switched tensors.
SwitchingReport check_linking_bruteforce(const Linking& f, std::size_t bound = 20,
                                         Execution exec = Execution::Serial);

/// Batch criterion check; the parallel kernel returns the serial results.
std::vector<SwitchingReport> check_all(std::span<const Linking> fs, Execution exec = Execution::Serial);

/// f then g. Throws Error for mismatched shapes or invalid inputs, and
/// InternalFault if the composite fails the criterion.
Linking compose(const Linking& f, const Linking& g);

/// True iff f + g has no directed cycle, i.e. composition drops nothing.
bool compatibility_check(const Linking& f, const Linking& g);

/// Positional sign-preserving matching of two shapes with the same leaf
/// sequence. Throws Error when the leaf sequences differ.
Linking pairing(const Shape& source, const Shape& target);

Linking identity(const Shape& s);
/// (S*T)*U -> S*(T*U)
Linking assoc(const Shape& s, const Shape& t, const Shape& u);
/// S*(T*U) -> (S*T)*U
Linking assoc_inv(const Shape& s, const Shape& t, const Shape& u);
/// S*T -> T*S
Linking sym(const Shape& s, const Shape& t);
/// S -> I*S
Linking unit_l(const Shape& s);
/// S -> S*I
Linking unit_r(const Shape& s);
/// I*S -> S
Linking unit_l_inv(const Shape& s);
/// S*I -> S
Linking unit_r_inv(const Shape& s);
/// (S*T -> U') to (S -> (T*U)')
Linking curry(const Linking& f);
/// (S -> (T*U)') to (S*T -> U')
Linking uncurry(const Linking& f);
/// (S -> T) to (T' -> S')
Linking dual_mor(const Linking& f);
/// (S -> T), (S' -> T') to S*S' -> T*T'
Linking tensor_mor(const Linking& f, const Linking& g);
/// Generator morphism a -> b for an arrow x : a -> b of the base graph.
Linking gen(const BaseGraph& base, const std::string& arrow);

/// Rebuilds `f` between new shapes, sending every endpoint through `move`.
Linking remap(const Linking& f, Shape source, Shape target, const std::function<Endpoint(Endpoint)>& move);

}  // namespace rewire
