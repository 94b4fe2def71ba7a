#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rewire/base.hpp"
#include "rewire/signed_set.hpp"

namespace rewire {

enum class NodeKind : std::uint8_t { Unit, Generator, Tensor, Dual };

/// One vertex of a parse tree. Children are node indices; for Dual only
/// `first` is used, for atoms neither is.
struct ShapeNode {
    NodeKind kind;
    std::uint32_t first = 0;
    std::uint32_t second = 0;

    friend bool operator==(const ShapeNode&, const ShapeNode&) = default;
};

/// Syntax error with the 0-based byte offset of the offending character
/// (for an unclosed parenthesis, the parenthesis itself).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class ShapeBuilder;

/// Immutable parse tree over atoms (generators and I) with binary tensor and
/// postfix dual. Nodes are stored in post-order, so every subtree is a
/// contiguous range ending at its root, leaves appear in written order, and
/// structural equality is plain array equality.
class Shape {
public:
    static Shape unit();
    static Shape generator(std::string name);
    static Shape tensor(const Shape& left, const Shape& right);
    static Shape dual(const Shape& arg);

    NodeKind kind() const { return node(root()).kind; }
    bool is_atom() const { return kind() == NodeKind::Unit || kind() == NodeKind::Generator; }

    /// Subshape accessors; each copies the subtree.
    Shape left() const;
    Shape right() const;
    Shape arg() const;
    Shape subtree(std::uint32_t node) const;

    std::span<const ShapeNode> nodes() const { return rep_->nodes; }
    const ShapeNode& node(std::uint32_t i) const { return rep_->nodes[i]; }
    std::uint32_t root() const { return static_cast<std::uint32_t>(rep_->nodes.size() - 1); }
    std::size_t node_count() const { return rep_->nodes.size(); }

    /// Generator name at an atom node; empty for I.
    const std::string& atom_name(std::uint32_t node) const { return rep_->names[node]; }

    /// Sign of every node: positive iff under an even number of duals.
    std::span<const Sign> node_signs() const { return rep_->signs; }

    std::size_t leaf_count() const { return rep_->leaf_nodes.size(); }
    /// Node index of the i-th leaf in written order.
    std::uint32_t leaf_node(std::size_t i) const { return rep_->leaf_nodes[i]; }
    std::span<const std::uint32_t> leaf_nodes() const { return rep_->leaf_nodes; }
    std::uint32_t subtree_size(std::uint32_t node) const { return rep_->sizes[node]; }

    SignedSet leaves() const;
    std::string to_string() const;

    friend bool operator==(const Shape& a, const Shape& b);

private:
    friend class ShapeBuilder;
    struct Rep {
        std::vector<ShapeNode> nodes;
        std::vector<std::string> names;
        std::vector<Sign> signs;
        std::vector<std::uint32_t> sizes;
        std::vector<std::uint32_t> leaf_nodes;
    };
    explicit Shape(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

    std::shared_ptr<const Rep> rep_;
};

/// Post-order stack machine for assembling shapes in linear time.
class ShapeBuilder {
public:
    void unit();
    void generator(std::string name);
    void tensor();
    void dual();
    /// Appends a copy of an existing shape as one operand.
    void append(const Shape& s);
    std::size_t depth() const { return open_.size(); }
    Shape build();

private:
    std::vector<ShapeNode> nodes_;
    std::vector<std::string> names_;
    std::vector<std::uint32_t> open_;
};

/// Root-to-node route: 0 picks the left (or only) child, 1 the right child.
using TreePath = std::vector<int>;

/// Sign of the node reached by `path`. Throws Error for an invalid path.
Sign sign_at(const Shape& s, const TreePath& path);

/// Core grammar: shape := term ("*" term)*, term := primary "'"*,
/// primary := IDENT | "I" | "(" shape ")". Iterative, so deep nesting is fine.
Shape parse_shape(std::string_view text);

/// As above, also rejecting generators that are not objects of `base`.
Shape parse_shape(std::string_view text, const BaseGraph& base);

/// Throws Error naming the first generator missing from `base`.
void validate_generators(const Shape& s, const BaseGraph& base);

std::string print_shape(const Shape& s);

/// Nonempty ordered sequence of shapes.
using Sequent = std::vector<Shape>;

/// A sequent part plus cut pairs. Each cut stores S; its partner S' is
/// implied and leaf i of S faces leaf i of S'.
struct CutSequent {
    std::vector<Shape> sequent;
    std::vector<Shape> cuts;

    friend bool operator==(const CutSequent&, const CutSequent&) = default;
};

}  // namespace rewire
