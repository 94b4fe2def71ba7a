#include "rewire/shape.hpp"

#include <cctype>
#include <utility>

namespace rewire {

SignedSet tensor_ss(const SignedSet& x, const SignedSet& y)
{
    SignedSet out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

SignedSet dual_ss(const SignedSet& x)
{
    SignedSet out = x;
    for (auto& l : out)
        l.sign = flip(l.sign);
    return out;
}

// ---------------------------------------------------------------------------
// ShapeBuilder

void ShapeBuilder::unit()
{
    open_.push_back(static_cast<std::uint32_t>(nodes_.size()));
    nodes_.push_back({NodeKind::Unit});
    names_.emplace_back();
}

void ShapeBuilder::generator(std::string name)
{
    open_.push_back(static_cast<std::uint32_t>(nodes_.size()));
    nodes_.push_back({NodeKind::Generator});
    names_.push_back(std::move(name));
}

void ShapeBuilder::tensor()
{
    if (open_.size() < 2)
        throw Error("tensor needs two operands");
    std::uint32_t r = open_.back();
    open_.pop_back();
    std::uint32_t l = open_.back();
    open_.back() = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({NodeKind::Tensor, l, r});
    names_.emplace_back();
}

void ShapeBuilder::dual()
{
    if (open_.empty())
        throw Error("dual needs an operand");
    std::uint32_t a = open_.back();
    open_.back() = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({NodeKind::Dual, a});
    names_.emplace_back();
}

void ShapeBuilder::append(const Shape& s)
{
    auto offset = static_cast<std::uint32_t>(nodes_.size());
    for (std::uint32_t i = 0; i < s.node_count(); ++i) {
        ShapeNode n = s.node(i);
        if (n.kind == NodeKind::Tensor) {
            n.first += offset;
            n.second += offset;
        } else if (n.kind == NodeKind::Dual) {
            n.first += offset;
        }
        nodes_.push_back(n);
        names_.push_back(s.atom_name(i));
    }
    open_.push_back(static_cast<std::uint32_t>(nodes_.size() - 1));
}

Shape ShapeBuilder::build()
{
    if (open_.size() != 1)
        throw Error("shape builder holds " + std::to_string(open_.size()) + " operands, expected 1");
    auto rep = std::make_shared<Shape::Rep>();
    rep->nodes = std::move(nodes_);
    rep->names = std::move(names_);
    const auto n = rep->nodes.size();
    rep->signs.assign(n, Sign::Positive);
    rep->sizes.assign(n, 1);
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto& node = rep->nodes[i];
        if (node.kind == NodeKind::Tensor)
            rep->sizes[i] = 1 + rep->sizes[node.first] + rep->sizes[node.second];
        else if (node.kind == NodeKind::Dual)
            rep->sizes[i] = 1 + rep->sizes[node.first];
        else
            rep->leaf_nodes.push_back(i);
    }
    // parents come after children in post-order, so walk backwards
    for (std::size_t k = n; k-- > 0;) {
        const auto& node = rep->nodes[k];
        if (node.kind == NodeKind::Tensor) {
            rep->signs[node.first] = rep->signs[k];
            rep->signs[node.second] = rep->signs[k];
        } else if (node.kind == NodeKind::Dual) {
            rep->signs[node.first] = flip(rep->signs[k]);
        }
    }
    nodes_.clear();
    names_.clear();
    open_.clear();
    return Shape(std::move(rep));
}

// ---------------------------------------------------------------------------
// Shape

Shape Shape::unit()
{
    ShapeBuilder b;
    b.unit();
    return b.build();
}

Shape Shape::generator(std::string name)
{
    ShapeBuilder b;
    b.generator(std::move(name));
    return b.build();
}

Shape Shape::tensor(const Shape& left, const Shape& right)
{
    ShapeBuilder b;
    b.append(left);
    b.append(right);
    b.tensor();
    return b.build();
}

Shape Shape::dual(const Shape& arg)
{
    ShapeBuilder b;
    b.append(arg);
    b.dual();
    return b.build();
}

Shape Shape::subtree(std::uint32_t root_node) const
{
    const std::uint32_t begin = root_node + 1 - subtree_size(root_node);
    ShapeBuilder b;
    for (std::uint32_t i = begin; i <= root_node; ++i) {
        const auto& n = node(i);
        switch (n.kind) {
        case NodeKind::Unit: b.unit(); break;
        case NodeKind::Generator: b.generator(atom_name(i)); break;
        case NodeKind::Tensor: b.tensor(); break;
        case NodeKind::Dual: b.dual(); break;
        }
    }
    return b.build();
}

Shape Shape::left() const
{
    if (kind() != NodeKind::Tensor)
        throw Error("left(): " + to_string() + " is not a tensor");
    return subtree(node(root()).first);
}

Shape Shape::right() const
{
    if (kind() != NodeKind::Tensor)
        throw Error("right(): " + to_string() + " is not a tensor");
    return subtree(node(root()).second);
}

Shape Shape::arg() const
{
    if (kind() != NodeKind::Dual)
        throw Error("arg(): " + to_string() + " is not a dual");
    return subtree(node(root()).first);
}

SignedSet Shape::leaves() const
{
    SignedSet out;
    out.reserve(leaf_count());
    for (auto n : rep_->leaf_nodes)
        out.push_back({rep_->names[n], rep_->signs[n]});
    return out;
}

std::string Shape::to_string() const { return print_shape(*this); }

bool operator==(const Shape& a, const Shape& b)
{
    if (a.rep_ == b.rep_)
        return true;
    return a.rep_->nodes == b.rep_->nodes && a.rep_->names == b.rep_->names;
}

Sign sign_at(const Shape& s, const TreePath& path)
{
    std::uint32_t at = s.root();
    for (std::size_t depth = 0; depth < path.size(); ++depth) {
        const auto& n = s.node(at);
        const int step = path[depth];
        if (n.kind == NodeKind::Tensor && (step == 0 || step == 1))
            at = step == 0 ? n.first : n.second;
        else if (n.kind == NodeKind::Dual && step == 0)
            at = n.first;
        else
            throw Error("invalid tree path at depth " + std::to_string(depth));
    }
    return s.node_signs()[at];
}

// ---------------------------------------------------------------------------
// Printing

std::string print_shape(const Shape& s)
{
    // Explicit stack: either a node to render or a literal to emit.
    struct Task {
        std::uint32_t node;
        const char* literal;
    };
    std::string out;
    std::vector<Task> stack{{s.root(), nullptr}};
    while (!stack.empty()) {
        Task t = stack.back();
        stack.pop_back();
        if (t.literal) {
            out += t.literal;
            continue;
        }
        const auto& n = s.node(t.node);
        switch (n.kind) {
        case NodeKind::Unit: out += 'I'; break;
        case NodeKind::Generator: out += s.atom_name(t.node); break;
        case NodeKind::Dual:
            stack.push_back({0, "'"});
            if (s.node(n.first).kind == NodeKind::Tensor) {
                stack.push_back({0, ")"});
                stack.push_back({n.first, nullptr});
                stack.push_back({0, "("});
            } else {
                stack.push_back({n.first, nullptr});
            }
            break;
        case NodeKind::Tensor: {
            auto push_operand = [&](std::uint32_t child) {
                if (s.node(child).kind == NodeKind::Tensor) {
                    stack.push_back({0, ")"});
                    stack.push_back({child, nullptr});
                    stack.push_back({0, "("});
                } else {
                    stack.push_back({child, nullptr});
                }
            };
            push_operand(n.second);
            stack.push_back({0, "*"});
            push_operand(n.first);
            break;
        }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool ident_start(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

}  // namespace

Shape parse_shape(std::string_view text)
{
    ShapeBuilder b;
    // One frame per open parenthesis: whether a tensor waits for its right operand.
    struct Frame {
        bool pending_tensor = false;
        std::size_t open_pos = 0;
    };
    std::vector<Frame> frames{Frame{}};
    bool expect_operand = true;

    auto finish_term = [&] {
        if (frames.back().pending_tensor) {
            b.tensor();
            frames.back().pending_tensor = false;
        }
    };

    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (expect_operand) {
            if (c == 'I' && (i + 1 == text.size() || !ident_char(text[i + 1]))) {
                b.unit();
                ++i;
                expect_operand = false;
            } else if (ident_start(c)) {
                std::size_t j = i;
                while (j < text.size() && ident_char(text[j]))
                    ++j;
                b.generator(std::string(text.substr(i, j - i)));
                i = j;
                expect_operand = false;
            } else if (c == '(') {
                frames.push_back({false, i});
                ++i;
            } else {
                throw ParseError(std::string("expected generator, I or '(' but found '") + c + "'", i);
            }
            continue;
        }
        switch (c) {
        case '\'':
            b.dual();
            ++i;
            break;
        case '*':
            finish_term();
            frames.back().pending_tensor = true;
            expect_operand = true;
            ++i;
            break;
        case ')':
            if (frames.size() == 1)
                throw ParseError("unmatched ')'", i);
            finish_term();
            frames.pop_back();
            ++i;
            break;
        default:
            throw ParseError(std::string("expected '*', '\\'' or ')' but found '") + c + "'", i);
        }
    }
    if (expect_operand)
        throw ParseError("unexpected end of shape", text.size());
    finish_term();
    if (frames.size() != 1)
        throw ParseError("unclosed '('", frames.back().open_pos);
    return b.build();
}

void validate_generators(const Shape& s, const BaseGraph& base)
{
    for (auto n : s.leaf_nodes()) {
        const auto& name = s.atom_name(n);
        if (!name.empty() && !base.has_object(name))
            throw Error("unknown generator '" + name + "' in shape " + s.to_string());
    }
}

Shape parse_shape(std::string_view text, const BaseGraph& base)
{
    Shape s = parse_shape(text);
    validate_generators(s, base);
    return s;
}

}  // namespace rewire
