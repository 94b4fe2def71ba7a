#include "rewire/cli/dot.hpp"

namespace rewire::cli {

namespace {

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

void tree(std::string& out, const Shape& s, const char* prefix, const char* title, Sign switched)
{
    out += std::string("  subgraph cluster_") + title + " {\n";
    out += std::string("    label=\"") + title + ": " + escape(s.to_string()) + "\";\n";
    const auto signs = s.node_signs();
    std::uint32_t leaf = 0;
    for (std::uint32_t i = 0; i < s.node_count(); ++i) {
        const auto& n = s.node(i);
        const std::string id = prefix + std::to_string(i);
        std::string label;
        std::string extra;
        switch (n.kind) {
        case NodeKind::Unit:
        case NodeKind::Generator:
            label = (n.kind == NodeKind::Unit ? std::string("I") : s.atom_name(i)) + sign_char(signs[i]) + " (" +
                    prefix + std::to_string(leaf++) + ")";
            extra = ", shape=plaintext";
            break;
        case NodeKind::Tensor:
            label = "*";
            extra = signs[i] == switched ? ", shape=box, peripheries=2" : ", shape=circle";
            break;
        case NodeKind::Dual:
            label = "'";
            extra = ", shape=circle";
            break;
        }
        out += "    " + id + " [label=\"" + escape(label) + "\"" + extra + "];\n";
    }
    out += "  }\n";
    for (std::uint32_t i = 0; i < s.node_count(); ++i) {
        const auto& n = s.node(i);
        const std::string id = prefix + std::to_string(i);
        if (n.kind == NodeKind::Tensor) {
            out += "  " + id + " -> " + prefix + std::to_string(n.first) + " [dir=none];\n";
            out += "  " + id + " -> " + prefix + std::to_string(n.second) + " [dir=none];\n";
        } else if (n.kind == NodeKind::Dual) {
            out += "  " + id + " -> " + prefix + std::to_string(n.first) + " [dir=none];\n";
        }
    }
}

}  // namespace

std::string export_dot(const Linking& f, const std::string& name)
{
    std::string out = "digraph \"" + escape(name) + "\" {\n";
    out += "  node [fontname=\"Helvetica\"];\n";
    tree(out, f.source(), "s", "source", Sign::Positive);
    tree(out, f.target(), "t", "target", Sign::Negative);
    auto node = [&](Endpoint e) {
        const Shape& s = e.side == Side::Source ? f.source() : f.target();
        return (e.side == Side::Source ? "s" : "t") + std::to_string(s.leaf_node(e.index));
    };
    for (const auto& [from, hop] : f.fun().edges()) {
        out += "  " + node(from) + " -> " + node(hop.to) + " [style=dashed";
        if (hop.label && !hop.label->is_identity())
            out += ", label=\"" + escape(hop.label->to_string()) + "\"";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace rewire::cli
