#include "rewire/cli/sequent_file.hpp"

#include <sstream>

#include "rewire/cli/syntax.hpp"

namespace rewire::cli {

namespace {

struct TreeLeaf {
    std::size_t tree;
    std::uint32_t leaf;
};

TreeLeaf parse_tree_leaf(std::string_view text)
{
    text = trim(text);
    const auto dot = text.find('.');
    if (text.empty() || text[0] != 'g' || dot == std::string_view::npos)
        throw Error("bad endpoint '" + std::string(text) + "', expected g<tree>.<leaf>");
    try {
        return {std::stoul(std::string(text.substr(1, dot - 1))),
                static_cast<std::uint32_t>(std::stoul(std::string(text.substr(dot + 1))))};
    } catch (const std::logic_error&) {
        throw Error("bad endpoint '" + std::string(text) + "'");
    }
}

}  // namespace

SequentFile parse_sequent_file(const std::string& text)
{
    BaseGraph base;
    CutSequent shapes;
    bool have_sequent = false;
    std::vector<std::pair<int, std::string>> edges;
    std::istringstream in(text);
    int number = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++number;
        const auto hash = raw.find('#');
        const std::string line(trim(hash == std::string::npos ? raw : raw.substr(0, hash)));
        if (line.empty())
            continue;
        auto where = [&](const std::string& what) { return Error("line " + std::to_string(number) + ": " + what); };
        try {
            if (line.rfind("sequent:", 0) == 0) {
                if (have_sequent)
                    throw where("duplicate sequent line");
                for (const auto& s : split_top_level(std::string_view(line).substr(8)))
                    shapes.sequent.push_back(parse_shape_sugar(s, {}, &base));
                have_sequent = true;
            } else if (line.rfind("cut:", 0) == 0) {
                shapes.cuts.push_back(parse_shape_sugar(std::string_view(line).substr(4), {}, &base));
            } else if (line.rfind("object ", 0) == 0) {
                std::istringstream words(line.substr(7));
                for (std::string w; words >> w;)
                    base.add_object(w);
            } else if (line.rfind("arrow ", 0) == 0) {
                const auto colon = line.find(':');
                const auto arrow = line.find("->");
                if (colon == std::string::npos || arrow == std::string::npos)
                    throw where("expected arrow NAME : SOURCE -> TARGET");
                base.add_arrow(std::string(trim(line.substr(6, colon - 6))),
                               std::string(trim(line.substr(colon + 1, arrow - colon - 1))),
                               std::string(trim(line.substr(arrow + 2))));
            } else if (line[0] == 'g') {
                edges.emplace_back(number, line);
            } else {
                throw where("unrecognised line: " + line);
            }
        } catch (const ParseError& e) {
            throw where(e.what());
        }
    }
    if (!have_sequent)
        throw Error("missing 'sequent:' line");

    OneSidedLinking f(std::move(shapes));
    for (const auto& [number, line] : edges) {
        try {
            const auto e = parse_edge_line(line);
            const auto a = parse_tree_leaf(e.from);
            const auto b = parse_tree_leaf(e.to);
            for (const auto& tl : {a, b})
                if (tl.tree >= f.tree_count() || tl.leaf >= f.tree(tl.tree).leaf_count())
                    throw Error("endpoint g" + std::to_string(tl.tree) + "." + std::to_string(tl.leaf) +
                                " does not exist");
            const auto from = f.global(a.tree, a.leaf);
            const auto to = f.global(b.tree, b.leaf);
            if (f.at(from))
                throw Error("leaf already has an edge");
            f.set(from, to, edge_label(base, f.fun().leaf(tgt(from)), f.fun().leaf(tgt(to)), e.label));
        } catch (const Error& e) {
            throw Error("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return {std::move(base), std::move(f)};
}

std::string format_one_sided(const OneSidedLinking& f, const BaseGraph* base)
{
    std::string out;
    if (base && !base->objects().empty()) {
        out += "object";
        for (const auto& o : base->objects())
            out += " " + o;
        out += "\n";
        for (const auto& a : base->arrows())
            out += "arrow " + a.name + " : " + a.source + " -> " + a.target + "\n";
    }
    out += "sequent: ";
    for (std::size_t i = 0; i < f.shapes().sequent.size(); ++i)
        out += (i ? ", " : "") + f.shapes().sequent[i].to_string();
    out += "\n";
    for (const auto& c : f.shapes().cuts)
        out += "cut: " + c.to_string() + "\n";
    auto name = [&](std::uint32_t leaf) {
        const auto t = f.tree_of(leaf);
        return "g" + std::to_string(t) + "." + std::to_string(leaf - f.leaf_offset(t));
    };
    for (std::uint32_t l = 0; l < f.leaf_count(); ++l)
        if (const auto& hop = f.at(l))
            out += name(l) + " -> " + name(hop->to.index) + format_label(hop->label) + "\n";
    return out;
}

}  // namespace rewire::cli
