#include "rewire/cli/term.hpp"

#include <cctype>

namespace rewire::cli {

namespace {

struct Signature {
    TermKind kind;
    int shape_args;  // -1: takes terms instead
    int term_args;   // -1: two or more
};

const std::map<std::string, Signature, std::less<>>& constructors()
{
    static const std::map<std::string, Signature, std::less<>> table{
        {"id", {TermKind::Id, 1, 0}},
        {"assoc", {TermKind::Assoc, 3, 0}},
        {"assoc_inv", {TermKind::AssocInv, 3, 0}},
        {"sym", {TermKind::Sym, 2, 0}},
        {"l", {TermKind::UnitL, 1, 0}},
        {"r", {TermKind::UnitR, 1, 0}},
        {"lbar", {TermKind::UnitLInv, 1, 0}},
        {"rbar", {TermKind::UnitRInv, 1, 0}},
        {"curry", {TermKind::Curry, 0, 1}},
        {"uncurry", {TermKind::Uncurry, 0, 1}},
        {"dual", {TermKind::Dual, 0, 1}},
        {"tensor", {TermKind::Tensor, 0, 2}},
        {"seq", {TermKind::Seq, 0, -1}},
        {"gen", {TermKind::Gen, 0, 0}},
    };
    return table;
}

std::string_view unquote(std::string_view s)
{
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

bool is_name(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

std::string describe(const Linking& f) { return f.source().to_string() + " -> " + f.target().to_string(); }

}  // namespace

Term parse_term(std::string_view text, const ShapeTable& shapes, const BaseGraph* base)
{
    text = trim(text);
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
        if (!is_name(text))
            throw Error("bad term '" + std::string(text) + "'");
        return Term{TermKind::Ref, {}, {}, std::string(text)};
    }
    if (text.back() != ')')
        throw Error("term '" + std::string(text) + "' does not end with ')'");
    const std::string head(trim(text.substr(0, open)));
    const auto it = constructors().find(head);
    if (it == constructors().end())
        throw Error("unknown constructor '" + head + "'");
    const Signature sig = it->second;
    const auto inner = text.substr(open + 1, text.size() - open - 2);
    const auto pieces = split_top_level(inner);

    Term t;
    t.kind = sig.kind;
    if (sig.kind == TermKind::Gen) {
        if (pieces.size() != 1 || !is_name(unquote(pieces[0])))
            throw Error("gen takes one arrow name");
        t.name = std::string(unquote(pieces[0]));
        return t;
    }
    if (sig.shape_args > 0) {
        if (pieces.size() != static_cast<std::size_t>(sig.shape_args))
            throw Error(head + " takes " + std::to_string(sig.shape_args) + " shape arguments");
        for (const auto& p : pieces)
            t.shapes.push_back(parse_shape_sugar(unquote(p), shapes, base));
        return t;
    }
    if (sig.term_args > 0 && pieces.size() != static_cast<std::size_t>(sig.term_args))
        throw Error(head + " takes " + std::to_string(sig.term_args) + " morphism arguments");
    if (sig.term_args < 0 && pieces.size() < 2)
        throw Error(head + " takes at least two morphism arguments");
    for (const auto& p : pieces)
        t.args.push_back(parse_term(p, shapes, base));
    return t;
}

Linking elaborate(const Term& t, const BaseGraph& base, const MorphismTable& env)
{
    const auto& s = t.shapes;
    switch (t.kind) {
    case TermKind::Id: return identity(s[0]);
    case TermKind::Assoc: return assoc(s[0], s[1], s[2]);
    case TermKind::AssocInv: return assoc_inv(s[0], s[1], s[2]);
    case TermKind::Sym: return sym(s[0], s[1]);
    case TermKind::UnitL: return unit_l(s[0]);
    case TermKind::UnitR: return unit_r(s[0]);
    case TermKind::UnitLInv: return unit_l_inv(s[0]);
    case TermKind::UnitRInv: return unit_r_inv(s[0]);
    case TermKind::Gen:
        if (!base.has_arrow(t.name))
            throw Error("unknown arrow '" + t.name + "'");
        return gen(base, t.name);
    case TermKind::Ref: {
        auto it = env.find(t.name);
        if (it == env.end())
            throw Error("unknown morphism '" + t.name + "'");
        return it->second;
    }
    case TermKind::Curry: {
        auto f = elaborate(t.args[0], base, env);
        if (f.source().kind() != NodeKind::Tensor || f.target().kind() != NodeKind::Dual)
            throw TypeError("curry needs S*T -> U', got " + describe(f));
        return curry(f);
    }
    case TermKind::Uncurry: {
        auto f = elaborate(t.args[0], base, env);
        if (f.target().kind() != NodeKind::Dual || f.target().arg().kind() != NodeKind::Tensor)
            throw TypeError("uncurry needs S -> (T*U)', got " + describe(f));
        return uncurry(f);
    }
    case TermKind::Dual: return dual_mor(elaborate(t.args[0], base, env));
    case TermKind::Tensor: return tensor_mor(elaborate(t.args[0], base, env), elaborate(t.args[1], base, env));
    case TermKind::Seq: {
        Linking acc = elaborate(t.args[0], base, env);
        for (std::size_t i = 1; i < t.args.size(); ++i) {
            Linking next = elaborate(t.args[i], base, env);
            if (acc.target() != next.source())
                throw TypeError("seq argument " + std::to_string(i) + " expects source " + acc.target().to_string() +
                                " but has " + describe(next));
            acc = compose(acc, next);
        }
        return acc;
    }
    }
    throw Error("unhandled term");
}

}  // namespace rewire::cli
