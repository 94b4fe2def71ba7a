#include "rewire/cli/syntax.hpp"

#include <cctype>

namespace rewire::cli {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_top_level(std::string_view text, char separator)
{
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        else if (c == separator && depth == 0) {
            out.emplace_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.emplace_back(trim(text.substr(start)));
    return out;
}

namespace {

class SugarParser {
public:
    SugarParser(std::string_view text, const ShapeTable& named) : text_(text), named_(named) {}

    Shape parse()
    {
        Shape s = implication();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return s;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_lollipop()
    {
        skip_space();
        return text_.substr(pos_, 2) == "-o";
    }

    // A -o B -o C = A -o (B -o C)
    Shape implication()
    {
        Shape lhs = product();
        if (!at_lollipop())
            return lhs;
        pos_ += 2;
        Shape rhs = implication();
        return Shape::dual(Shape::tensor(lhs, Shape::dual(rhs)));
    }

    Shape product()
    {
        Shape acc = postfix();
        for (;;) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                acc = Shape::tensor(acc, postfix());
            } else {
                return acc;
            }
        }
    }

    Shape postfix()
    {
        Shape s = primary();
        for (;;) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '\'') {
                ++pos_;
                s = Shape::dual(s);
            } else {
                return s;
            }
        }
    }

    Shape primary()
    {
        skip_space();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of shape", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            const std::size_t open = pos_++;
            Shape s = implication();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("unclosed '('", open);
            ++pos_;
            return s;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(std::string("expected a shape but found '") + c + "'", pos_);
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string word(text_.substr(start, pos_ - start));
        if (word == "I")
            return Shape::unit();
        if (word == "bot")
            return Shape::dual(Shape::unit());
        if (std::isupper(static_cast<unsigned char>(word[0]))) {
            auto it = named_.find(word);
            if (it == named_.end())
                throw ParseError("unknown shape '" + word + "'", start);
            return it->second;
        }
        return Shape::generator(word);
    }

    std::string_view text_;
    const ShapeTable& named_;
    std::size_t pos_ = 0;
};

}  // namespace

Shape parse_shape_sugar(std::string_view text, const ShapeTable& named, const BaseGraph* base)
{
    Shape s = SugarParser(text, named).parse();
    if (base)
        validate_generators(s, *base);
    return s;
}

Endpoint parse_endpoint(std::string_view text)
{
    text = trim(text);
    if (text.size() < 2 || (text[0] != 's' && text[0] != 't'))
        throw Error("bad endpoint '" + std::string(text) + "', expected s<i> or t<i>");
    std::uint32_t index = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error("bad endpoint '" + std::string(text) + "'");
        index = index * 10 + static_cast<std::uint32_t>(text[i] - '0');
    }
    return text[0] == 's' ? src(index) : tgt(index);
}

EdgeLine parse_edge_line(std::string_view line)
{
    line = trim(line);
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
        throw Error("edge line needs '->': " + std::string(line));
    EdgeLine e;
    e.from = std::string(trim(line.substr(0, arrow)));
    std::string_view rest = trim(line.substr(arrow + 2));
    const auto open = rest.find('[');
    if (open != std::string_view::npos) {
        const auto close = rest.find(']', open);
        if (close == std::string_view::npos || !trim(rest.substr(close + 1)).empty())
            throw Error("malformed label in edge line: " + std::string(line));
        e.label = std::string(trim(rest.substr(open + 1, close - open - 1)));
        rest = trim(rest.substr(0, open));
    }
    e.to = std::string(rest);
    if (e.from.empty() || e.to.empty())
        throw Error("edge line needs two endpoints: " + std::string(line));
    return e;
}

std::optional<PathMorphism> edge_label(const BaseGraph& base, const Leaf& from, const Leaf& to,
                                       const std::optional<std::string>& text)
{
    if (from.is_unit()) {
        if (text)
            throw Error("edges out of unit leaves carry no label");
        return std::nullopt;
    }
    if (to.is_unit())
        throw Error("generator leaf " + from.atom + " linked to a unit leaf");
    if (!text) {
        if (from.atom != to.atom)
            throw Error("edge " + from.atom + " -> " + to.atom + " needs a label");
        return PathMorphism{from.atom, from.atom, {}};
    }
    return parse_path_label(base, *text, from.atom, to.atom);
}

std::string format_label(const std::optional<PathMorphism>& label)
{
    if (!label || label->is_identity())
        return {};
    return " [" + label->to_string() + "]";
}

std::string format_linking(const Linking& f, std::string_view name)
{
    std::string out = "linking " + std::string(name) + " : " + f.source().to_string() + " -> " +
                      f.target().to_string() + "\n";
    for (const auto& [from, hop] : f.fun().edges())
        out += "  " + from.to_string() + " -> " + hop.to.to_string() + format_label(hop.label) + "\n";
    return out;
}

}  // namespace rewire::cli
