#include "rewire/cli/diagram.hpp"

#include <fstream>
#include <sstream>

namespace rewire::cli {

namespace {

constexpr int max_include_depth = 16;

std::string strip_comment(const std::string& line)
{
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool starts_with_word(std::string_view line, std::string_view word)
{
    return line.substr(0, word.size()) == word &&
           (line.size() == word.size() || std::isspace(static_cast<unsigned char>(line[word.size()])));
}

bool is_edge_line(std::string_view line)
{
    return line.size() >= 2 && (line[0] == 's' || line[0] == 't') &&
           std::isdigit(static_cast<unsigned char>(line[1])) && line.find("->") != std::string_view::npos;
}

std::string read_file(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw Error("cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Parser {
public:
    Parser(Diagram& d, const std::string& text, std::filesystem::path origin, int depth)
        : d_(d), origin_(std::move(origin)), depth_(depth)
    {
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
            lines_.push_back(std::string(trim(strip_comment(line))));
    }

    void run()
    {
        while (at_ < lines_.size()) {
            const std::string line = lines_[at_++];
            if (line.empty())
                continue;
            try {
                statement(line);
            } catch (const DiagramError&) {
                throw;
            } catch (const Error& e) {
                throw DiagramError(origin_.string(), static_cast<int>(at_), e.what());
            }
        }
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw DiagramError(origin_.string(), static_cast<int>(at_), what);
    }

    void statement(const std::string& line)
    {
        std::string_view v = line;
        if (starts_with_word(v, "object")) {
            std::istringstream words(line.substr(6));
            std::string name;
            int count = 0;
            while (words >> name) {
                d_.base.add_object(name);
                ++count;
            }
            if (count == 0)
                fail("object needs a name");
        } else if (starts_with_word(v, "arrow")) {
            const auto [name, lhs, rhs] = signature(v.substr(5));
            d_.base.add_arrow(name, std::string(trim(lhs)), std::string(trim(rhs)));
        } else if (starts_with_word(v, "shape")) {
            const auto [name, body] = definition(v.substr(5));
            if (name == "I" || !std::isupper(static_cast<unsigned char>(name[0])))
                fail("shape names start with a capital letter other than I");
            if (d_.shapes.contains(name))
                fail("shape '" + name + "' already defined");
            d_.shapes.emplace(name, parse_shape_sugar(body, d_.shapes, &d_.base));
        } else if (starts_with_word(v, "term")) {
            const auto [name, body] = definition(v.substr(4));
            declare(name, elaborate(parse_term(body, d_.shapes, &d_.base), d_.base, d_.morphisms));
        } else if (starts_with_word(v, "morphism") || starts_with_word(v, "linking")) {
            literal(v);
        } else if (starts_with_word(v, "expect")) {
            expect(v.substr(6));
        } else if (starts_with_word(v, "include")) {
            include(trim(v.substr(7)));
        } else {
            fail("unrecognised line: " + line);
        }
    }

    struct Signature {
        std::string name;
        std::string lhs;
        std::string rhs;
    };

    // NAME : LHS -> RHS
    Signature signature(std::string_view text) const
    {
        const auto colon = text.find(':');
        const auto arrow = text.find("->");
        if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon)
            fail("expected NAME : SOURCE -> TARGET");
        Signature s{std::string(trim(text.substr(0, colon))),
                    std::string(trim(text.substr(colon + 1, arrow - colon - 1))),
                    std::string(trim(text.substr(arrow + 2)))};
        if (s.name.empty() || s.lhs.empty() || s.rhs.empty())
            fail("expected NAME : SOURCE -> TARGET");
        return s;
    }

    std::pair<std::string, std::string> definition(std::string_view text) const
    {
        const auto eq = text.find('=');
        if (eq == std::string_view::npos)
            fail("expected NAME = ...");
        std::string name(trim(text.substr(0, eq)));
        std::string body(trim(text.substr(eq + 1)));
        if (name.empty() || body.empty())
            fail("expected NAME = ...");
        return {name, body};
    }

    void declare(const std::string& name, Linking f)
    {
        if (d_.morphisms.contains(name))
            fail("morphism '" + name + "' already defined");
        d_.morphisms.emplace(name, std::move(f));
        d_.order.push_back(name);
    }

    void literal(std::string_view header)
    {
        const bool braced = starts_with_word(header, "morphism");
        std::string_view rest = header.substr(braced ? 8 : 7);
        bool closed = false;
        if (braced) {
            rest = trim(rest);
            if (rest.empty() || rest.back() != '{')
                fail("morphism header must end with '{'");
            rest.remove_suffix(1);
        }
        const auto sig = signature(rest);
        Linking f(parse_shape_sugar(sig.lhs, d_.shapes, &d_.base), parse_shape_sugar(sig.rhs, d_.shapes, &d_.base));
        while (at_ < lines_.size()) {
            const std::string& line = lines_[at_];
            if (braced && line == "}") {
                ++at_;
                closed = true;
                break;
            }
            if (line.empty()) {
                ++at_;
                if (braced)
                    continue;
                break;
            }
            if (!is_edge_line(line)) {
                if (braced)
                    fail("expected an edge line or '}'");
                break;
            }
            ++at_;
            edge(f, line);
        }
        if (braced && !closed)
            fail("missing '}'");
        declare(sig.name, std::move(f));
    }

    void edge(Linking& f, const std::string& line)
    {
        const auto e = parse_edge_line(line);
        const Endpoint from = parse_endpoint(e.from);
        const Endpoint to = parse_endpoint(e.to);
        if (!f.fun().valid(from) || !f.fun().valid(to))
            fail("endpoint out of range in: " + line);
        if (f.at(from))
            fail(from.to_string() + " already has an edge");
        f.set(from, to, edge_label(d_.base, f.fun().leaf(from), f.fun().leaf(to), e.label));
    }

    const Linking& morphism(const std::string& name) const
    {
        auto it = d_.morphisms.find(name);
        if (it == d_.morphisms.end())
            fail("unknown morphism '" + name + "'");
        return it->second;
    }

    void expect(std::string_view text)
    {
        std::istringstream words{std::string(text)};
        std::string kind;
        std::vector<std::string> names;
        words >> kind;
        for (std::string w; words >> w;)
            names.push_back(w);
        Goal g;
        g.text = "expect " + std::string(trim(text));
        const bool binary = kind == "equal" || kind == "distinct" || kind == "identical";
        if (kind == "equal")
            g.kind = GoalKind::Equal;
        else if (kind == "distinct")
            g.kind = GoalKind::Distinct;
        else if (kind == "identical")
            g.kind = GoalKind::Identical;
        else if (kind == "valid")
            g.kind = GoalKind::Valid;
        else if (kind == "invalid")
            g.kind = GoalKind::Invalid;
        else
            fail("unknown goal '" + kind + "'");
        if (names.size() != (binary ? 2u : 1u))
            fail("goal '" + kind + "' takes " + (binary ? "two names" : "one name"));
        g.lhs = names[0];
        const Linking& f = morphism(g.lhs);
        if (binary) {
            g.rhs = names[1];
            const Linking& h = morphism(g.rhs);
            if (f.source() != h.source() || f.target() != h.target())
                fail("goal compares " + f.source().to_string() + " -> " + f.target().to_string() + " with " +
                     h.source().to_string() + " -> " + h.target().to_string());
        }
        d_.goals.push_back(std::move(g));
    }

    void include(std::string_view quoted)
    {
        if (quoted.size() < 2 || quoted.front() != '"' || quoted.back() != '"')
            fail("include needs a quoted file name");
        if (depth_ >= max_include_depth)
            fail("includes nested too deeply");
        const auto file = origin_.parent_path() / std::string(quoted.substr(1, quoted.size() - 2));
        Parser(d_, read_file(file), file, depth_ + 1).run();
    }

    Diagram& d_;
    std::filesystem::path origin_;
    int depth_;
    std::vector<std::string> lines_;
    std::size_t at_ = 0;
};

std::string witness_text(const std::vector<RewireStep>& steps)
{
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i)
        out += "\n    " + std::to_string(i + 1) + ". " + steps[i].to_string();
    return out;
}

GoalResult run_goal(const Diagram& d, const Goal& g, const RunOptions& options)
{
    GoalResult r;
    const Linking& f = d.morphisms.at(g.lhs);
    auto pass_if = [&](bool ok) { r.status = ok ? GoalStatus::Pass : GoalStatus::Fail; };
    try {
        switch (g.kind) {
        case GoalKind::Valid:
        case GoalKind::Invalid: {
            const auto rep = options.oracle ? check_linking_bruteforce(f, options.oracle_bound) : check_linking(f);
            pass_if(rep.valid == (g.kind == GoalKind::Valid));
            r.detail = rep.to_string();
            break;
        }
        case GoalKind::Identical:
            pass_if(f == d.morphisms.at(g.rhs));
            break;
        case GoalKind::Equal:
        case GoalKind::Distinct: {
            auto v = equivalent(f, d.morphisms.at(g.rhs), options.search);
            r.detail = to_string(v.outcome) + ", explored " + std::to_string(v.explored);
            if (v.outcome == Outcome::Inconclusive)
                r.status = GoalStatus::Inconclusive;
            else
                pass_if(v.equal() == (g.kind == GoalKind::Equal));
            if (v.equal())
                r.detail += ", witness " + std::to_string(v.witness.size()) + " steps" + witness_text(v.witness);
            r.verdict = std::move(v);
            break;
        }
        }
    } catch (const Error& e) {
        r.status = GoalStatus::Fail;
        r.detail = e.what();
    }
    return r;
}

}  // namespace

void extend_diagram(Diagram& d, const std::string& text, const std::filesystem::path& origin)
{
    Parser(d, text, origin, 0).run();
}

Diagram parse_diagram(const std::string& text, const std::filesystem::path& origin)
{
    Diagram d;
    extend_diagram(d, text, origin);
    return d;
}

Diagram load_diagram(const std::filesystem::path& file) { return parse_diagram(read_file(file), file); }

DiagramReport run_diagram(const Diagram& d, const RunOptions& options)
{
    DiagramReport rep;
    rep.results.resize(d.goals.size());
    const auto n = static_cast<std::int64_t>(d.goals.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i)
        rep.results[i] = run_goal(d, d.goals[i], options);

    bool failed = false;
    bool inconclusive = false;
    for (std::size_t i = 0; i < d.goals.size(); ++i) {
        const auto& r = rep.results[i];
        const char* tag = r.status == GoalStatus::Pass ? "PASS" : r.status == GoalStatus::Fail ? "FAIL" : "INCONCLUSIVE";
        failed |= r.status == GoalStatus::Fail;
        inconclusive |= r.status == GoalStatus::Inconclusive;
        rep.text += std::string(tag) + "  " + d.goals[i].text;
        if (!r.detail.empty())
            rep.text += "  (" + r.detail + ")";
        rep.text += "\n";
    }
    rep.exit_code = failed ? 1 : inconclusive ? 3 : 0;
    return rep;
}

}  // namespace rewire::cli
