#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rewire/cli/diagram.hpp"
#include "rewire/cli/dot.hpp"
#include "rewire/cli/sequent_file.hpp"
#include "rewire/net.hpp"

namespace {

using namespace rewire;
using namespace rewire::cli;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_error = 2;
constexpr int exit_inconclusive = 3;

const Linking& lookup(const Diagram& d, const std::string& name)
{
    auto it = d.morphisms.find(name);
    if (it == d.morphisms.end())
        throw Error("no morphism named '" + name + "'");
    return it->second;
}

std::string slurp(const std::string& file)
{
    std::ifstream in(file);
    if (!in)
        throw Error("cannot open " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Flags {
    std::size_t max_class_size = 1'000'000;
    bool oracle = false;
    bool no_rewire = false;
    std::uint64_t seed = 0;
    std::size_t bound = 20;

    SearchOptions search() const
    {
        SearchOptions s;
        s.max_states = max_class_size;
        s.allow_rewiring = !no_rewire;
        return s;
    }
};

int cmd_check(const std::string& file, const std::vector<std::string>& names, const Flags& flags)
{
    const Diagram d = load_diagram(file);
    const auto& which = names.empty() ? d.order : names;
    bool all_valid = true;
    for (const auto& name : which) {
        const Linking& f = lookup(d, name);
        const auto r = flags.oracle ? check_linking_bruteforce(f, flags.bound) : check_linking(f);
        all_valid &= r.valid;
        std::cout << name << ": " << r.to_string() << "\n";
    }
    return all_valid ? exit_ok : exit_fail;
}

int cmd_compose(const std::string& file, const std::string& f, const std::string& g)
{
    const Diagram d = load_diagram(file);
    std::cout << format_linking(compose(lookup(d, f), lookup(d, g)), f + "_" + g);
    return exit_ok;
}

int cmd_normalize(const std::string& file, const std::string& strategy, const Flags& flags)
{
    const auto sf = parse_sequent_file(slurp(file));
    if (auto r = check_one_sided(sf.linking); !r) {
        std::cout << "input is not a one-sided linking: " << r.to_string() << "\n";
        return exit_fail;
    }
    if (strategy == "turbo") {
        std::cout << format_one_sided(turbo_normalize(sf.linking), &sf.base);
        return exit_ok;
    }
    Strategy s = Strategy::Leftmost;
    if (strategy == "rightmost")
        s = Strategy::Rightmost;
    else if (strategy == "random")
        s = Strategy::Random;
    else if (strategy != "leftmost")
        throw Error("unknown strategy '" + strategy + "'");
    const auto n = normalize_stepwise(sf.linking, s, flags.seed);
    std::cout << "# " << n.steps << " steps\n" << format_one_sided(n.result, &sf.base);
    return exit_ok;
}

int cmd_eq(const std::string& file, const std::string& f, const std::string& g, const Flags& flags)
{
    const Diagram d = load_diagram(file);
    const auto v = equivalent(lookup(d, f), lookup(d, g), flags.search());
    std::cout << to_string(v.outcome) << " (explored " << v.explored << ")\n";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
        std::cout << "  " << i + 1 << ". " << v.witness[i].to_string() << "\n";
    if (v.outcome == Outcome::Inconclusive)
        return exit_inconclusive;
    return v.equal() ? exit_ok : exit_fail;
}

int cmd_eval(const std::string& file, const std::string& term)
{
    const Diagram d = file.empty() ? Diagram{} : load_diagram(file);
    const Linking f = elaborate(parse_term(term, d.shapes, file.empty() ? nullptr : &d.base), d.base, d.morphisms);
    std::cout << format_linking(f, "result");
    std::cout << "# " << check_linking(f).to_string() << "\n";
    return exit_ok;
}

int cmd_diagram(const std::string& file, const Flags& flags)
{
    const Diagram d = load_diagram(file);
    RunOptions options;
    options.search = flags.search();
    options.oracle = flags.oracle;
    options.oracle_bound = flags.bound;
    const auto rep = run_diagram(d, options);
    std::cout << rep.text;
    return rep.exit_code;
}

int cmd_enumerate(const std::string& s, const std::string& t, bool nets, std::size_t max_leaves)
{
    const Shape source = parse_shape_sugar(s);
    const Shape target = parse_shape_sugar(t);
    if (!nets) {
        const auto all = enumerate_linkings(source, target, max_leaves);
        std::cout << "# " << all.size() << " linkings\n";
        for (std::size_t i = 0; i < all.size(); ++i)
            std::cout << format_linking(all[i], "f" + std::to_string(i)) << "\n";
        return exit_ok;
    }
    const auto classes = enumerate_nets(source, target, max_leaves);
    std::size_t total = 0;
    for (const auto& c : classes)
        total += c.size();
    std::cout << "# " << classes.size() << " nets over " << total << " linkings\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::cout << "# net " << i << ": " << classes[i].size() << " linkings\n";
        std::cout << format_linking(classes[i].front(), "n" + std::to_string(i)) << "\n";
    }
    return exit_ok;
}

int cmd_dot(const std::string& file, const std::string& name)
{
    const Diagram d = load_diagram(file);
    std::cout << export_dot(lookup(d, name), name);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Linkings modulo rewiring: check, compose, normalize and compare"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags flags;
    app.add_option("--max-class-size", flags.max_class_size, "State limit for class search")->capture_default_str();
    app.add_flag("--oracle", flags.oracle, "Check validity by enumerating every switching");
    app.add_option("--bound", flags.bound, "Switched tensor limit for --oracle")->capture_default_str();
    app.add_option("--seed", flags.seed, "Seed for the random strategy")->capture_default_str();
    app.add_flag("--no-rewire", flags.no_rewire, "Disable unit rewiring in equality checks (debugging)");

    std::string file;
    std::string a;
    std::string b;
    std::vector<std::string> names;
    std::string strategy = "leftmost";
    bool nets = false;
    std::size_t max_leaves = 12;

    auto* check = app.add_subcommand("check", "Check linkings declared in a diagram file");
    check->add_option("file", file)->required();
    check->add_option("names", names);

    auto* comp = app.add_subcommand("compose", "Compose two declared linkings");
    comp->add_option("file", file)->required();
    comp->add_option("f", a)->required();
    comp->add_option("g", b)->required();

    auto* norm = app.add_subcommand("normalize", "Cut-eliminate a sequent file");
    norm->add_option("file", file)->required();
    norm->add_option("--strategy", strategy, "leftmost, rightmost, random or turbo")->capture_default_str();

    auto* eq = app.add_subcommand("eq", "Decide equality of two declared linkings as nets");
    eq->add_option("file", file)->required();
    eq->add_option("f", a)->required();
    eq->add_option("g", b)->required();

    auto* eval = app.add_subcommand("eval", "Elaborate a morphism term");
    eval->add_option("term", a)->required();
    eval->add_option("--file", file, "Diagram supplying declarations");

    auto* diag = app.add_subcommand("diagram", "Run the goals of a diagram file");
    diag->add_option("file", file)->required();

    auto* enumerate = app.add_subcommand("enumerate", "List every linking between two shapes");
    enumerate->add_option("source", a)->required();
    enumerate->add_option("target", b)->required();
    enumerate->add_flag("--nets", nets, "Group into similarity classes");
    enumerate->add_option("--max-leaves", max_leaves)->capture_default_str();

    auto* dot = app.add_subcommand("dot", "Render a declared linking as Graphviz");
    dot->add_option("file", file)->required();
    dot->add_option("name", a)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    }

    try {
        if (*check)
            return cmd_check(file, names, flags);
        if (*comp)
            return cmd_compose(file, a, b);
        if (*norm)
            return cmd_normalize(file, strategy, flags);
        if (*eq)
            return cmd_eq(file, a, b, flags);
        if (*eval)
            return cmd_eval(file, a);
        if (*diag)
            return cmd_diagram(file, flags);
        if (*enumerate)
            return cmd_enumerate(a, b, nets, max_leaves);
        if (*dot)
            return cmd_dot(file, a);
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_inconclusive;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
