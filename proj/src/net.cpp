#include "rewire/net.hpp"

#include <algorithm>
#include <unordered_set>

namespace rewire {

std::string RewireStep::to_string() const
{
    return "rewire " + unit_leaf.to_string() + " from " + old_target.to_string() + " to " + new_target.to_string();
}

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Equal: return "equal";
    case Outcome::Distinct: return "distinct";
    case Outcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

PartialLeafFun apply_step(const PartialLeafFun& f, const RewireStep& step)
{
    if (!f.is_domain(step.unit_leaf) || !f.leaf(step.unit_leaf).is_unit())
        throw Error(step.unit_leaf.to_string() + " is not a unit leaf with an outgoing edge");
    const auto& hop = f.at(step.unit_leaf);
    if (!hop || hop->to != step.old_target)
        throw Error("edge out of " + step.unit_leaf.to_string() + " does not end at " + step.old_target.to_string());
    PartialLeafFun out = f;
    out.set(step.unit_leaf, {step.new_target, std::nullopt});
    return out;
}

Linking apply_step(const Linking& f, const RewireStep& step)
{
    return Linking(f.source(), f.target(), apply_step(f.fun(), step));
}

std::vector<RewireStep> similar_steps(const PartialLeafFun& f, const Validity& valid)
{
    std::vector<RewireStep> out;
    PartialLeafFun probe = f;
    for (std::size_t s = 0; s < f.slot_count(); ++s) {
        const Endpoint from = f.endpoint(s);
        const auto& hop = f.at_slot(s);
        if (!hop || !f.leaf(from).is_unit())
            continue;
        for (std::size_t c = 0; c < f.slot_count(); ++c) {
            const Endpoint to = f.endpoint(c);
            if (to == hop->to || !f.is_codomain(to))
                continue;
            probe.set(from, {to, std::nullopt});
            if (valid(probe))
                out.push_back({from, hop->to, to});
        }
        probe.set(from, *hop);
    }
    return out;
}

namespace {

Validity linking_validity(const Linking& shape_of)
{
    return [source = shape_of.source(), target = shape_of.target()](const PartialLeafFun& fun) {
        return check_linking(Linking(source, target, fun)).valid;
    };
}

Validity one_sided_validity(const OneSidedLinking& shape_of)
{
    return [shapes = shape_of.shapes()](const PartialLeafFun& fun) {
        return check_one_sided(OneSidedLinking(shapes, fun)).valid;
    };
}

struct SearchNode {
    PartialLeafFun fun;
    std::int64_t parent;
    RewireStep step;
};

struct Expansion {
    RewireStep step;
    PartialLeafFun fun;
    std::string key;
};

std::vector<Expansion> expand(const PartialLeafFun& f, const Validity& valid)
{
    std::vector<Expansion> out;
    for (const auto& step : similar_steps(f, valid)) {
        auto next = apply_step(f, step);
        auto key = edge_key(next);
        out.push_back({step, std::move(next), std::move(key)});
    }
    return out;
}

// Level-synchronous BFS. Frontier expansion may run in parallel; merging is
// serial and in frontier order, so both executions visit identical states.
// Returns the index of the node whose key is `stop`, or -1. Sets `limit_hit`
// when the state bound stops the search first.
std::int64_t bfs(std::vector<SearchNode>& nodes, const std::string* stop, const Validity& valid,
                 const SearchOptions& options, bool& limit_hit)
{
    limit_hit = false;
    std::unordered_set<std::string> seen{edge_key(nodes.front().fun)};
    if (stop && *seen.begin() == *stop)
        return 0;
    if (!options.allow_rewiring)
        return -1;
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::vector<Expansion>> grown(frontier.size());
        const auto n = static_cast<std::int64_t>(frontier.size());
        if (options.exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (std::int64_t i = 0; i < n; ++i)
                grown[i] = expand(nodes[frontier[i]].fun, valid);
        } else {
            for (std::int64_t i = 0; i < n; ++i)
                grown[i] = expand(nodes[frontier[i]].fun, valid);
        }
        std::vector<std::size_t> next;
        for (std::int64_t i = 0; i < n; ++i) {
            for (auto& e : grown[i]) {
                if (seen.contains(e.key))
                    continue;
                if (nodes.size() >= options.max_states) {
                    limit_hit = true;
                    return -1;
                }
                seen.insert(e.key);
                nodes.push_back({std::move(e.fun), static_cast<std::int64_t>(frontier[i]), e.step});
                if (stop && e.key == *stop)
                    return static_cast<std::int64_t>(nodes.size() - 1);
                next.push_back(nodes.size() - 1);
            }
        }
        frontier = std::move(next);
    }
    return -1;
}

}  // namespace

std::vector<RewireStep> similar_steps(const Linking& f) { return similar_steps(f.fun(), linking_validity(f)); }

std::vector<Linking> similar_neighbors(const Linking& f)
{
    std::vector<Linking> out;
    for (const auto& step : similar_steps(f))
        out.push_back(apply_step(f, step));
    return out;
}

EquivalenceVerdict equivalent(const PartialLeafFun& f, const PartialLeafFun& g, const Validity& valid,
                              const SearchOptions& options)
{
    if (f.source() != g.source() || f.target() != g.target())
        throw Error("equivalence needs leaf functions over the same signed sets");
    std::vector<SearchNode> nodes{{f, -1, {}}};
    const std::string stop = edge_key(g);
    bool limit_hit = false;
    const auto hit = bfs(nodes, &stop, valid, options, limit_hit);
    EquivalenceVerdict v;
    v.explored = nodes.size();
    if (hit >= 0) {
        v.outcome = Outcome::Equal;
        for (auto at = hit; nodes[at].parent >= 0; at = nodes[at].parent)
            v.witness.push_back(nodes[at].step);
        std::reverse(v.witness.begin(), v.witness.end());
    } else {
        v.outcome = limit_hit ? Outcome::Inconclusive : Outcome::Distinct;
    }
    return v;
}

EquivalenceVerdict equivalent(const Linking& f, const Linking& g, const SearchOptions& options)
{
    if (f.source() != g.source() || f.target() != g.target())
        throw Error("cannot compare linkings " + f.source().to_string() + " -> " + f.target().to_string() +
                    " and " + g.source().to_string() + " -> " + g.target().to_string());
    if (auto r = check_linking(f); !r)
        throw Error("first linking is invalid: " + r.to_string());
    if (auto r = check_linking(g); !r)
        throw Error("second linking is invalid: " + r.to_string());
    return equivalent(f.fun(), g.fun(), linking_validity(f), options);
}

EquivalenceVerdict equivalent(const OneSidedLinking& f, const OneSidedLinking& g, const SearchOptions& options)
{
    if (!(f.shapes() == g.shapes()))
        throw Error("cannot compare one-sided linkings on different cut sequents");
    if (auto r = check_one_sided(f); !r)
        throw Error("first linking is invalid: " + r.to_string());
    if (auto r = check_one_sided(g); !r)
        throw Error("second linking is invalid: " + r.to_string());
    return equivalent(f.fun(), g.fun(), one_sided_validity(f), options);
}

std::vector<Linking> similarity_class(const Linking& f, std::size_t max_states)
{
    std::vector<SearchNode> nodes{{f.fun(), -1, {}}};
    SearchOptions options;
    options.max_states = max_states;
    bool limit_hit = false;
    bfs(nodes, nullptr, linking_validity(f), options, limit_hit);
    if (limit_hit)
        throw BoundExceeded("similarity class exceeds " + std::to_string(max_states) + " members");
    std::vector<Linking> out;
    out.reserve(nodes.size());
    for (auto& n : nodes)
        out.emplace_back(f.source(), f.target(), std::move(n.fun));
    return out;
}

std::vector<Linking> enumerate_linkings(const Shape& source, const Shape& target, std::size_t max_leaves)
{
    const std::size_t total = source.leaf_count() + target.leaf_count();
    if (total > max_leaves)
        throw BoundExceeded(std::to_string(total) + " leaves exceed the enumeration limit of " +
                            std::to_string(max_leaves));
    Linking blank(source, target);
    const auto& fun = blank.fun();
    std::vector<Endpoint> domain;
    std::vector<Endpoint> codomain;
    for (std::size_t s = 0; s < fun.slot_count(); ++s) {
        const Endpoint e = fun.endpoint(s);
        (fun.is_domain(e) ? domain : codomain).push_back(e);
    }
    std::vector<Linking> out;
    std::vector<std::uint8_t> used(fun.slot_count(), 0);
    Linking work = blank;

    std::function<void(std::size_t)> place = [&](std::size_t k) {
        if (k == domain.size()) {
            if (check_linking(work))
                out.push_back(work);
            return;
        }
        const Endpoint from = domain[k];
        const Leaf& l = fun.leaf(from);
        for (const Endpoint to : codomain) {
            if (l.is_unit()) {
                work.set(from, to);
                place(k + 1);
                continue;
            }
            const auto s = fun.slot(to);
            if (used[s] || fun.leaf(to).atom != l.atom)
                continue;
            used[s] = 1;
            work.set(from, to, PathMorphism{l.atom, l.atom, {}});
            place(k + 1);
            used[s] = 0;
        }
        work.erase(from);
    };
    place(0);
    return out;
}

std::vector<std::vector<Linking>> enumerate_nets(const Shape& source, const Shape& target, std::size_t max_leaves)
{
    std::vector<std::vector<Linking>> classes;
    std::unordered_set<std::string> assigned;
    for (const auto& f : enumerate_linkings(source, target, max_leaves)) {
        if (assigned.contains(f.edge_key()))
            continue;
        auto cls = similarity_class(f);
        for (const auto& g : cls)
            assigned.insert(g.edge_key());
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace rewire
