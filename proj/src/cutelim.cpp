#include "rewire/cutelim.hpp"

#include <algorithm>
#include <random>

namespace rewire {

namespace {

SignedSet forest_leaves(const std::vector<Shape>& trees)
{
    SignedSet out;
    for (const auto& t : trees) {
        auto l = t.leaves();
        out.insert(out.end(), l.begin(), l.end());
    }
    return out;
}

std::vector<Shape> forest(const CutSequent& s)
{
    if (s.sequent.empty())
        throw Error("a sequent needs at least one shape");
    std::vector<Shape> trees = s.sequent;
    for (const auto& c : s.cuts) {
        trees.push_back(c);
        trees.push_back(Shape::dual(c));
    }
    return trees;
}

}  // namespace

OneSidedLinking::OneSidedLinking(CutSequent shapes)
    : shapes_(std::move(shapes)), trees_(forest(shapes_)), fun_({}, forest_leaves(trees_))
{
    offsets_.push_back(0);
    for (const auto& t : trees_)
        offsets_.push_back(offsets_.back() + static_cast<std::uint32_t>(t.leaf_count()));
}

OneSidedLinking::OneSidedLinking(CutSequent shapes, PartialLeafFun fun) : OneSidedLinking(std::move(shapes))
{
    if (fun.source() != fun_.source() || fun.target() != fun_.target())
        throw Error("leaf function does not match the sequent forest");
    fun_ = std::move(fun);
}

std::size_t OneSidedLinking::tree_of(std::uint32_t leaf) const
{
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), leaf);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

void OneSidedLinking::set(std::uint32_t from, std::uint32_t to, std::optional<PathMorphism> label)
{
    fun_.set(tgt(from), {tgt(to), std::move(label)});
}

std::string OneSidedLinking::edge_key() const { return rewire::edge_key(fun_); }

SwitchingGraph switching_graph(const OneSidedLinking& f)
{
    SwitchingGraph g;
    std::vector<std::uint32_t> base;
    for (std::size_t t = 0; t < f.tree_count(); ++t)
        base.push_back(g.add_tree(f.tree(t), Sign::Negative));
    const std::size_t n = f.shapes().sequent.size();
    for (std::size_t k = 0; k < f.shapes().cuts.size(); ++k) {
        const auto a = n + 2 * k;
        g.fixed.emplace_back(base[a] + f.tree(a).root(), base[a + 1] + f.tree(a + 1).root());
    }
    for (std::uint32_t l = 0; l < f.leaf_count(); ++l) {
        const auto& hop = f.at(l);
        if (!hop)
            continue;
        auto vertex = [&](std::uint32_t leaf) {
            const auto t = f.tree_of(leaf);
            return base[t] + f.tree(t).leaf_node(leaf - f.leaf_offset(t));
        };
        g.fixed.emplace_back(vertex(l), vertex(hop->to.index));
    }
    return g;
}

SwitchingReport check_one_sided(const OneSidedLinking& f)
{
    auto r = check_matching(f.fun());
    if (!r)
        return r;
    auto v = contract(switching_graph(f));
    if (v.all_trees)
        return r;
    r.valid = false;
    r.condition = Condition::Switching;
    r.switching = std::move(v.witness);
    r.detail = std::move(v.reason);
    return r;
}

OneSidedLinking two_to_one(const Linking& f)
{
    OneSidedLinking out(CutSequent{{Shape::dual(f.source()), f.target()}, {}});
    const auto ns = static_cast<std::uint32_t>(f.source().leaf_count());
    auto move = [&](Endpoint e) { return e.side == Side::Source ? e.index : ns + e.index; };
    for (const auto& [from, hop] : f.fun().edges())
        out.set(move(from), move(hop.to), hop.label);
    return out;
}

Linking one_to_two(const OneSidedLinking& f)
{
    const auto& s = f.shapes();
    if (!s.cuts.empty() || s.sequent.size() != 2 || s.sequent[0].kind() != NodeKind::Dual)
        throw Error("one_to_two needs a cut-free sequent |- S', T");
    const Shape source = s.sequent[0].arg();
    const auto ns = static_cast<std::uint32_t>(source.leaf_count());
    Linking out(source, s.sequent[1]);
    auto move = [&](std::uint32_t l) { return l < ns ? src(l) : tgt(l - ns); };
    for (std::uint32_t l = 0; l < f.leaf_count(); ++l)
        if (const auto& hop = f.at(l))
            out.set(move(l), move(hop->to.index), hop->label);
    return out;
}

OneSidedLinking eliminate_cut(const OneSidedLinking& f, std::size_t index)
{
    const auto& shapes = f.shapes();
    if (index >= shapes.cuts.size())
        throw Error("no cut " + std::to_string(index) + " to eliminate");
    const std::size_t n = shapes.sequent.size();
    const Shape& cut = shapes.cuts[index];
    const std::size_t s_tree = n + 2 * index;
    const std::uint32_t s_off = f.leaf_offset(s_tree);
    const std::uint32_t d_off = f.leaf_offset(s_tree + 1);
    const auto m = static_cast<std::uint32_t>(cut.leaf_count());

    CutSequent next{shapes.sequent, {}};
    constexpr std::uint32_t gone = ~0u;
    std::vector<std::uint32_t> move(f.leaf_count(), gone);

    // Leaves outside the reduced pair keep their relative order; the pair's
    // replacement trees occupy the same slot in the forest.
    std::uint32_t cursor = 0;
    for (std::uint32_t l = 0; l < s_off; ++l)
        move[l] = cursor++;

    switch (cut.kind()) {
    case NodeKind::Unit:
    case NodeKind::Generator:
        for (std::size_t k = 0; k < shapes.cuts.size(); ++k)
            if (k != index)
                next.cuts.push_back(shapes.cuts[k]);
        break;
    case NodeKind::Tensor: {
        const Shape t = cut.left();
        const Shape u = cut.right();
        const auto nt = static_cast<std::uint32_t>(t.leaf_count());
        for (std::size_t k = 0; k < shapes.cuts.size(); ++k) {
            if (k == index) {
                next.cuts.push_back(t);
                next.cuts.push_back(u);
            } else {
                next.cuts.push_back(shapes.cuts[k]);
            }
        }
        // new order: T, T', U, U'
        for (std::uint32_t i = 0; i < nt; ++i) {
            move[s_off + i] = cursor + i;
            move[d_off + i] = cursor + nt + i;
        }
        cursor += 2 * nt;
        for (std::uint32_t i = nt; i < m; ++i) {
            move[s_off + i] = cursor + (i - nt);
            move[d_off + i] = cursor + (m - nt) + (i - nt);
        }
        cursor += 2 * (m - nt);
        break;
    }
    case NodeKind::Dual:
        for (std::size_t k = 0; k < shapes.cuts.size(); ++k)
            next.cuts.push_back(k == index ? cut.arg() : shapes.cuts[k]);
        // the old partner side carries T's signs, so it becomes the new S
        for (std::uint32_t i = 0; i < m; ++i) {
            move[d_off + i] = cursor + i;
            move[s_off + i] = cursor + m + i;
        }
        cursor += 2 * m;
        break;
    }
    for (std::uint32_t l = d_off + m; l < f.leaf_count(); ++l)
        move[l] = cursor++;

    OneSidedLinking out(std::move(next));
    if (cut.is_atom()) {
        // s_off is the positive leaf, d_off its negative partner.
        const auto& exit = f.at(d_off);
        if (!exit)
            throw Error("atomic cut partner has no outgoing edge");
        if (exit->to.index == s_off)
            throw InternalFault("atomic cut linked to itself");
        for (std::uint32_t l = 0; l < f.leaf_count(); ++l) {
            const auto& hop = f.at(l);
            if (!hop || l == d_off)
                continue;
            if (hop->to.index != s_off) {
                out.set(move[l], move[hop->to.index], hop->label);
                continue;
            }
            std::optional<PathMorphism> label;
            if (hop->label && exit->label)
                label = compose_path(*hop->label, *exit->label);
            out.set(move[l], move[exit->to.index], std::move(label));
        }
    } else {
        for (std::uint32_t l = 0; l < f.leaf_count(); ++l)
            if (const auto& hop = f.at(l))
                out.set(move[l], move[hop->to.index], hop->label);
    }
    return out;
}

std::size_t cut_size(const CutSequent& s)
{
    std::size_t n = 0;
    for (const auto& c : s.cuts)
        n += c.node_count();
    return n;
}

Normalization normalize_stepwise(const OneSidedLinking& f, Strategy strategy, std::uint64_t seed)
{
    Normalization r{f, 0};
    std::mt19937_64 rng(seed);
    while (!r.result.shapes().cuts.empty()) {
        const std::size_t k = r.result.shapes().cuts.size();
        std::size_t pick = 0;
        if (strategy == Strategy::Rightmost)
            pick = k - 1;
        else if (strategy == Strategy::Random)
            pick = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
        r.result = eliminate_cut(r.result, pick);
        ++r.steps;
    }
    return r;
}

OneSidedLinking turbo_normalize(const OneSidedLinking& f)
{
    const auto& shapes = f.shapes();
    const std::size_t n = shapes.sequent.size();
    const std::uint32_t boundary = f.leaf_offset(n);
    OneSidedLinking out(CutSequent{shapes.sequent, {}});

    // Partner of a cut leaf: same position in the other tree of its pair.
    auto partner = [&](std::uint32_t leaf) {
        const auto t = f.tree_of(leaf);
        const auto i = leaf - f.leaf_offset(t);
        return (t - n) % 2 == 0 ? f.global(t + 1, i) : f.global(t - 1, i);
    };

    const std::uint32_t cut_leaves = f.leaf_count() - boundary;
    for (std::uint32_t l = 0; l < boundary; ++l) {
        const auto* hop = &f.at(l);
        if (!*hop)
            continue;
        std::optional<PathMorphism> label = (*hop)->label;
        bool labelled = label.has_value();
        std::uint32_t at = (*hop)->to.index;
        std::uint32_t hops = 0;
        while (at >= boundary) {
            if (++hops > cut_leaves)
                throw InternalFault("cycle through cut partners");
            hop = &f.at(partner(at));
            if (!*hop)
                throw Error("cut leaf " + std::to_string(partner(at)) + " has no outgoing edge");
            if (labelled && (*hop)->label)
                label = compose_path(*label, *(*hop)->label);
            else {
                labelled = false;
                label.reset();
            }
            at = (*hop)->to.index;
        }
        out.set(l, at, std::move(label));
    }
    return out;
}

OneSidedLinking fold_chain(const std::vector<Linking>& chain)
{
    if (chain.empty())
        throw Error("cannot fold an empty chain");
    for (std::size_t k = 1; k < chain.size(); ++k)
        if (chain[k - 1].target() != chain[k].source())
            throw Error("chain breaks between links " + std::to_string(k - 1) + " and " + std::to_string(k));
    CutSequent shapes{{Shape::dual(chain.front().source()), chain.back().target()}, {}};
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        shapes.cuts.push_back(chain[k].target());
    OneSidedLinking out(std::move(shapes));
    const std::size_t last = chain.size() - 1;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        // link k reads its source from sequent tree 0 or cut k-1's partner,
        // and writes its target to sequent tree 1 or cut k's S
        const std::size_t src_tree = k == 0 ? 0 : 2 + 2 * (k - 1) + 1;
        const std::size_t tgt_tree = k == last ? 1 : 2 + 2 * k;
        auto move = [&](Endpoint e) {
            return e.side == Side::Source ? out.global(src_tree, e.index) : out.global(tgt_tree, e.index);
        };
        for (const auto& [from, hop] : chain[k].fun().edges())
            out.set(move(from), move(hop.to), hop.label);
    }
    return out;
}

}  // namespace rewire
