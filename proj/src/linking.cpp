#include "rewire/linking.hpp"

namespace rewire {

Linking::Linking(Shape source, Shape target)
    : source_(std::move(source)), target_(std::move(target)), fun_(source_.leaves(), target_.leaves())
{
}

Linking::Linking(Shape source, Shape target, PartialLeafFun fun)
    : source_(std::move(source)), target_(std::move(target)), fun_(std::move(fun))
{
    if (fun_.source() != source_.leaves() || fun_.target() != target_.leaves())
        throw Error("leaf function does not match shapes " + source_.to_string() + " -> " + target_.to_string());
}

void Linking::set(Endpoint from, Endpoint to, std::optional<PathMorphism> label)
{
    fun_.set(from, {to, std::move(label)});
}

std::string Linking::edge_key() const { return rewire::edge_key(fun_); }

std::string Linking::key() const
{
    return source_.to_string() + "|" + target_.to_string() + "|" + edge_key();
}

SwitchingGraph switching_graph(const Linking& f)
{
    SwitchingGraph g;
    const auto so = g.add_tree(f.source(), Sign::Positive);
    const auto to = g.add_tree(f.target(), Sign::Negative);
    auto vertex = [&](Endpoint e) {
        return e.side == Side::Source ? so + f.source().leaf_node(e.index) : to + f.target().leaf_node(e.index);
    };
    for (std::size_t s = 0; s < f.fun().slot_count(); ++s)
        if (const auto& hop = f.fun().at_slot(s))
            g.fixed.emplace_back(vertex(f.fun().endpoint(s)), vertex(hop->to));
    return g;
}

std::size_t switched_tensor_count(const Linking& f)
{
    std::size_t n = 0;
    auto count = [&](const Shape& s, Sign switched) {
        const auto signs = s.node_signs();
        for (std::uint32_t i = 0; i < s.node_count(); ++i)
            n += s.node(i).kind == NodeKind::Tensor && signs[i] == switched;
    };
    count(f.source(), Sign::Positive);
    count(f.target(), Sign::Negative);
    return n;
}

namespace {

SwitchingReport switching_failure(std::optional<SwitchingChoice> witness, std::string detail)
{
    SwitchingReport r;
    r.valid = false;
    r.condition = Condition::Switching;
    r.switching = std::move(witness);
    r.detail = std::move(detail);
    return r;
}

}  // namespace

SwitchingReport check_linking(const Linking& f)
{
    auto r = check_matching(f.fun());
    if (!r)
        return r;
    auto v = contract(switching_graph(f));
    if (v.all_trees)
        return r;
    return switching_failure(std::move(v.witness), std::move(v.reason));
}

SwitchingReport check_linking_bruteforce(const Linking& f, std::size_t bound, Execution exec)
{
    auto r = check_matching(f.fun());
    if (!r)
        return r;
    auto v = enumerate_switchings(switching_graph(f), bound, exec);
    if (v.all_trees)
        return r;
    return switching_failure(std::move(v.witness), "switching is not a tree");
}

std::vector<SwitchingReport> check_all(std::span<const Linking> fs, Execution exec)
{
    std::vector<SwitchingReport> out(fs.size());
    const auto n = static_cast<std::int64_t>(fs.size());
    if (exec == Execution::Serial) {
        for (std::int64_t i = 0; i < n; ++i)
            out[i] = check_linking(fs[i]);
    } else {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < n; ++i)
            out[i] = check_linking(fs[i]);
    }
    return out;
}

Linking compose(const Linking& f, const Linking& g)
{
    if (f.target() != g.source())
        throw Error("cannot compose: target " + f.target().to_string() + " differs from source " +
                    g.source().to_string());
    if (auto r = check_linking(f); !r)
        throw Error("left operand is not a linking: " + r.to_string());
    if (auto r = check_linking(g); !r)
        throw Error("right operand is not a linking: " + r.to_string());
    Linking h(f.source(), g.target(), compose_plf(f.fun(), g.fun()));
    if (auto r = check_linking(h); !r)
        throw InternalFault("composite of two linkings failed the criterion: " + r.to_string());
    return h;
}

bool compatibility_check(const Linking& f, const Linking& g)
{
    if (f.target() != g.source())
        throw Error("compatibility check needs composable linkings");
    // Vertices: X leaves, then Y leaves, then Z leaves. Out-degree is at most
    // one, so the union is a functional graph.
    const std::size_t nx = f.source().leaf_count();
    const std::size_t ny = f.target().leaf_count();
    const std::size_t nz = g.target().leaf_count();
    constexpr std::uint32_t none = ~0u;
    std::vector<std::uint32_t> next(nx + ny + nz, none);
    for (const auto& [from, hop] : f.fun().edges()) {
        auto v = [&](Endpoint e) { return e.side == Side::Source ? e.index : nx + e.index; };
        next[v(from)] = static_cast<std::uint32_t>(v(hop.to));
    }
    for (const auto& [from, hop] : g.fun().edges()) {
        auto v = [&](Endpoint e) { return e.side == Side::Source ? nx + e.index : nx + ny + e.index; };
        next[v(from)] = static_cast<std::uint32_t>(v(hop.to));
    }
    // 0 unvisited, 1 on the current walk, 2 finished
    std::vector<std::uint8_t> state(next.size(), 0);
    std::vector<std::uint32_t> walk;
    for (std::uint32_t start = 0; start < next.size(); ++start) {
        if (state[start])
            continue;
        walk.clear();
        std::uint32_t at = start;
        while (at != none && state[at] == 0) {
            state[at] = 1;
            walk.push_back(at);
            at = next[at];
        }
        if (at != none && state[at] == 1)
            return false;
        for (auto w : walk)
            state[w] = 2;
    }
    return true;
}

namespace {

std::optional<PathMorphism> id_label(const Leaf& l)
{
    if (l.is_unit())
        return std::nullopt;
    return PathMorphism{l.atom, l.atom, {}};
}

// Links source leaf i with target leaf i + shift for i in [from, to).
void link_block(Linking& f, std::uint32_t from, std::uint32_t to, std::int64_t shift)
{
    const auto& sl = f.fun().source();
    const auto& tl = f.fun().target();
    for (std::uint32_t i = from; i < to; ++i) {
        const auto j = static_cast<std::uint32_t>(i + shift);
        if (sl[i] != tl[j])
            throw Error("leaf " + std::to_string(i) + " of " + f.source().to_string() + " does not match leaf " +
                        std::to_string(j) + " of " + f.target().to_string());
        if (sl[i].sign == Sign::Positive)
            f.set(src(i), tgt(j), id_label(sl[i]));
        else
            f.set(tgt(j), src(i), id_label(sl[i]));
    }
}

}  // namespace

Linking pairing(const Shape& source, const Shape& target)
{
    if (source.leaf_count() != target.leaf_count())
        throw Error("cannot pair " + source.to_string() + " with " + target.to_string() +
                    ": leaf counts differ");
    Linking f(source, target);
    link_block(f, 0, static_cast<std::uint32_t>(source.leaf_count()), 0);
    return f;
}

Linking identity(const Shape& s) { return pairing(s, s); }

Linking assoc(const Shape& s, const Shape& t, const Shape& u)
{
    return pairing(Shape::tensor(Shape::tensor(s, t), u), Shape::tensor(s, Shape::tensor(t, u)));
}

Linking assoc_inv(const Shape& s, const Shape& t, const Shape& u)
{
    return pairing(Shape::tensor(s, Shape::tensor(t, u)), Shape::tensor(Shape::tensor(s, t), u));
}

Linking sym(const Shape& s, const Shape& t)
{
    Linking f(Shape::tensor(s, t), Shape::tensor(t, s));
    const auto ns = static_cast<std::uint32_t>(s.leaf_count());
    const auto nt = static_cast<std::uint32_t>(t.leaf_count());
    link_block(f, 0, ns, nt);
    link_block(f, ns, ns + nt, -static_cast<std::int64_t>(ns));
    return f;
}

Linking unit_l(const Shape& s)
{
    Linking f(s, Shape::tensor(Shape::unit(), s));
    link_block(f, 0, static_cast<std::uint32_t>(s.leaf_count()), 1);
    return f;
}

Linking unit_r(const Shape& s)
{
    Linking f(s, Shape::tensor(s, Shape::unit()));
    link_block(f, 0, static_cast<std::uint32_t>(s.leaf_count()), 0);
    return f;
}

namespace {

// The lone positive unit leaf of the source has to land somewhere; the first
// leaf of S is always a legal target, on whichever side carries it
// negatively in the leaf function.
Endpoint first_leaf_sink(const Linking& f, std::uint32_t source_index)
{
    if (f.fun().target()[0].sign == Sign::Positive)
        return tgt(0);
    return src(source_index);
}

}  // namespace

Linking unit_l_inv(const Shape& s)
{
    Linking f(Shape::tensor(Shape::unit(), s), s);
    const auto n = static_cast<std::uint32_t>(s.leaf_count());
    link_block(f, 1, n + 1, -1);
    f.set(src(0), first_leaf_sink(f, 1));
    return f;
}

Linking unit_r_inv(const Shape& s)
{
    Linking f(Shape::tensor(s, Shape::unit()), s);
    const auto n = static_cast<std::uint32_t>(s.leaf_count());
    link_block(f, 0, n, 0);
    f.set(src(n), first_leaf_sink(f, 0));
    return f;
}

Linking remap(const Linking& f, Shape source, Shape target, const std::function<Endpoint(Endpoint)>& move)
{
    Linking out(std::move(source), std::move(target));
    for (const auto& [from, hop] : f.fun().edges())
        out.set(move(from), move(hop.to), hop.label);
    return out;
}

Linking curry(const Linking& f)
{
    if (f.source().kind() != NodeKind::Tensor || f.target().kind() != NodeKind::Dual)
        throw Error("curry needs a linking S*T -> U', got " + f.source().to_string() + " -> " +
                    f.target().to_string());
    const Shape s = f.source().left();
    const Shape t = f.source().right();
    const Shape u = f.target().arg();
    const auto ns = static_cast<std::uint32_t>(s.leaf_count());
    const auto nt = static_cast<std::uint32_t>(t.leaf_count());
    return remap(f, s, Shape::dual(Shape::tensor(t, u)), [&](Endpoint e) {
        if (e.side == Side::Target)
            return tgt(nt + e.index);
        return e.index < ns ? e : tgt(e.index - ns);
    });
}

Linking uncurry(const Linking& f)
{
    if (f.target().kind() != NodeKind::Dual || f.target().arg().kind() != NodeKind::Tensor)
        throw Error("uncurry needs a linking S -> (T*U)', got " + f.source().to_string() + " -> " +
                    f.target().to_string());
    const Shape s = f.source();
    const Shape inner = f.target().arg();
    const Shape t = inner.left();
    const Shape u = inner.right();
    const auto ns = static_cast<std::uint32_t>(s.leaf_count());
    const auto nt = static_cast<std::uint32_t>(t.leaf_count());
    return remap(f, Shape::tensor(s, t), Shape::dual(u), [&](Endpoint e) {
        if (e.side == Side::Source)
            return e;
        return e.index < nt ? src(ns + e.index) : tgt(e.index - nt);
    });
}

Linking dual_mor(const Linking& f)
{
    return remap(f, Shape::dual(f.target()), Shape::dual(f.source()), [](Endpoint e) {
        return e.side == Side::Source ? tgt(e.index) : src(e.index);
    });
}

Linking tensor_mor(const Linking& f, const Linking& g)
{
    Linking out(Shape::tensor(f.source(), g.source()), Shape::tensor(f.target(), g.target()));
    for (const auto& [from, hop] : f.fun().edges())
        out.set(from, hop.to, hop.label);
    const auto ns = static_cast<std::uint32_t>(f.source().leaf_count());
    const auto nt = static_cast<std::uint32_t>(f.target().leaf_count());
    auto shift = [&](Endpoint e) { return e.side == Side::Source ? src(ns + e.index) : tgt(nt + e.index); };
    for (const auto& [from, hop] : g.fun().edges())
        out.set(shift(from), shift(hop.to), hop.label);
    return out;
}

Linking gen(const BaseGraph& base, const std::string& arrow)
{
    const Arrow& a = base.arrow(arrow);
    Linking f(Shape::generator(a.source), Shape::generator(a.target));
    f.set(src(0), tgt(0), base.path(a.source, {a.name}));
    return f;
}

}  // namespace rewire
