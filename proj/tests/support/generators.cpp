#include "generators.hpp"

#include <functional>
#include <map>

namespace rewire::testing {

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v)
{
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Shape atom_shape(const std::string& a) { return a.empty() ? Shape::unit() : Shape::generator(a); }

// A sequent proof under construction. Leaves carry stable ids so rules can
// rearrange conclusions without renumbering edges.
struct Proof {
    std::vector<Shape> concl;
    std::vector<std::vector<int>> ids;
    std::map<int, std::pair<int, std::optional<PathMorphism>>> edges;
};

struct ProofBuilder {
    Rng& rng;
    int next_id = 0;

    Proof axiom(const std::string& atom)
    {
        Proof p;
        const Shape a = atom_shape(atom);
        p.concl = {Shape::dual(a), a};
        p.ids = {{next_id}, {next_id + 1}};
        std::optional<PathMorphism> label;
        if (!atom.empty())
            label = PathMorphism{atom, atom, {}};
        p.edges[next_id] = {next_id + 1, label};
        next_id += 2;
        return p;
    }

    Proof one()
    {
        Proof p;
        p.concl = {Shape::unit()};
        p.ids = {{next_id++}};
        return p;
    }

    std::vector<int> positive_ids(const Proof& p) const
    {
        std::vector<int> out;
        for (std::size_t c = 0; c < p.concl.size(); ++c) {
            const auto leaves = p.concl[c].leaves();
            for (std::size_t i = 0; i < leaves.size(); ++i)
                if (leaves[i].sign == Sign::Positive)
                    out.push_back(p.ids[c][i]);
        }
        return out;
    }

    void bottom(Proof& p)
    {
        const int id = next_id++;
        p.edges[id] = {pick(rng, positive_ids(p)), std::nullopt};
        const auto at = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(p.concl.size())));
        p.concl.insert(p.concl.begin() + static_cast<std::ptrdiff_t>(at), Shape::dual(Shape::unit()));
        p.ids.insert(p.ids.begin() + static_cast<std::ptrdiff_t>(at), std::vector<int>{id});
    }

    void double_dual(Proof& p)
    {
        auto& c = p.concl[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(p.concl.size()) - 1))];
        c = Shape::dual(Shape::dual(c));
    }

    void par(Proof& p)
    {
        const int n = static_cast<int>(p.concl.size());
        int i = uniform(rng, 0, n - 1);
        int j = uniform(rng, 0, n - 2);
        if (j >= i)
            ++j;
        Shape joined = Shape::dual(Shape::tensor(Shape::dual(p.concl[i]), Shape::dual(p.concl[j])));
        std::vector<int> ids = p.ids[i];
        ids.insert(ids.end(), p.ids[j].begin(), p.ids[j].end());
        const int lo = std::min(i, j);
        const int hi = std::max(i, j);
        p.concl.erase(p.concl.begin() + hi);
        p.ids.erase(p.ids.begin() + hi);
        p.concl[lo] = joined;
        p.ids[lo] = ids;
    }

    Proof tensor(Proof p, Proof q)
    {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(p.concl.size()) - 1));
        const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(q.concl.size()) - 1));
        Proof r;
        for (std::size_t k = 0; k < p.concl.size(); ++k)
            if (k != i) {
                r.concl.push_back(p.concl[k]);
                r.ids.push_back(p.ids[k]);
            }
        for (std::size_t k = 0; k < q.concl.size(); ++k)
            if (k != j) {
                r.concl.push_back(q.concl[k]);
                r.ids.push_back(q.ids[k]);
            }
        std::vector<int> ids = p.ids[i];
        ids.insert(ids.end(), q.ids[j].begin(), q.ids[j].end());
        const auto at = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r.concl.size())));
        r.concl.insert(r.concl.begin() + static_cast<std::ptrdiff_t>(at), Shape::tensor(p.concl[i], q.concl[j]));
        r.ids.insert(r.ids.begin() + static_cast<std::ptrdiff_t>(at), ids);
        r.edges = std::move(p.edges);
        r.edges.merge(q.edges);
        return r;
    }
};

Linking proof_to_linking(const Proof& p)
{
    Shape first = p.concl[0];
    if (first.kind() != NodeKind::Dual)
        first = Shape::dual(Shape::dual(first));
    OneSidedLinking one(CutSequent{{first, p.concl[1]}, {}});
    std::map<int, std::uint32_t> where;
    std::uint32_t g = 0;
    for (const auto& ids : p.ids)
        for (int id : ids)
            where[id] = g++;
    for (const auto& [from, e] : p.edges)
        one.set(where.at(from), where.at(e.first), e.second);
    return one_to_two(one);
}

Shape random_small(Rng& rng)
{
    static const std::vector<std::string> atoms{"a", "b", ""};
    return random_shape(rng, 1, atoms, 0.3);
}

bool is_unit(const Shape& s) { return s.kind() == NodeKind::Unit; }

}  // namespace

Shape random_shape(Rng& rng, int leaves, const std::vector<std::string>& atoms, double dual_p)
{
    ShapeBuilder b;
    std::function<void(int)> grow = [&](int n) {
        if (n == 1) {
            const auto& a = pick(rng, atoms);
            if (a.empty())
                b.unit();
            else
                b.generator(a);
        } else {
            const int k = uniform(rng, 1, n - 1);
            grow(k);
            grow(n - k);
            b.tensor();
        }
        while (coin(rng, dual_p))
            b.dual();
    };
    grow(std::max(leaves, 1));
    return b.build();
}

Linking random_linking(Rng& rng, int leaves, const std::vector<std::string>& atoms)
{
    ProofBuilder pb{rng};
    std::vector<Proof> pool;
    int have = 0;
    while (have < std::max(leaves, 2)) {
        if (coin(rng, 0.2)) {
            pool.push_back(pb.one());
            have += 1;
        } else {
            pool.push_back(pb.axiom(pick(rng, atoms)));
            have += 2;
        }
    }
    auto decorate = [&](Proof& p) {
        if (p.concl.size() >= 3 && coin(rng, 0.3))
            pb.par(p);
        if (coin(rng, 0.12))
            pb.bottom(p);
        if (coin(rng, 0.1))
            pb.double_dual(p);
    };
    while (pool.size() > 1) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1));
        Proof p = std::move(pool[i]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
        const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1));
        Proof q = std::move(pool[j]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
        Proof r = pb.tensor(std::move(p), std::move(q));
        decorate(r);
        pool.push_back(std::move(r));
    }
    Proof p = std::move(pool.front());
    while (p.concl.size() > 2)
        pb.par(p);
    if (p.concl.size() == 1)
        pb.bottom(p);
    if (coin(rng, 0.5)) {
        std::swap(p.concl[0], p.concl[1]);
        std::swap(p.ids[0], p.ids[1]);
    }
    return proof_to_linking(p);
}

Linking random_map_from(Rng& rng, const Shape& s, int depth)
{
    if (depth <= 0)
        return identity(s);
    std::vector<std::function<Linking()>> options;
    options.push_back([&] { return identity(s); });
    options.push_back([&] { return unit_l(s); });
    options.push_back([&] { return unit_r(s); });
    if (s.kind() == NodeKind::Tensor) {
        const Shape a = s.left();
        const Shape b = s.right();
        options.push_back([&, a, b] {
            return tensor_mor(random_map_from(rng, a, depth - 1), random_map_from(rng, b, depth - 1));
        });
        options.push_back([a, b] { return sym(a, b); });
        if (is_unit(a))
            options.push_back([b] { return unit_l_inv(b); });
        if (is_unit(b))
            options.push_back([a] { return unit_r_inv(a); });
        if (a.kind() == NodeKind::Tensor)
            options.push_back([a, b] { return assoc(a.left(), a.right(), b); });
        if (b.kind() == NodeKind::Tensor)
            options.push_back([a, b] { return assoc_inv(a, b.left(), b.right()); });
        // evaluation (Y*U)' * Y -> U'
        if (a.kind() == NodeKind::Dual && a.arg().kind() == NodeKind::Tensor && a.arg().left() == b)
            options.push_back([a] { return uncurry(identity(a)); });
    }
    if (s.kind() == NodeKind::Dual) {
        const Shape a = s.arg();
        options.push_back([&, a] { return dual_mor(random_map_into(rng, a, depth - 1)); });
        if (a.kind() == NodeKind::Dual)
            options.push_back([&, a] { return pairing(s, a.arg()); });
    }
    if (s.leaf_count() <= 4) {
        // s -> (B * (s*B)')'
        options.push_back([&] {
            const Shape b = random_small(rng);
            const Shape sb = Shape::tensor(s, b);
            return curry(pairing(sb, Shape::dual(Shape::dual(sb))));
        });
    }
    Linking first = pick(rng, options)();
    if (coin(rng, 0.4))
        return compose(first, random_map_from(rng, first.target(), depth - 1));
    return first;
}

Linking random_map_into(Rng& rng, const Shape& s, int depth)
{
    if (depth <= 0)
        return identity(s);
    std::vector<std::function<Linking()>> options;
    options.push_back([&] { return identity(s); });
    options.push_back([&] { return unit_l_inv(s); });
    options.push_back([&] { return unit_r_inv(s); });
    if (s.kind() == NodeKind::Tensor) {
        const Shape a = s.left();
        const Shape b = s.right();
        options.push_back([&, a, b] {
            return tensor_mor(random_map_into(rng, a, depth - 1), random_map_into(rng, b, depth - 1));
        });
        options.push_back([a, b] { return sym(b, a); });
        if (is_unit(a))
            options.push_back([b] { return unit_l(b); });
        if (is_unit(b))
            options.push_back([a] { return unit_r(a); });
        if (b.kind() == NodeKind::Tensor)
            options.push_back([a, b] { return assoc(a, b.left(), b.right()); });
        if (a.kind() == NodeKind::Tensor)
            options.push_back([a, b] { return assoc_inv(a.left(), a.right(), b); });
    }
    if (s.kind() == NodeKind::Dual) {
        const Shape a = s.arg();
        options.push_back([&, a] { return dual_mor(random_map_from(rng, a, depth - 1)); });
        if (a.kind() == NodeKind::Dual)
            options.push_back([&, a] { return pairing(a.arg(), s); });
    }
    Linking last = pick(rng, options)();
    if (coin(rng, 0.4))
        return compose(random_map_into(rng, last.source(), depth - 1), last);
    return last;
}

Linking random_rewire(Rng& rng, const Linking& f, int steps)
{
    Linking g = f;
    for (int i = 0; i < steps; ++i) {
        const auto options = similar_steps(g);
        if (options.empty())
            break;
        g = apply_step(g, pick(rng, options));
    }
    return g;
}

Linking random_candidate(Rng& rng, const Shape& s, const Shape& t)
{
    Linking f(s, t);
    const auto& fun = f.fun();
    std::vector<Endpoint> codomain;
    for (std::size_t i = 0; i < fun.slot_count(); ++i)
        if (fun.is_codomain(fun.endpoint(i)))
            codomain.push_back(fun.endpoint(i));
    if (codomain.empty())
        return f;
    for (std::size_t i = 0; i < fun.slot_count(); ++i) {
        const Endpoint from = fun.endpoint(i);
        if (!fun.is_domain(from))
            continue;
        const Endpoint to = pick(rng, codomain);
        const Leaf& a = fun.leaf(from);
        const Leaf& b = fun.leaf(to);
        std::optional<PathMorphism> label;
        if (!a.is_unit() && a.atom == b.atom)
            label = PathMorphism{a.atom, a.atom, {}};
        f.set(from, to, label);
    }
    return f;
}

std::pair<Linking, Linking> random_pair(Rng& rng, int leaves)
{
    Linking f = random_linking(rng, leaves);
    if (coin(rng, 0.5))
        f = random_rewire(rng, f, uniform(rng, 1, 3));
    Linking g = random_map_from(rng, f.target(), 3);
    if (coin(rng, 0.5))
        g = random_rewire(rng, g, uniform(rng, 1, 3));
    return {f, g};
}

std::vector<Linking> random_chain(Rng& rng, int leaves, int length)
{
    std::vector<Linking> chain{random_linking(rng, leaves)};
    while (static_cast<int>(chain.size()) < length)
        chain.push_back(random_map_from(rng, chain.back().target(), 2));
    return chain;
}

std::vector<Shape> all_shapes(int max_leaves, const std::vector<std::string>& atoms)
{
    std::vector<std::vector<Shape>> by_size(static_cast<std::size_t>(max_leaves) + 1);
    auto add = [&](std::size_t n, const Shape& s) {
        by_size[n].push_back(s);
        by_size[n].push_back(Shape::dual(s));
    };
    for (const auto& a : atoms)
        add(1, atom_shape(a));
    for (std::size_t n = 2; n <= static_cast<std::size_t>(max_leaves); ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (const auto& l : by_size[k])
                for (const auto& r : by_size[n - k])
                    add(n, Shape::tensor(l, r));
    std::vector<Shape> out;
    for (const auto& v : by_size)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

}  // namespace rewire::testing
