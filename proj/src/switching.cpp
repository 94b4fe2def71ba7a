#include "rewire/switching.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rewire {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0u); }

    void reset()
    {
        std::iota(parent_.begin(), parent_.end(), 0u);
        std::fill(size_.begin(), size_.end(), 1u);
    }

    std::uint32_t find(std::uint32_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns the surviving root, or nothing if already joined.
    std::optional<std::uint32_t> unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return std::nullopt;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

std::size_t edge_total(const SwitchingGraph& g) { return g.fixed.size() + g.switched.size(); }

bool tree_with(const SwitchingGraph& g, DisjointSets& ds, const std::uint8_t* choice, std::uint64_t mask)
{
    if (edge_total(g) + 1 != g.vertex_count)
        return false;
    ds.reset();
    for (auto [u, v] : g.fixed)
        if (!ds.unite(u, v))
            return false;
    for (std::size_t k = 0; k < g.switched.size(); ++k) {
        const auto& p = g.switched[k];
        const bool right = choice ? choice[k] != 0 : ((mask >> k) & 1u) != 0;
        if (!ds.unite(p.node, right ? p.right : p.left))
            return false;
    }
    return true;
}

SwitchingChoice mask_to_choice(std::uint64_t mask, std::size_t k)
{
    SwitchingChoice c(k);
    for (std::size_t i = 0; i < k; ++i)
        c[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
    return c;
}

// Contraction got stuck: search the remaining pairs for a failing switching.
std::optional<SwitchingChoice> search_stuck(const SwitchingGraph& g, const std::vector<std::uint32_t>& open)
{
    constexpr std::size_t exhaustive_limit = 22;
    constexpr int random_attempts = 20000;
    DisjointSets ds(g.vertex_count);
    SwitchingChoice c(g.switched.size(), 0);
    if (open.size() <= exhaustive_limit) {
        const std::uint64_t total = std::uint64_t{1} << open.size();
        for (std::uint64_t m = 0; m < total; ++m) {
            for (std::size_t i = 0; i < open.size(); ++i)
                c[open[i]] = static_cast<std::uint8_t>((m >> i) & 1u);
            if (!tree_with(g, ds, c.data(), 0))
                return c;
        }
        return std::nullopt;
    }
    std::mt19937_64 rng(0x5eed);
    for (int attempt = 0; attempt < random_attempts; ++attempt) {
        for (auto k : open)
            c[k] = static_cast<std::uint8_t>(rng() & 1u);
        if (!tree_with(g, ds, c.data(), 0))
            return c;
    }
    return std::nullopt;
}

}  // namespace

std::uint32_t SwitchingGraph::add_tree(const Shape& s, Sign switched_sign)
{
    const std::uint32_t offset = vertex_count;
    const auto signs = s.node_signs();
    for (std::uint32_t i = 0; i < s.node_count(); ++i) {
        const auto& n = s.node(i);
        if (n.kind == NodeKind::Tensor) {
            if (signs[i] == switched_sign) {
                switched.push_back({offset + i, offset + n.first, offset + n.second});
            } else {
                fixed.emplace_back(offset + i, offset + n.first);
                fixed.emplace_back(offset + i, offset + n.second);
            }
        } else if (n.kind == NodeKind::Dual) {
            fixed.emplace_back(offset + i, offset + n.first);
        }
    }
    vertex_count += static_cast<std::uint32_t>(s.node_count());
    return offset;
}

bool switching_is_tree(const SwitchingGraph& g, const SwitchingChoice& choice)
{
    if (choice.size() != g.switched.size())
        throw Error("switching has " + std::to_string(choice.size()) + " entries, graph has " +
                    std::to_string(g.switched.size()) + " switched tensors");
    DisjointSets ds(g.vertex_count);
    return tree_with(g, ds, choice.data(), 0);
}

SwitchingVerdict contract(const SwitchingGraph& g)
{
    SwitchingVerdict v;
    const std::size_t k = g.switched.size();
    auto reject = [&](SwitchingChoice c, std::string reason) {
        v.all_trees = false;
        v.witness = std::move(c);
        v.reason = std::move(reason);
        return v;
    };
    if (g.vertex_count == 0)
        return reject(SwitchingChoice(k, 0), "empty graph");
    if (edge_total(g) + 1 != g.vertex_count)
        return reject(SwitchingChoice(k, 0), "every switching has " + std::to_string(edge_total(g)) +
                                                 " edges on " + std::to_string(g.vertex_count) + " vertices");

    DisjointSets ds(g.vertex_count);
    std::size_t classes = g.vertex_count;
    for (auto [u, v2] : g.fixed) {
        if (!ds.unite(u, v2))
            return reject(SwitchingChoice(k, 0), "cycle through unswitched edges");
        --classes;
    }

    // Incidence lists per class root, merged small into large.
    std::vector<std::vector<std::uint32_t>> incident(g.vertex_count);
    for (std::uint32_t p = 0; p < k; ++p) {
        const auto& sp = g.switched[p];
        incident[ds.find(sp.node)].push_back(p);
        incident[ds.find(sp.left)].push_back(p);
        incident[ds.find(sp.right)].push_back(p);
    }
    std::vector<std::uint8_t> done(k, 0);
    std::vector<std::uint32_t> work(k);
    std::iota(work.begin(), work.end(), 0u);
    std::reverse(work.begin(), work.end());
    std::size_t contracted = 0;

    while (!work.empty()) {
        const std::uint32_t p = work.back();
        work.pop_back();
        if (done[p])
            continue;
        const auto& sp = g.switched[p];
        const auto a = ds.find(sp.node);
        const auto l = ds.find(sp.left);
        const auto r = ds.find(sp.right);
        if (a == l || a == r) {
            SwitchingChoice c(k, 0);
            c[p] = a == r ? 1 : 0;
            return reject(std::move(c), "switched tensor closes a cycle");
        }
        if (l != r)
            continue;
        done[p] = 1;
        ++contracted;
        --classes;
        const auto root = *ds.unite(a, l);
        const auto other = root == a ? l : a;
        auto& big = incident[root];
        auto& small = incident[other];
        if (big.size() < small.size())
            big.swap(small);
        for (auto q : small) {
            if (!done[q])
                work.push_back(q);
            big.push_back(q);
        }
        small.clear();
        small.shrink_to_fit();
    }

    if (contracted == k && classes == 1)
        return v;
    std::vector<std::uint32_t> open;
    for (std::uint32_t p = 0; p < k; ++p)
        if (!done[p])
            open.push_back(p);
    v.all_trees = false;
    v.reason = "contraction stuck with " + std::to_string(classes) + " classes and " +
               std::to_string(open.size()) + " open switched tensors";
    if (open.empty())
        v.witness = SwitchingChoice(k, 0);
    else
        v.witness = search_stuck(g, open);
    return v;
}

EnumerationVerdict enumerate_switchings(const SwitchingGraph& g, std::size_t bound, Execution exec)
{
    const std::size_t k = g.switched.size();
    if (k > bound || k >= 63)
        throw BoundExceeded(std::to_string(k) + " switched tensors exceed the enumeration bound of " +
                            std::to_string(bound));
    EnumerationVerdict v;
    const std::uint64_t total = std::uint64_t{1} << k;
    v.switchings = total;
    std::uint64_t first_bad = total;

    if (exec == Execution::Serial) {
        DisjointSets ds(g.vertex_count);
        for (std::uint64_t m = 0; m < total; ++m) {
            if (!tree_with(g, ds, nullptr, m)) {
                first_bad = m;
                break;
            }
        }
    } else {
        const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel reduction(min : first_bad)
        {
            DisjointSets ds(g.vertex_count);
#pragma omp for schedule(static)
            for (std::int64_t m = 0; m < n; ++m) {
                const auto um = static_cast<std::uint64_t>(m);
                if (um < first_bad && !tree_with(g, ds, nullptr, um))
                    first_bad = um;
            }
        }
    }
    if (first_bad < total) {
        v.all_trees = false;
        v.witness = mask_to_choice(first_bad, k);
    }
    return v;
}

std::string to_string(Condition c)
{
    switch (c) {
    case Condition::Totality: return "totality";
    case Condition::Bijection: return "bijection";
    case Condition::Labelling: return "labelling";
    case Condition::Switching: return "switching";
    }
    return "?";
}

std::string SwitchingReport::to_string() const
{
    if (valid)
        return "valid";
    std::string out = "invalid (" + rewire::to_string(*condition) + ")";
    if (leaf)
        out += " at " + leaf->to_string();
    if (switching) {
        out += " switching ";
        for (auto b : *switching)
            out += b ? 'R' : 'L';
    }
    if (!detail.empty())
        out += ": " + detail;
    return out;
}

SwitchingReport check_matching(const PartialLeafFun& f)
{
    auto fail = [](Condition c, Endpoint at, std::string detail) {
        SwitchingReport r;
        r.valid = false;
        r.condition = c;
        r.leaf = at;
        r.detail = std::move(detail);
        return r;
    };
    const std::size_t n = f.slot_count();
    std::vector<std::uint32_t> hits(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        const Endpoint e = f.endpoint(s);
        if (!f.is_domain(e))
            continue;
        const auto& hop = f.at_slot(s);
        if (!hop)
            return fail(Condition::Totality, e, "no edge leaves this leaf");
        const Leaf& from = f.leaf(e);
        const Leaf& to = f.leaf(hop->to);
        if (from.is_unit()) {
            if (hop->label)
                return fail(Condition::Labelling, e, "edge out of a unit leaf carries a label");
            continue;
        }
        if (to.is_unit())
            return fail(Condition::Bijection, e, "generator leaf linked to a unit leaf");
        ++hits[f.slot(hop->to)];
        if (!hop->label)
            return fail(Condition::Labelling, e, "edge between generator leaves has no label");
        if (hop->label->source != from.atom || hop->label->target != to.atom)
            return fail(Condition::Labelling, e,
                        "label " + hop->label->to_string() + " is not a path " + from.atom + " -> " + to.atom);
    }
    for (std::size_t s = 0; s < n; ++s) {
        const Endpoint e = f.endpoint(s);
        if (f.is_domain(e) || f.leaf(e).is_unit())
            continue;
        if (hits[s] != 1)
            return fail(Condition::Bijection, e,
                        "generator leaf is the target of " + std::to_string(hits[s]) + " edges");
    }
    return {};
}

}  // namespace rewire
