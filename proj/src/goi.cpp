#include "rewire/goi.hpp"

namespace rewire {

PartialLeafFun::PartialLeafFun(SignedSet source, SignedSet target)
    : source_(std::move(source)), target_(std::move(target)), out_(source_.size() + target_.size())
{
}

PartialLeafFun PartialLeafFun::identity(const SignedSet& x)
{
    PartialLeafFun f(x, x);
    for (std::uint32_t i = 0; i < x.size(); ++i) {
        std::optional<PathMorphism> label;
        if (!x[i].is_unit())
            label = PathMorphism{x[i].atom, x[i].atom, {}};
        if (x[i].sign == Sign::Positive)
            f.set(src(i), {tgt(i), label});
        else
            f.set(tgt(i), {src(i), label});
    }
    return f;
}

std::size_t PartialLeafFun::slot(Endpoint e) const
{
    return e.side == Side::Source ? e.index : source_.size() + e.index;
}

Endpoint PartialLeafFun::endpoint(std::size_t s) const
{
    if (s < source_.size())
        return src(static_cast<std::uint32_t>(s));
    return tgt(static_cast<std::uint32_t>(s - source_.size()));
}

bool PartialLeafFun::valid(Endpoint e) const
{
    return e.index < (e.side == Side::Source ? source_.size() : target_.size());
}

const Leaf& PartialLeafFun::leaf(Endpoint e) const
{
    return e.side == Side::Source ? source_[e.index] : target_[e.index];
}

bool PartialLeafFun::is_domain(Endpoint e) const
{
    if (!valid(e))
        return false;
    const Sign s = leaf(e).sign;
    return e.side == Side::Source ? s == Sign::Positive : s == Sign::Negative;
}

bool PartialLeafFun::is_codomain(Endpoint e) const
{
    return valid(e) && !is_domain(e);
}

void PartialLeafFun::set(Endpoint from, Hop hop)
{
    if (!is_domain(from))
        throw Error("edge source " + from.to_string() + " is not a positive source or negative target leaf");
    if (!is_codomain(hop.to))
        throw Error("edge target " + hop.to.to_string() + " is not a negative source or positive target leaf");
    out_[slot(from)] = std::move(hop);
}

void PartialLeafFun::erase(Endpoint from)
{
    out_[slot(from)].reset();
}

std::vector<std::pair<Endpoint, Hop>> PartialLeafFun::edges() const
{
    std::vector<std::pair<Endpoint, Hop>> out;
    for (std::size_t s = 0; s < out_.size(); ++s)
        if (out_[s])
            out.emplace_back(endpoint(s), *out_[s]);
    return out;
}

std::size_t PartialLeafFun::edge_count() const
{
    std::size_t n = 0;
    for (const auto& h : out_)
        n += h.has_value();
    return n;
}

bool PartialLeafFun::total() const
{
    for (std::size_t s = 0; s < out_.size(); ++s)
        if (is_domain(endpoint(s)) != out_[s].has_value())
            return false;
    return true;
}

std::string edge_key(const PartialLeafFun& f)
{
    std::string out;
    for (std::size_t s = 0; s < f.slot_count(); ++s) {
        const auto& hop = f.at_slot(s);
        if (!hop)
            continue;
        out += std::to_string(s);
        out += '>';
        out += std::to_string(f.slot(hop->to));
        if (hop->label) {
            out += '=';
            for (const auto& a : hop->label->arrows) {
                out += a;
                out += ',';
            }
        }
        out += ';';
    }
    return out;
}

namespace {

struct Chase {
    std::optional<Hop> result;
    std::vector<std::uint32_t> middle;
};

// Follows alternating f/g hops out of a composite domain endpoint.
// Functionality makes the walk deterministic, so no search is needed.
Chase chase(const PartialLeafFun& f, const PartialLeafFun& g, Endpoint from)
{
    Chase c;
    const std::size_t middle_size = f.target().size();
    bool apply_f = from.side == Side::Source;
    Endpoint at = from;  // endpoint in the coordinates of the function applied next
    bool labelled = true;
    std::optional<PathMorphism> label;
    for (;;) {
        const auto& hop = apply_f ? f.at(at) : g.at(at);
        if (!hop)
            return c;
        if (labelled) {
            if (!hop->label) {
                labelled = false;
                label.reset();
            } else {
                label = label ? compose_path(*label, *hop->label) : *hop->label;
            }
        }
        const Endpoint to = hop->to;
        if (apply_f && to.side == Side::Source) {
            c.result = Hop{to, label};
            return c;
        }
        if (!apply_f && to.side == Side::Target) {
            c.result = Hop{to, label};
            return c;
        }
        if (c.middle.size() == middle_size)
            return c;  // revisited a middle leaf: the path closed into a cycle
        c.middle.push_back(to.index);
        if (apply_f)
            at = src(to.index);  // arrived at a positive middle leaf, continue with g
        else
            at = tgt(to.index);  // arrived at a negative middle leaf, continue with f
        apply_f = !apply_f;
    }
}

void require_composable(const PartialLeafFun& f, const PartialLeafFun& g)
{
    if (f.target() != g.source())
        throw Error("middle signed sets differ: cannot compose partial leaf functions");
}

}  // namespace

PartialLeafFun compose_plf(const PartialLeafFun& f, const PartialLeafFun& g)
{
    require_composable(f, g);
    PartialLeafFun h(f.source(), g.target());
    for (std::size_t s = 0; s < h.slot_count(); ++s) {
        const Endpoint e = h.endpoint(s);
        if (!h.is_domain(e))
            continue;
        Chase c = chase(f, g, e);
        if (c.result)
            h.set(e, std::move(*c.result));
    }
    return h;
}

std::vector<std::uint32_t> unique_path(const PartialLeafFun& f, const PartialLeafFun& g,
                                       Endpoint from, Endpoint to)
{
    require_composable(f, g);
    PartialLeafFun probe(f.source(), g.target());
    if (!probe.is_domain(from))
        throw Error(from.to_string() + " is not a domain endpoint of the composite");
    Chase c = chase(f, g, from);
    if (!c.result || c.result->to != to)
        throw Error("composite has no edge " + from.to_string() + " -> " + to.to_string());
    return c.middle;
}

}  // namespace rewire
