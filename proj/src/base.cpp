#include "rewire/base.hpp"

#include <algorithm>

namespace rewire {

std::string PathMorphism::to_string() const
{
    if (arrows.empty())
        return "id_" + source;
    std::string out;
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
        if (!out.empty())
            out += '.';
        out += *it;
    }
    return out;
}

BaseGraph BaseGraph::discrete(const std::vector<std::string>& objects)
{
    BaseGraph g;
    for (const auto& o : objects)
        if (!g.has_object(o))
            g.add_object(o);
    return g;
}

void BaseGraph::add_object(const std::string& name)
{
    if (has_object(name))
        throw Error("duplicate object '" + name + "'");
    object_index_.emplace(name, objects_.size());
    objects_.push_back(name);
}

void BaseGraph::add_arrow(const std::string& name, const std::string& source, const std::string& target)
{
    if (has_arrow(name))
        throw Error("duplicate arrow '" + name + "'");
    if (!has_object(source))
        throw Error("arrow '" + name + "': unknown source object '" + source + "'");
    if (!has_object(target))
        throw Error("arrow '" + name + "': unknown target object '" + target + "'");
    arrow_index_.emplace(name, arrows_.size());
    arrows_.push_back({name, source, target});
}

bool BaseGraph::has_object(std::string_view name) const
{
    return object_index_.find(name) != object_index_.end();
}

bool BaseGraph::has_arrow(std::string_view name) const
{
    return arrow_index_.find(name) != arrow_index_.end();
}

const Arrow& BaseGraph::arrow(std::string_view name) const
{
    auto it = arrow_index_.find(name);
    if (it == arrow_index_.end())
        throw Error("unknown arrow '" + std::string(name) + "'");
    return arrows_[it->second];
}

PathMorphism BaseGraph::path(const std::string& source, const std::vector<std::string>& arrows) const
{
    if (!has_object(source))
        throw Error("unknown object '" + source + "'");
    PathMorphism p{source, source, {}};
    for (const auto& name : arrows) {
        const Arrow& a = arrow(name);
        if (a.source != p.target)
            throw Error("arrow '" + name + "' starts at '" + a.source + "', expected '" + p.target + "'");
        p.target = a.target;
        p.arrows.push_back(name);
    }
    return p;
}

PathMorphism identity_path(const BaseGraph& base, const std::string& object)
{
    if (!base.has_object(object))
        throw Error("unknown object '" + object + "'");
    return {object, object, {}};
}

PathMorphism compose_path(const PathMorphism& p, const PathMorphism& q)
{
    if (p.target != q.source)
        throw Error("cannot compose " + p.to_string() + " : " + p.source + " -> " + p.target + " with "
                    + q.to_string() + " : " + q.source + " -> " + q.target);
    PathMorphism r{p.source, q.target, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

PathMorphism parse_path_label(const BaseGraph& base, std::string_view text,
                              const std::string& source, const std::string& target)
{
    std::vector<std::string> applicative;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto dot = text.find('.', start);
        auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        if (piece.empty())
            throw Error("empty arrow name in label '" + std::string(text) + "'");
        applicative.emplace_back(piece);
        if (dot == std::string_view::npos)
            break;
        start = dot + 1;
    }
    std::vector<std::string> traversal;
    for (auto it = applicative.rbegin(); it != applicative.rend(); ++it)
        if (*it != "id" && it->rfind("id_", 0) != 0)
            traversal.push_back(*it);
    PathMorphism p = base.path(source, traversal);
    if (p.target != target)
        throw Error("label '" + std::string(text) + "' is a morphism " + p.source + " -> " + p.target
                    + ", expected " + source + " -> " + target);
    return p;
}

}  // namespace rewire
