#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rewire {

/// Raised for malformed input: unknown names, endpoint mismatches, bad syntax.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A morphism of the free category on a BaseGraph: a chain of arrows stored
/// in traversal order, so [x, w, x] is the composite usually written xwx.
struct PathMorphism {
    std::string source;
    std::string target;
    std::vector<std::string> arrows;

    bool is_identity() const { return arrows.empty(); }

    /// Applicative rendering, last arrow first: "x.w.x", "z.y", or "id_c".
    std::string to_string() const;

    friend bool operator==(const PathMorphism&, const PathMorphism&) = default;
    friend auto operator<=>(const PathMorphism&, const PathMorphism&) = default;
};

struct Arrow {
    std::string name;
    std::string source;
    std::string target;
};

/// Finite directed multigraph presenting the base category. Path equality is
/// sequence equality, so net equality stays decidable.
class BaseGraph {
public:
    BaseGraph() = default;

    /// A base with the given objects and no arrows.
    static BaseGraph discrete(const std::vector<std::string>& objects);

    void add_object(const std::string& name);
    void add_arrow(const std::string& name, const std::string& source, const std::string& target);

    bool has_object(std::string_view name) const;
    bool has_arrow(std::string_view name) const;
    const Arrow& arrow(std::string_view name) const;

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    /// Validates the chain; arrows are given in traversal order.
    PathMorphism path(const std::string& source, const std::vector<std::string>& arrows) const;

private:
    std::vector<std::string> objects_;
    std::vector<Arrow> arrows_;
    std::map<std::string, std::size_t, std::less<>> object_index_;
    std::map<std::string, std::size_t, std::less<>> arrow_index_;
};

PathMorphism identity_path(const BaseGraph& base, const std::string& object);

/// p then q. Throws Error unless p.target == q.source.
PathMorphism compose_path(const PathMorphism& p, const PathMorphism& q);

/// Parses an applicative label such as "z.y" (y first) or "id". The identity
/// case needs the expected object, since "id" carries no endpoints.
PathMorphism parse_path_label(const BaseGraph& base, std::string_view text,
                              const std::string& source, const std::string& target);

}  // namespace rewire
