#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rewire/linking.hpp"

namespace rewire::cli {

using ShapeTable = std::map<std::string, Shape, std::less<>>;

/// Shape syntax with front-end sugar: `A -o B` (loosest, right-associative)
/// means (A * B')', `bot` means I', and capitalised names refer to `named`.
/// Generators are checked against `base` when given.
Shape parse_shape_sugar(std::string_view text, const ShapeTable& named = {}, const BaseGraph* base = nullptr);

/// Splits at commas outside parentheses, trimming each piece.
std::vector<std::string> split_top_level(std::string_view text, char separator = ',');

std::string_view trim(std::string_view s);

/// `s3` or `t0`.
Endpoint parse_endpoint(std::string_view text);

struct EdgeLine {
    std::string from;
    std::string to;
    std::optional<std::string> label;
};

/// `FROM -> TO [label]` with optional label. Endpoints are returned as text.
/// Throws Error on malformed lines.
EdgeLine parse_edge_line(std::string_view line);

/// Label of an edge between two leaves: an explicit path, the identity when
/// omitted on a generator edge, nothing on a unit edge.
std::optional<PathMorphism> edge_label(const BaseGraph& base, const Leaf& from, const Leaf& to,
                                       const std::optional<std::string>& text);

/// `linking NAME : S -> T` followed by one edge per line.
std::string format_linking(const Linking& f, std::string_view name);

std::string format_label(const std::optional<PathMorphism>& label);

}  // namespace rewire::cli
