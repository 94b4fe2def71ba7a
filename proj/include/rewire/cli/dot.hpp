#pragma once

#include <string>

#include "rewire/linking.hpp"

namespace rewire::cli {

/// Graphviz rendering: parse trees drawn with solid undirected edges,
/// linking edges dashed and directed with their labels, switched tensors
/// drawn as doubled boxes. Output depends only on the input.
std::string export_dot(const Linking& f, const std::string& name = "linking");

}  // namespace rewire::cli
