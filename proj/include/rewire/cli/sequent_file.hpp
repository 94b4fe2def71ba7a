#pragma once

#include <string>

#include "rewire/cutelim.hpp"

namespace rewire::cli {

struct SequentFile {
    BaseGraph base;
    OneSidedLinking linking;
};

/// Cut sequent text:
///   object a            arrow x : a -> b      (optional base)
///   sequent: S1, S2, ...
///   cut: S              (any number)
///   g0.1 -> g1.0 [x]    (edge from leaf 1 of tree 0 to leaf 0 of tree 1)
/// Trees are numbered sequent shapes first, then S and S' of each cut.
SequentFile parse_sequent_file(const std::string& text);

/// Inverse of parse_sequent_file; the base is written first when given.
std::string format_one_sided(const OneSidedLinking& f, const BaseGraph* base = nullptr);

}  // namespace rewire::cli
