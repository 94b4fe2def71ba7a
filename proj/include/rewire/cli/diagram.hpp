#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rewire/cli/term.hpp"
#include "rewire/net.hpp"

namespace rewire::cli {

/// Parse or type error with its location.
class DiagramError : public Error {
public:
    DiagramError(const std::string& file, int line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what)
    {
    }
};

enum class GoalKind { Equal, Distinct, Valid, Invalid, Identical };

struct Goal {
    GoalKind kind;
    std::string lhs;
    std::string rhs;
    std::string text;
};

struct Diagram {
    BaseGraph base;
    ShapeTable shapes;
    MorphismTable morphisms;
    /// Morphism names in declaration order.
    std::vector<std::string> order;
    std::vector<Goal> goals;
};

/// Line-oriented diagram syntax:
///   object a b        arrow x : a -> b        shape P = (a * b')'
///   morphism f : S -> T {  <edge lines>  }    linking f : S -> T  <edge lines>
///   term g = seq(l(S), lbar(S))               include "prelude.diag"
///   expect equal|distinct|identical f g       expect valid|invalid f
/// `#` starts a comment. Includes resolve relative to the including file.
Diagram parse_diagram(const std::string& text, const std::filesystem::path& origin = "<input>");
Diagram load_diagram(const std::filesystem::path& file);

/// Adds declarations from `text` to an existing diagram.
void extend_diagram(Diagram& d, const std::string& text, const std::filesystem::path& origin);

struct RunOptions {
    SearchOptions search;
    /// Check validity goals by trying every switching.
    bool oracle = false;
    std::size_t oracle_bound = 20;
};

enum class GoalStatus { Pass, Fail, Inconclusive };

struct GoalResult {
    GoalStatus status = GoalStatus::Fail;
    std::string detail;
    std::optional<EquivalenceVerdict> verdict;
};

struct DiagramReport {
    std::vector<GoalResult> results;
    std::string text;
    /// 0 all pass, 1 some goal fails, 3 inconclusive and nothing failed.
    int exit_code = 0;
};

/// Goals run independently; output follows goal order.
DiagramReport run_diagram(const Diagram& d, const RunOptions& options = {});

}  // namespace rewire::cli
