#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rewire/cli/syntax.hpp"

namespace rewire::cli {

/// Ill-typed term: failed composability or a pattern mismatch.
class TypeError : public Error {
public:
    using Error::Error;
};

enum class TermKind {
    Id, Assoc, AssocInv, Sym, UnitL, UnitR, UnitLInv, UnitRInv,
    Curry, Uncurry, Dual, Tensor, Seq, Gen, Ref
};

struct Term {
    TermKind kind = TermKind::Ref;
    std::vector<Shape> shapes;
    std::vector<Term> args;
    /// Arrow for gen, morphism for ref.
    std::string name;
};

/// Constructors: id(S) assoc(S,T,U) assoc_inv(S,T,U) sym(S,T) l(S) r(S)
/// lbar(S) rbar(S) curry(t) uncurry(t) dual(t) tensor(t,u) seq(t,u,...)
/// gen(x); a bare name refers to a declared morphism. Shape arguments may be
/// quoted.
Term parse_term(std::string_view text, const ShapeTable& shapes, const BaseGraph* base = nullptr);

using MorphismTable = std::map<std::string, Linking, std::less<>>;

/// Throws TypeError for ill-typed terms and Error for unknown names.
Linking elaborate(const Term& t, const BaseGraph& base, const MorphismTable& env);

}  // namespace rewire::cli
