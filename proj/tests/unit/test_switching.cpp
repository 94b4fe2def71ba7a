#include <doctest.h>

#include "rewire/linking.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rewire;

TEST_CASE("contraction agrees with enumeration on random graphs")
{
    testing::Rng rng(11);
    int rejected = 0;
    for (int i = 0; i < 2000; ++i) {
        const auto base = testing::random_linking(rng, 2 + i % 10);
        const Linking f = i % 2 ? testing::random_candidate(rng, base.source(), base.target()) : base;
        const auto g = switching_graph(f);
        if (g.switched.size() > 14)
            continue;
        const auto c = contract(g);
        const auto e = enumerate_switchings(g, 14);
        CHECK(c.all_trees == e.all_trees);
        if (!c.all_trees) {
            ++rejected;
            REQUIRE(c.witness.has_value());
            CHECK_FALSE(switching_is_tree(g, *c.witness));
        }
        CHECK(e.switchings == (std::uint64_t{1} << g.switched.size()));
    }
    CHECK(rejected > 100);
}

TEST_CASE("parallel enumeration reports the same first failure")
{
    testing::Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        const auto base = testing::random_linking(rng, 4 + i % 8);
        const Linking f = testing::random_candidate(rng, base.source(), base.target());
        const auto g = switching_graph(f);
        if (g.switched.size() > 12)
            continue;
        const auto a = enumerate_switchings(g, 12, Execution::Serial);
        const auto b = enumerate_switchings(g, 12, Execution::Parallel);
        CHECK(a.all_trees == b.all_trees);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("enumeration refuses too many switched tensors")
{
    SwitchingGraph g;
    g.add_tree(parse_shape("(a*b)*(a*b)"), Sign::Positive);
    CHECK(g.switched.size() == 3);
    CHECK_THROWS_AS(enumerate_switchings(g, 2), BoundExceeded);
}

TEST_CASE("a tree added with the other sign has no switched tensors")
{
    SwitchingGraph g;
    const auto offset = g.add_tree(parse_shape("(a*b)'*c"), Sign::Negative);
    CHECK(offset == 0);
    CHECK(g.vertex_count == 6);
    CHECK(g.switched.size() == 1);
    CHECK(g.fixed.size() == 3);
}

TEST_CASE("matching failures are classified")
{
    const Shape a = parse_shape("a");
    Linking f(a, a);
    CHECK(check_linking(f).condition == Condition::Totality);
    f.set(src(0), tgt(0));
    CHECK(check_linking(f).condition == Condition::Labelling);
    f.set(src(0), tgt(0), PathMorphism{"a", "a", {}});
    CHECK(check_linking(f).valid);

    const Shape aa = parse_shape("a*a");
    Linking g(aa, aa);
    g.set(src(0), tgt(0), PathMorphism{"a", "a", {}});
    g.set(src(1), tgt(0), PathMorphism{"a", "a", {}});
    const auto r = check_linking(g);
    CHECK(r.condition == Condition::Bijection);
    CHECK(r.to_string().find("bijection") != std::string::npos);

    Linking u(Shape::unit(), Shape::unit());
    u.set(src(0), tgt(0), PathMorphism{"a", "a", {}});
    CHECK(check_linking(u).condition == Condition::Labelling);
}

TEST_CASE("switching failures come with a witness")
{
    // a * a -> a * a with the tensors joined twice: both leaves pair up.
    const Shape s = parse_shape("(a*a')'");
    Linking f(s, s);
    f.set(tgt(0), src(0), PathMorphism{"a", "a", {}});
    f.set(src(1), tgt(1), PathMorphism{"a", "a", {}});
    CHECK(check_linking(f).valid);

    // sending every leaf back into its own tree creates a cycle
    const Shape t = parse_shape("a'*a");
    Linking g(t, t);
    g.set(src(1), src(0), PathMorphism{"a", "a", {}});
    g.set(tgt(0), tgt(1), PathMorphism{"a", "a", {}});
    const auto r = check_linking(g);
    CHECK_FALSE(r.valid);
    CHECK(r.condition == Condition::Switching);
    REQUIRE(r.switching.has_value());
    CHECK_FALSE(switching_is_tree(switching_graph(g), *r.switching));
}
