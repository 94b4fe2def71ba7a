#include <doctest.h>

#include <set>

#include "rewire/net.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rewire;

namespace {

std::set<std::string> keys(const std::vector<Linking>& fs)
{
    std::set<std::string> out;
    for (const auto& f : fs)
        out.insert(f.edge_key());
    return out;
}

}  // namespace

TEST_CASE("enumeration finds exactly the valid leaf functions")
{
    const auto shapes = testing::all_shapes(2, {"a", ""});
    std::size_t checked = 0;
    for (const auto& s : shapes)
        for (const auto& t : shapes) {
            if (s.leaf_count() + t.leaf_count() > 4)
                continue;
            const auto fast = enumerate_linkings(s, t);
            const auto slow = oracle::all_linkings(s, t);
            CHECK(keys(fast) == keys(slow));
            CHECK(fast.size() == slow.size());
            const auto nets = enumerate_nets(s, t);
            CHECK(nets.size() == oracle::class_count(slow));
            std::size_t total = 0;
            for (const auto& c : nets)
                total += c.size();
            CHECK(total == slow.size());
            ++checked;
        }
    CHECK(checked > 500);
}

TEST_CASE("witnesses replay through valid linkings")
{
    testing::Rng rng(41);
    for (int i = 0; i < 300; ++i) {
        const Linking f = testing::random_linking(rng, 2 + i % 8);
        const Linking g = testing::random_rewire(rng, f, 1 + i % 4);
        const auto v = equivalent(f, g);
        REQUIRE(v.equal());
        CHECK(v.witness.size() <= static_cast<std::size_t>(1 + i % 4));
        Linking cur = f;
        for (const auto& step : v.witness) {
            cur = apply_step(cur, step);
            CHECK(check_linking(cur).valid);
        }
        CHECK(cur == g);
        // the reverse chain also works
        const auto back = equivalent(g, f);
        CHECK(back.witness.size() == v.witness.size());
    }
}

TEST_CASE("serial and parallel searches agree")
{
    testing::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Linking f = testing::random_linking(rng, 2 + i % 8);
        const Linking g = i % 3 ? testing::random_rewire(rng, f, 3) : testing::random_linking(rng, 2 + i % 8);
        if (!(f.source() == g.source() && f.target() == g.target()))
            continue;
        SearchOptions par;
        par.exec = Execution::Parallel;
        const auto a = equivalent(f, g);
        const auto b = equivalent(f, g, par);
        CHECK(a.outcome == b.outcome);
        CHECK(a.witness.size() == b.witness.size());
        CHECK(a.explored == b.explored);
    }
}

TEST_CASE("similarity classes are closed and match the naive components")
{
    testing::Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        const Linking f = testing::random_linking(rng, 2 + i % 6, {"a", "", ""});
        const auto cls = similarity_class(f);
        CHECK(oracle::class_count(cls) == 1);
        const auto members = keys(cls);
        for (const auto& g : cls)
            for (const auto& h : similar_neighbors(g))
                CHECK(members.count(h.edge_key()) == 1);
    }
}

TEST_CASE("unit steps only touch unit leaves")
{
    const Shape u = parse_shape("I*I");
    const auto steps = similar_steps(identity(u));
    CHECK_FALSE(steps.empty());
    for (const auto& s : steps) {
        CHECK(s.unit_leaf.side == Side::Source);
        CHECK(s.inverse().inverse() == s);
    }
    CHECK(steps.front().to_string().rfind("rewire s", 0) == 0);
    CHECK(similar_steps(identity(parse_shape("a*b"))).empty());
    const RewireStep bogus{src(0), tgt(1), tgt(0)};
    CHECK_THROWS_AS(apply_step(identity(u), bogus), Error);
}

TEST_CASE("search limits and debug switches")
{
    const Shape u = parse_shape("I*I");
    const Linking id = identity(u);
    const Linking tw = sym(Shape::unit(), Shape::unit());
    SearchOptions tiny;
    tiny.max_states = 1;
    CHECK(equivalent(id, tw, tiny).outcome == Outcome::Inconclusive);
    SearchOptions fixed;
    fixed.allow_rewiring = false;
    CHECK(equivalent(id, tw, fixed).outcome == Outcome::Distinct);
    CHECK(equivalent(id, id, fixed).equal());
    CHECK_THROWS_AS(equivalent(id, identity(parse_shape("I"))), Error);
}

TEST_CASE("one-sided equality")
{
    const Linking id = identity(parse_shape("I*I"));
    const Linking tw = sym(Shape::unit(), Shape::unit());
    const auto v = equivalent(two_to_one(id), two_to_one(tw));
    CHECK(v.equal());
    CHECK(v.witness.size() == 2);
}

TEST_CASE("net composition respects similarity")
{
    testing::Rng rng(44);
    for (int i = 0; i < 200; ++i) {
        const auto [f, g] = testing::random_pair(rng, 2 + i % 6);
        const Linking f2 = testing::random_rewire(rng, f, 2);
        const Linking g2 = testing::random_rewire(rng, g, 2);
        CHECK(equivalent(net_compose(f, g), net_compose(f2, g2)).equal());
    }
}
