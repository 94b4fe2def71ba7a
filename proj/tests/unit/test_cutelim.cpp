#include <doctest.h>

#include "rewire/cutelim.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rewire;

TEST_CASE("one-sided and two-sided forms convert both ways")
{
    testing::Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        const Linking f = testing::random_linking(rng, 2 + i % 10);
        const OneSidedLinking one = two_to_one(f);
        CHECK(one.tree_count() == 2);
        CHECK(one.tree(0) == Shape::dual(f.source()));
        CHECK(one_to_two(one) == f);
        CHECK(check_one_sided(one).valid);
    }
}

TEST_CASE("each reduction keeps the linking valid")
{
    testing::Rng rng(32);
    for (int i = 0; i < 300; ++i) {
        const auto chain = testing::random_chain(rng, 2 + i % 6, 2 + i % 3);
        OneSidedLinking cur = fold_chain(chain);
        CHECK(cur.shapes().cuts.size() == chain.size() - 1);
        std::size_t steps = 0;
        const std::size_t expected = cut_size(cur.shapes());
        while (!cur.shapes().cuts.empty()) {
            const std::size_t pick = steps % cur.shapes().cuts.size();
            cur = eliminate_cut(cur, pick);
            ++steps;
            CHECK(oracle::valid(cur, 10).value_or(true));
            CHECK(check_one_sided(cur).valid);
        }
        CHECK(steps == expected);
    }
}

TEST_CASE("every strategy reaches the same normal form")
{
    testing::Rng rng(33);
    for (int i = 0; i < 300; ++i) {
        const auto chain = testing::random_chain(rng, 2 + i % 6, 3);
        const OneSidedLinking folded = fold_chain(chain);
        const OneSidedLinking turbo = turbo_normalize(folded);
        CHECK(turbo.shapes().cuts.empty());
        for (auto s : {Strategy::Leftmost, Strategy::Rightmost, Strategy::Random}) {
            const auto n = normalize_stepwise(folded, s, static_cast<std::uint64_t>(i));
            CHECK(n.result == turbo);
            CHECK(n.steps == cut_size(folded.shapes()));
        }
        CHECK(one_to_two(turbo) == compose(compose(chain[0], chain[1]), chain[2]));
    }
}

TEST_CASE("reduction kinds")
{
    const Shape a = parse_shape("a");
    const Shape ab = parse_shape("a*b");
    const Linking f = identity(ab);
    const OneSidedLinking folded = fold_chain({f, f});
    REQUIRE(folded.shapes().cuts.size() == 1);
    CHECK(folded.shapes().cuts[0] == ab);
    // a tensor cut splits in two
    const OneSidedLinking split = eliminate_cut(folded, 0);
    REQUIRE(split.shapes().cuts.size() == 2);
    CHECK(split.shapes().cuts[0] == a);
    CHECK(split.shapes().cuts[1] == parse_shape("b"));
    // atomic cuts vanish
    const OneSidedLinking done = eliminate_cut(eliminate_cut(split, 1), 0);
    CHECK(done.shapes().cuts.empty());
    CHECK(one_to_two(done) == f);
    // a dual cut swaps sides
    const Linking d = identity(parse_shape("a'"));
    const OneSidedLinking dd = fold_chain({d, d});
    const OneSidedLinking swapped = eliminate_cut(dd, 0);
    REQUIRE(swapped.shapes().cuts.size() == 1);
    CHECK(swapped.shapes().cuts[0] == a);
    CHECK_THROWS_AS(eliminate_cut(dd, 1), Error);
}

TEST_CASE("cut size counts the nodes of each cut shape")
{
    CutSequent s{{parse_shape("a")}, {parse_shape("a*b'"), parse_shape("I")}};
    CHECK(cut_size(s) == 5);
}

TEST_CASE("turbo normalization is linear enough for long chains")
{
    const Shape s = parse_shape("((a*b)'*(I*a))'");
    std::vector<Linking> chain(400, identity(s));
    const OneSidedLinking n = turbo_normalize(fold_chain(chain));
    CHECK(one_to_two(n) == identity(s));
}

TEST_CASE("one_to_two needs exactly a dual and one more shape")
{
    OneSidedLinking three(CutSequent{{parse_shape("a'"), parse_shape("a"), parse_shape("I")}, {}});
    CHECK_THROWS_AS(one_to_two(three), Error);
}
