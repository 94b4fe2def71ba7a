#include <doctest.h>

#include "rewire/goi.hpp"
#include "rewire/shape.hpp"

using namespace rewire;

TEST_CASE("identity on a signed set is total and points across")
{
    const auto x = parse_shape("a*(b*I)'").leaves();
    const auto id = PartialLeafFun::identity(x);
    CHECK(id.total());
    CHECK(id.edge_count() == 3);
    CHECK(id.at(src(0))->to == tgt(0));
    CHECK(id.at(tgt(1))->to == src(1));
    CHECK(id.at(tgt(2))->to == src(2));
    CHECK_FALSE(id.at(tgt(0)).has_value());
}

TEST_CASE("domain and codomain follow side and sign")
{
    const auto x = parse_shape("a*b'").leaves();
    PartialLeafFun f(x, x);
    CHECK(f.is_domain(src(0)));
    CHECK(f.is_codomain(src(1)));
    CHECK(f.is_domain(tgt(1)));
    CHECK(f.is_codomain(tgt(0)));
    CHECK_FALSE(f.valid(src(2)));
    CHECK_THROWS_AS(f.set(src(1), {tgt(0), std::nullopt}), Error);
    CHECK_THROWS_AS(f.set(src(0), {tgt(1), std::nullopt}), Error);
    CHECK_FALSE(f.total());
}

TEST_CASE("composing with the identity changes nothing")
{
    const auto s = parse_shape("a*b'").leaves();
    const auto t = parse_shape("b'*a").leaves();
    PartialLeafFun f(s, t);
    f.set(src(0), {tgt(1), PathMorphism{"a", "a", {}}});
    f.set(tgt(0), {src(1), PathMorphism{"b", "b", {}}});
    CHECK(compose_plf(PartialLeafFun::identity(s), f) == f);
    CHECK(compose_plf(f, PartialLeafFun::identity(t)) == f);
    CHECK(edge_key(compose_plf(f, PartialLeafFun::identity(t))) == edge_key(f));
}

TEST_CASE("paths bounce through the middle set and collect labels")
{
    // f : a -> (a' * a)' * a    g : (a' * a)' * a -> a
    const auto s = parse_shape("a").leaves();
    const auto m = parse_shape("(a'*a)'*a").leaves();
    const auto u = parse_shape("a").leaves();
    PartialLeafFun f(s, m);
    f.set(src(0), {tgt(0), PathMorphism{"a", "a", {"p"}}});
    f.set(tgt(1), {tgt(2), PathMorphism{"a", "a", {"q"}}});
    PartialLeafFun g(m, u);
    g.set(src(0), {src(1), PathMorphism{"a", "a", {"r"}}});
    g.set(src(2), {tgt(0), PathMorphism{"a", "a", {"t"}}});
    const auto h = compose_plf(f, g);
    REQUIRE(h.at(src(0)).has_value());
    CHECK(h.at(src(0))->to == tgt(0));
    CHECK(h.at(src(0))->label->arrows == std::vector<std::string>{"p", "r", "q", "t"});
    CHECK(unique_path(f, g, src(0), tgt(0)) == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("closed loops through the middle vanish")
{
    const auto x = parse_shape("I'*I").leaves();
    const auto m = parse_shape("I'*I").leaves();
    const auto z = parse_shape("I*I'").leaves();
    PartialLeafFun f(x, m);
    f.set(src(1), {src(0), std::nullopt});
    f.set(tgt(0), {tgt(1), std::nullopt});
    PartialLeafFun g(m, z);
    g.set(src(1), {src(0), std::nullopt});
    g.set(tgt(1), {tgt(0), std::nullopt});
    const auto h = compose_plf(f, g);
    CHECK(h.at(src(1))->to == src(0));
    CHECK(h.at(tgt(1))->to == tgt(0));
    CHECK(h.edge_count() == 2);
}

TEST_CASE("edge keys separate different functions")
{
    const auto x = parse_shape("I*I").leaves();
    PartialLeafFun f(x, x);
    PartialLeafFun g(x, x);
    f.set(src(0), {tgt(0), std::nullopt});
    g.set(src(0), {tgt(1), std::nullopt});
    CHECK(edge_key(f) != edge_key(g));
    g.set(src(0), {tgt(0), std::nullopt});
    CHECK(edge_key(f) == edge_key(g));
}

TEST_CASE("worked composite of two partial leaf functions")
{
    // upper: + + + - + -   middle: + - + - -   lower: - + - - -
    auto set = [](const char* signs) {
        SignedSet out;
        for (const char* c = signs; *c; ++c)
            out.push_back({"", *c == '+' ? Sign::Positive : Sign::Negative});
        return out;
    };
    const auto x = set("+++-+-");
    const auto y = set("+-+--");
    const auto z = set("-+---");
    PartialLeafFun f(x, y);
    f.set(src(0), {tgt(0), std::nullopt});
    f.set(src(1), {tgt(2), std::nullopt});
    f.set(src(2), {tgt(0), std::nullopt});
    f.set(tgt(1), {src(3), std::nullopt});
    f.set(tgt(3), {tgt(2), std::nullopt});
    f.set(src(4), {src(5), std::nullopt});
    f.set(tgt(4), {src(5), std::nullopt});
    PartialLeafFun g(y, z);
    g.set(src(0), {src(1), std::nullopt});
    g.set(tgt(0), {src(1), std::nullopt});
    g.set(src(2), {tgt(1), std::nullopt});
    g.set(tgt(2), {src(3), std::nullopt});
    g.set(tgt(3), {src(4), std::nullopt});
    g.set(tgt(4), {src(4), std::nullopt});
    PartialLeafFun expected(x, z);
    expected.set(src(0), {src(3), std::nullopt});
    expected.set(src(1), {tgt(1), std::nullopt});
    expected.set(src(2), {src(3), std::nullopt});
    expected.set(src(4), {src(5), std::nullopt});
    expected.set(tgt(0), {src(3), std::nullopt});
    expected.set(tgt(2), {tgt(1), std::nullopt});
    expected.set(tgt(3), {src(5), std::nullopt});
    expected.set(tgt(4), {src(5), std::nullopt});
    CHECK(compose_plf(f, g) == expected);
}
