#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tight/branching.hpp"

using namespace tight;

namespace {

const RootSystem& c2()
{
    static const RootSystem sys = build_root_system(RootSystemKind::simple(SimpleKind::C2));
    return sys;
}

const RootSystem& a2()
{
    static const RootSystem sys = build_root_system(RootSystemKind::simple(SimpleKind::A2));
    return sys;
}

using Factors = std::vector<std::vector<std::int64_t>>;

}  // namespace

TEST_CASE("selector parsing")
{
    const auto sub = parse_subalgebra(c2(), "a2, 2a1+a2");
    CHECK(sub.labels == std::vector<std::string>{"a2", "2a1+a2"});
    CHECK(sub.target_kind == TargetKind::Sl2xSl2);
    CHECK(sub.selector() == "a2,2a1+a2");
    CHECK(sub.generated_roots_C.size() == 4);
    CHECK(parse_subalgebra(c2(), "a1+a2").target_kind == TargetKind::Sl2);
    CHECK(parse_subalgebra(c2(), "-a2").labels.front() == "-a2");
    CHECK_THROWS_AS(parse_subalgebra(c2(), "b1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subalgebra(c2(), "a3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subalgebra(c2(), "a1+3a2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subalgebra(c2(), ""), std::invalid_argument);
}

TEST_CASE("regular subalgebra conditions")
{
    auto condition = [](const std::string& sel) {
        try {
            parse_subalgebra(c2(), sel);
        } catch (const SubalgebraError& e) {
            return e.condition();
        }
        return 0;
    };
    CHECK(condition("a1+a2,a2") == 1);
    CHECK(condition("a1+a2,-a1-a2") == 2);
    CHECK(condition("a1") == 3);
    CHECK(condition("a2,2a1+a2") == 0);
    // Conditions hold but a1, a2 generate all of sp(4).
    CHECK_THROWS_AS(parse_subalgebra(c2(), "a1,a2"), std::invalid_argument);
}

TEST_CASE("sp(4,R) standard representation and the 5-dimensional one")
{
    // Weights of the 5-dimensional representation evaluate to 2, 0, 0, 0, -2 on H_{a1+a2}.
    const auto sub = parse_subalgebra(c2(), "a1+a2");
    const EvaluationMultiset expected{{{2}, 1}, {{0}, 3}, {{-2}, 1}};
    CHECK(evaluation_multiset(c2(), Weight{0, 1}, sub) == expected);
    CHECK(restrict_rep(c2(), Weight{0, 1}, sub).factors == Factors{{2}, {0}, {0}});

    const auto poly = parse_subalgebra(c2(), "a2,2a1+a2");
    const auto std_rep = restrict_rep(c2(), Weight{1, 0}, poly);
    CHECK(std_rep.factors == Factors{{1, 0}, {0, 1}});
    CHECK(std_rep.signatures == std::vector<SignaturePair>{{1, 1}, {1, 1}});
}

TEST_CASE("su(2,1) standard representation branches into rho_1 + rho_0")
{
    const auto r = restrict_rep(a2(), Weight{1, 0}, parse_subalgebra(a2(), "a1"));
    CHECK(r.factors == Factors{{1}, {0}});
    CHECK(r.dimension() == 3);
}

TEST_CASE("dimension is conserved and peeling inverts expansion")
{
    const std::vector<std::pair<const RootSystem*, std::string>> cases{
        {&c2(), "a1+a2"}, {&c2(), "2a1+a2"}, {&c2(), "a2"}, {&c2(), "a2,2a1+a2"}, {&a2(), "a1"}, {&a2(), "a1+a2"}};
    for (const auto& [sys, sel] : cases) {
        const auto sub = parse_subalgebra(*sys, sel);
        for (const auto& lambda : sys->dominant_weights_up_to(8)) {
            const auto evals = evaluation_multiset(*sys, lambda, sub);
            const auto r = restrict_rep(*sys, lambda, sub);
            CHECK(r.dimension() == sys->dimension(lambda));
            CHECK(expand_factors(r) == evals);
        }
    }
}

TEST_CASE("peeling rejects multisets that are not characters")
{
    CHECK_THROWS_AS(peel_strings({{{2}, 1}, {{0}, 1}}, TargetKind::Sl2), std::logic_error);
    CHECK_THROWS_AS(peel_strings({{{1}, 1}}, TargetKind::Sl2xSl2), std::invalid_argument);
}

TEST_CASE("even witnesses")
{
    // su(2,1) with weight (0,2): the lowest weight omega_{-2,0} has evaluation -2 on H_a1.
    const auto w = even_witness(a2(), Weight{0, 2}, parse_subalgebra(a2(), "a1"));
    REQUIRE(w);
    CHECK(w->weight == Weight{-2, 0});
    CHECK(w->value == -2);

    const auto s = even_witness(c2(), Weight{0, 3}, parse_subalgebra(c2(), "a1+a2"));
    REQUIRE(s);
    CHECK(s->weight == Weight{0, 3});
    CHECK(s->value == 6);

    CHECK_FALSE(even_witness(c2(), Weight{1, 0}, parse_subalgebra(c2(), "a2,2a1+a2")));
    CHECK_FALSE(even_witness(a2(), Weight{0, 1}, parse_subalgebra(a2(), "a1")));
}
