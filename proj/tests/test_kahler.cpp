#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tight/kahler.hpp"

using namespace tight;

namespace {

HomClassMap scalar(const HermitianFactor& g, const HermitianFactor& h, Rational m)
{
    return HomClassMap({g}, {h}, {{m}});
}

}  // namespace

TEST_CASE("rank and tube type of the classical families")
{
    for (std::int64_t p = 1; p <= 6; ++p)
        for (std::int64_t q = 1; q <= 6; ++q) {
            const auto f = HermitianFactor::su(p, q);
            CHECK(f.rank == std::min(p, q));
            CHECK(f.tube_type == (p == q));
        }
    for (std::int64_t n = 1; n <= 6; ++n) {
        CHECK(HermitianFactor::sp(n).rank == n);
        CHECK(HermitianFactor::sp(n).tube_type);
    }
    for (std::int64_t n = 3; n <= 10; ++n) {
        CHECK(HermitianFactor::so_star(n).rank == n / 2);
        CHECK(HermitianFactor::so_star(n).tube_type == (n % 2 == 0));
        CHECK(HermitianFactor::so2(n).rank == 2);
        CHECK(HermitianFactor::so2(n).tube_type);
    }
    CHECK_THROWS_AS(HermitianFactor::su(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(HermitianFactor::so2(2), std::invalid_argument);
}

TEST_CASE("factor names parse back")
{
    CHECK(parse_hermitian_factor("su(3,2)") == HermitianFactor::su(3, 2));
    CHECK(parse_hermitian_factor("sp(4,R)") == HermitianFactor::sp(2));
    CHECK(parse_hermitian_factor("so*(10)") == HermitianFactor::so_star(5));
    CHECK(parse_hermitian_factor("so(2,7)") == HermitianFactor::so2(7));
    CHECK_THROWS_AS(parse_hermitian_factor("e6(-14)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_hermitian_factor("sp(5,R)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_hermitian_factor("so(3)"), std::invalid_argument);
}

TEST_CASE("norms")
{
    const auto su22 = HermitianFactor::su(2, 2);
    CHECK(norm(KahlerClass::distinguished({su22})) == 2);
    const auto disc = HermitianFactor::su(1, 1);
    CHECK(norm(KahlerClass::distinguished({disc, disc})) == 2);
    CHECK(norm(KahlerClass::zero({disc, disc})) == 0);
    CHECK(norm(KahlerClass::distinguished({disc, su22}).flipped(1)) == 3);
}

TEST_CASE("positivity")
{
    const auto disc = HermitianFactor::su(1, 1);
    const FactorProduct two{disc, disc};
    const KahlerClass a{two, {Rational(1), Rational(0)}};
    const KahlerClass b{two, {Rational(2), Rational(3)}};
    const KahlerClass c{two, {Rational(1), Rational(-1)}};
    CHECK(is_positive(a));
    CHECK_FALSE(is_strictly_positive(a));
    CHECK(is_strictly_positive(b));
    CHECK_FALSE(is_positive(c));
    CHECK_FALSE(is_negative(c));
    CHECK(is_strictly_negative(b.flipped(0).flipped(1)));
}

TEST_CASE("tightness of maps")
{
    const auto disc = HermitianFactor::su(1, 1);
    CHECK(is_tight(HomClassMap::identity({disc})));
    CHECK_FALSE(is_tight(scalar(disc, disc, Rational(1, 2))));
    // Simple middle factor with pullback -r3/r2.
    const auto su32 = HermitianFactor::su(3, 2);
    const auto sp6 = HermitianFactor::sp(3);
    CHECK(is_tight(scalar(su32, sp6, Rational(-3, 2))));
    CHECK_THROWS_AS(scalar(disc, su32, Rational(3)), std::invalid_argument);
    CHECK_THROWS_AS(HomClassMap({disc}, {disc}, {{Rational(1), Rational(1)}}), std::invalid_argument);
}

TEST_CASE("composition")
{
    const auto disc = HermitianFactor::su(1, 1);
    const auto su22 = HermitianFactor::su(2, 2);
    const auto sp4 = HermitianFactor::sp(2);
    const auto f = scalar(disc, su22, Rational(2));
    const auto h = scalar(su22, sp4, Rational(1));
    CHECK(is_tight(compose(f, h)));
    CHECK(compose(HomClassMap::identity({disc}), HomClassMap::identity({disc})).matrix() ==
          HomClassMap::identity({disc}).matrix());
    CHECK_THROWS_AS(compose(f, f), std::invalid_argument);

    const auto nontight = scalar(disc, su22, Rational(1));
    CHECK_FALSE(is_tight(compose(nontight, h)));

    // Projections of a product.
    const FactorProduct pair{disc, su22};
    const HomClassMap into({disc}, pair, {{Rational(1), Rational(-2)}});
    CHECK_FALSE(is_tight(into));
    CHECK(is_tight(compose(into, HomClassMap::projection(pair, 0))));
    CHECK(is_tight(compose(into, HomClassMap::projection(pair, 1))));
}

TEST_CASE("composition chain with strictly positive h")
{
    const auto disc = HermitianFactor::su(1, 1);
    const auto su22 = HermitianFactor::su(2, 2);
    const FactorProduct middle{disc, disc};
    // f: disc -> disc x disc with coefficients (1, -1): nontight by cancellation only.
    const HomClassMap f({disc}, middle, {{Rational(1), Rational(-1)}});
    const HomClassMap h(middle, {su22}, {{Rational(1)}, {Rational(1)}});
    const auto chain = composition_chain(f, h);
    CHECK(chain.composite_norm == 0);
    CHECK(chain.weighted_source_norm == 2);
    CHECK(chain.weighted_middle_rank == 2);
    CHECK(chain.target_norm == 2);
    CHECK(chain.ordered());
    CHECK(chain.strict());

    const HomClassMap g({disc}, middle, {{Rational(1, 2), Rational(1)}});
    const HomClassMap h2(middle, {su22}, {{Rational(1)}, {Rational(1, 2)}});
    const auto c2 = composition_chain(g, h2);
    CHECK(c2.composite_norm == 1);
    CHECK(c2.weighted_source_norm == 1);
    CHECK(c2.weighted_middle_rank == Rational(3, 2));
    CHECK(c2.target_norm == 2);

    const HomClassMap zero_h(middle, {su22}, {{Rational(1)}, {Rational(0)}});
    CHECK_THROWS_AS(composition_chain(f, zero_h), std::invalid_argument);
}

TEST_CASE("lemma fixtures pass in both directions")
{
    for (const auto& r : kahler_lemma_fixtures()) {
        INFO(r.lemma);
        CHECK(r.cases == 400);
        CHECK(r.failures == 0);
        CHECK(r.positive_cases > 0);
        CHECK(r.negative_cases > 0);
        CHECK(r.passed());
    }
    const auto a = check_factor12(7, 50);
    const auto b = check_factor12(7, 50);
    CHECK(a.positive_cases == b.positive_cases);
}
