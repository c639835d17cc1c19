#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tight/classify.hpp"

using namespace tight;

namespace {

const AlgebraId kSu11 = parse_algebra("su11");
const AlgebraId kSu11x2 = parse_algebra("su11xsu11");
const AlgebraId kSp4 = parse_algebra("sp4");
const AlgebraId kSp4Su11 = parse_algebra("sp4su11");
const AlgebraId kSu21 = parse_algebra("su21");

std::set<std::vector<std::int64_t>> tight_set(const SweepResult& s)
{
    std::set<std::vector<std::int64_t>> out;
    for (const auto& row : s.rows)
        if (row.theorem.tight)
            out.insert(row.theorem.highest_weight);
    return out;
}

}  // namespace

TEST_CASE("algebra names and weights")
{
    CHECK(to_string(parse_algebra("sp4su11")) == "sp4su11");
    CHECK_THROWS_AS(parse_algebra("so25"), std::invalid_argument);
    CHECK(parse_weight("1,0,3") == std::vector<std::int64_t>{1, 0, 3});
    CHECK_THROWS_AS(parse_weight("1,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("a"), std::invalid_argument);
    CHECK_THROWS_AS(classify(kSp4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(classify(kSu21, {-1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(classify(AlgebraId::su_n1(3), {1}), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraId::so_star(3), std::invalid_argument);
    CHECK(root_system_kind(kSp4Su11) == parse_root_system_kind("C2xA1"));
}

TEST_CASE("single verdicts")
{
    const auto su21 = classify(kSu21, {1, 0});
    CHECK(su21.tight);
    CHECK(su21.holomorphic == true);

    const auto sp4 = classify(kSp4, {0, 2});
    CHECK_FALSE(sp4.tight);
    CHECK(sp4.holomorphic == false);
    CHECK(sp4.witness.kind == WitnessKind::EvenEvaluation);
    CHECK(sp4.witness.subalgebra == "a1+a2");
    CHECK(sp4.witness.evaluation == 4);

    CHECK(classify(kSp4Su11, {1, 0, 0}).tight);
    CHECK_FALSE(classify(kSp4Su11, {1, 0, 0}).holomorphic.has_value());

    const auto su11 = classify(kSu11, {4});
    CHECK_FALSE(su11.tight);
    CHECK(su11.witness.kind == WitnessKind::PairingInequality);
    CHECK(su11.witness.pairing_lhs == 0);
    CHECK(su11.witness.pairing_rhs == Rational(3, 2) - Rational(1, 2));

    const auto zero = classify(kSu11, {0});
    CHECK_FALSE(zero.tight);
    CHECK(zero.witness.kind == WitnessKind::ZeroClass);
    CHECK(classify(kSp4Su11, {0, 0, 0}).witness.kind == WitnessKind::ZeroClass);
}

TEST_CASE("witnesses follow the proof chains")
{
    // sp(4,R), second type: evaluations k+l and k+l-1 on H_{2a1+a2}.
    const auto v = classify(kSp4, {2, 1});
    CHECK(v.witness.coroot == "2a1+a2");
    REQUIRE(v.witness.chain.size() == 2);
    CHECK(v.witness.chain[0].evaluation == 3);
    CHECK(v.witness.chain[1].weight == Weight{2, 0});
    CHECK(v.witness.chain[1].evaluation == 2);
    CHECK(v.witness.evaluation == 2);

    // su(2,1), l = 0: omega_{k,0}, omega_{k-1,-1}.
    const auto a = classify(kSu21, {3, 0});
    REQUIRE(a.witness.chain.size() == 2);
    CHECK(a.witness.chain[1].weight == Weight{2, -1});
    CHECK(a.witness.evaluation == 2);
    // k = 0: omega_{-2,l-2} evaluates to -2.
    const auto b = classify(kSu21, {0, 4});
    CHECK(b.witness.weight == Weight{-2, 2});
    CHECK(b.witness.evaluation == -2);
    // k, l >= 1: omega_{k+1,l-2}.
    const auto c = classify(kSu21, {1, 1});
    CHECK(c.witness.weight == Weight{2, -1});
    CHECK(c.witness.evaluation == 2);

    const auto d = classify(kSu11x2, {1, 1});
    CHECK(d.witness.kind == WitnessKind::ClebschGordanEven);
    CHECK(d.witness.evaluation == 2);

    const auto e = classify(kSp4Su11, {0, 1, 1});
    CHECK(e.witness.kind == WitnessKind::TensorFactorNontight);
    CHECK(e.witness.subalgebra == "a1+a2");
    CHECK(e.witness.factor == std::vector<std::int64_t>{2, 1});
    const auto f = classify(kSp4Su11, {1, 1, 2});
    CHECK(f.witness.subalgebra == "2a1+a2,a2");
    CHECK(f.witness.factor.value()[0] % 2 == 0);
}

TEST_CASE("cross-check examples")
{
    const auto sp4 = cross_check(kSp4, {1, 0});
    CHECK(sp4.agree);
    CHECK(sp4.constructive.tight);
    CHECK(sp4.constructive.witness.kind == WitnessKind::AllFactorsTight);

    const auto su21 = cross_check(kSu21, {2, 0});
    CHECK(su21.agree);
    CHECK_FALSE(su21.constructive.tight);
    REQUIRE(su21.theorem.witness.chain.size() == 2);
    CHECK(su21.theorem.witness.chain[0].evaluation == 2);
    CHECK(su21.theorem.witness.chain[1].evaluation == 1);

    const auto pair = cross_check(kSu11x2, {1, 1});
    CHECK(pair.agree);
    CHECK_FALSE(pair.constructive.tight);
    CHECK_THROWS_AS(cross_check(AlgebraId::su_n1(2), {1, 0}), std::invalid_argument);
}

TEST_CASE("sweeps")
{
    CHECK(sweep(kSu11, 20).tight_count == 10);
    CHECK(tight_set(sweep(kSp4, 8)) == std::set<std::vector<std::int64_t>>{{1, 0}});
    CHECK(tight_set(sweep(kSu21, 8)) == std::set<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
    const auto s = sweep(kSp4Su11, 4);
    CHECK(s.agreement);
    CHECK(tight_set(s) == std::set<std::vector<std::int64_t>>{{0, 0, 1}, {0, 0, 3}, {1, 0, 0}});
    CHECK(s.rows.front().theorem.highest_weight == std::vector<std::int64_t>{0, 0, 0});
    CHECK_THROWS_AS(sweep(kSu11, 0), std::invalid_argument);
}

TEST_CASE("every witness replays and tampering is caught")
{
    for (const auto& alg : {kSu11, kSu11x2, kSp4, kSp4Su11, kSu21}) {
        const auto s = sweep(alg, alg == kSp4Su11 ? 5 : 8);
        for (const auto& row : s.rows) {
            INFO(to_string(alg) << " " << weight_string(row.theorem.highest_weight));
            CHECK(replay_witness(row.theorem));
            CHECK(replay_witness(row.constructive));
        }
    }
    auto v = classify(kSp4, {0, 2});
    v.witness.evaluation = Rational(2);
    CHECK_FALSE(replay_witness(v));
    auto w = classify(kSu11, {3});
    w.witness.pairing_lhs = Rational(7, 3);
    CHECK_FALSE(replay_witness(w));
    auto x = classify(kSu21, {0, 2});
    x.witness.chain.back().weight = Weight{5, 5};
    CHECK_FALSE(replay_witness(x));
}

TEST_CASE("class maps: tight verdicts are tight, others lose norm")
{
    for (const auto& alg : {kSu11, kSu11x2, kSp4, kSp4Su11, kSu21}) {
        for (const auto& row : sweep(alg, 6).rows) {
            const auto map = verdict_class_map(row.theorem);
            if (row.theorem.highest_weight == std::vector<std::int64_t>(row.theorem.highest_weight.size(), 0)) {
                CHECK_FALSE(map);
                continue;
            }
            REQUIRE(map);
            const Rational lost = total_rank(map->target()) - norm(map->pullback_distinguished());
            CHECK(lost >= 0);
            CHECK(is_tight(*map) == row.theorem.tight);
        }
    }
}

TEST_CASE("su(n,1) into so*(2p): the constraint system is infeasible")
{
    const auto r5 = verify_su_n1_to_sostar(5);
    CHECK(r5.n == 4);
    CHECK(r5.l == -2);
    CHECK(r5.residual == 0);
    CHECK(r5.infeasible);
    const auto r7 = verify_su_n1_to_sostar(7);
    CHECK(r7.n == 6);
    CHECK(r7.l == -4);
    CHECK(r7.enumerated_solutions == 0);
    CHECK_THROWS_AS(verify_su_n1_to_sostar(3), ReducedCase);
    CHECK_THROWS_AS(verify_su_n1_to_sostar(4), ReducedCase);
    CHECK_THROWS_AS(verify_su_n1_to_sostar(2), std::invalid_argument);
}

TEST_CASE("embedding table")
{
    const auto rows = embedding_table();
    CHECK(rows.size() == 36);
    for (const auto& row : rows) {
        INFO(row.algebra.name);
        CHECK(total_rank(row.tube_subalgebra) == row.algebra.rank);
        if (row.algebra.tube_type)
            CHECK(row.tube_target.has_value());
        else
            CHECK_FALSE(row.tube_target.has_value());
    }
    CHECK(embedding_row(HermitianFactor::so_star(5)).tube_subalgebra.front() == HermitianFactor::so_star(4));
    CHECK(embedding_row(HermitianFactor::so_star(3)).holomorphic_source == "su(2,1)");
    CHECK(embedding_row(HermitianFactor::su(4, 1)).holomorphic_source == "su(2,1)");
    CHECK(embedding_row(HermitianFactor::su(3, 3)).holomorphic_source == "sp(4,R)+su(1,1)");
    CHECK(embedding_row(HermitianFactor::sp(2)).holomorphic_source == "sp(4,R)");
    CHECK(embedding_row(HermitianFactor::so2(5)).tube_target == HermitianFactor::su(4, 4));
    CHECK(embedding_row(HermitianFactor::su(1, 1)).holomorphic_source.empty());
}
