#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tight/branching.hpp"
#include "tight/kahler.hpp"
#include "tight/rootsys.hpp"

namespace tight {

enum class AlgebraKind { Su11, Su11xSu11, Sp4R, Sp4RxSu11, Su21, SuN1, SoStar };

struct AlgebraId {
    AlgebraKind kind = AlgebraKind::Su11;
    /// n for su(n,1), p for so*(2p); unused otherwise.
    std::int64_t parameter = 0;

    static AlgebraId su_n1(std::int64_t n);
    static AlgebraId so_star(std::int64_t p);
    bool operator==(const AlgebraId&) const = default;
};

/// CLI spelling: su11, su11xsu11, sp4, sp4su11, su21.
AlgebraId parse_algebra(const std::string& text);
std::string to_string(const AlgebraId& algebra);
/// su(1,1)xsu(1,1) is A1xA1, sp(4,R)+su(1,1) is C2xA1.
RootSystemKind root_system_kind(const AlgebraId& algebra);
bool in_classification_scope(const AlgebraId& algebra);

/// "1,0" -> {1, 0}.
std::vector<std::int64_t> parse_weight(const std::string& text);
std::string weight_string(const std::vector<std::int64_t>& weight);

enum class WitnessKind {
    PairingEquality,
    PairingInequality,
    EvenEvaluation,
    ClebschGordanEven,
    TensorFactorNontight,
    BranchFactorNontight,
    AllFactorsTight,
    ZeroClass,
    TheoremClause,
};

std::string to_string(WitnessKind kind);
WitnessKind parse_witness_kind(const std::string& text);

/// One weight of a proof chain together with its coroot evaluation.
struct ChainStep {
    Weight weight;
    Rational evaluation;
    bool operator==(const ChainStep&) const = default;
};

struct Witness {
    WitnessKind kind = WitnessKind::TheoremClause;
    /// Selector of the regular subalgebra, e.g. "a1+a2".
    std::optional<std::string> subalgebra;
    /// Root whose coroot the evaluations are taken on.
    std::optional<std::string> coroot;
    std::optional<Weight> weight;
    std::optional<Rational> evaluation;
    std::optional<Rational> pairing_lhs;
    std::optional<Rational> pairing_rhs;
    /// Restricted factor certified nontight (or tight), as highest weights.
    std::optional<std::vector<std::int64_t>> factor;
    /// Structure choice the pairing values refer to, e.g. "(+,-)".
    std::optional<std::string> structure;
    std::vector<ChainStep> chain;
    std::string clause;

    bool operator==(const Witness&) const = default;
};

struct TightnessVerdict {
    AlgebraId algebra;
    std::vector<std::int64_t> highest_weight;
    bool tight = false;
    std::optional<bool> holomorphic;
    Witness witness;
};

/// The tight weights as stated in the classification theorems.
bool theorem_rule(const AlgebraId& algebra, const std::vector<std::int64_t>& weight);

/// Verdict from the theorem statement, witness from re-running its proof.
TightnessVerdict classify(const AlgebraId& algebra, const std::vector<std::int64_t>& weight);

/// Verdict computed independently: pairing for su(1,1)-type domains,
/// restriction to regular subalgebras then pairing of each factor otherwise.
TightnessVerdict constructive_verdict(const AlgebraId& algebra, const std::vector<std::int64_t>& weight);

struct CrossCheck {
    TightnessVerdict theorem;
    TightnessVerdict constructive;
    bool agree = false;
};

/// Throws std::logic_error on disagreement unless allow_disagreement.
CrossCheck cross_check(const AlgebraId& algebra, const std::vector<std::int64_t>& weight,
                       bool allow_disagreement = false);

/// Recomputes the recorded values of a witness; false if anything differs.
bool replay_witness(const TightnessVerdict& verdict);

struct SweepResult {
    AlgebraId algebra;
    std::int64_t bound = 0;
    std::vector<CrossCheck> rows;
    std::int64_t tight_count = 0;
    std::int64_t nontight_count = 0;
    bool agreement = true;
};

/// All dominant weights with coordinate sum <= bound, lexicographic, cross-checked.
SweepResult sweep(const AlgebraId& algebra, std::int64_t bound);

/// Class-level model of the verdict: the domain (or the tightly embedded su(1,1)-type
/// subalgebra the proof restricts to) mapped into su(p,q). Empty for the zero weight.
std::optional<HomClassMap> verdict_class_map(const TightnessVerdict& verdict);

/// p even or p < 5; the reduction is described in what().
class ReducedCase : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct InfeasibilityReport {
    std::int64_t p = 0;
    /// n = n1 = p - 1 forced by tightness.
    std::int64_t n = 0;
    /// l = 2p - 3n from the dimension count.
    std::int64_t l = 0;
    /// p - 3 + l, identically zero.
    std::int64_t residual = 0;
    /// Solutions (k, n, l) with 0 <= k <= n and l >= 0 found by enumeration.
    std::int64_t enumerated_solutions = 0;
    bool infeasible = false;
};

InfeasibilityReport verify_su_n1_to_sostar(std::int64_t p);

struct EmbeddingRow {
    HermitianFactor algebra;
    /// "sp(4,R)", "sp(4,R)+su(1,1)" or "su(2,1)"; empty for su(1,1).
    std::string holomorphic_source;
    FactorProduct tube_subalgebra;
    /// Tight holomorphic su(n,n) target, tube type only.
    std::optional<HermitianFactor> tube_target;
};

/// Rows for su(p,q) (q <= p <= 5), sp(2n,R) (n <= 5), so*(2n) (3 <= n <= 10), so(2,n) (3 <= n <= 10).
std::vector<EmbeddingRow> embedding_table();
EmbeddingRow embedding_row(const HermitianFactor& algebra);

}  // namespace tight
