#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tight/rootsys.hpp"
#include "tight/su11.hpp"

namespace tight {

enum class TargetKind { Sl2, Sl2xSl2 };

/// Regular subalgebra g(B): coroots of B plus root spaces of C = ZB meet A.
struct SubalgebraSpec {
    std::vector<Vec> roots_B;
    std::vector<Vec> generated_roots_C;
    TargetKind target_kind = TargetKind::Sl2;
    /// Selector-style labels of B, e.g. {"a2", "2a1+a2"}.
    std::vector<std::string> labels;

    std::string selector() const;
};

/// Raised when B violates one of the regular-subalgebra conditions (1-3).
class SubalgebraError : public std::invalid_argument {
public:
    SubalgebraError(int condition, const std::string& what)
        : std::invalid_argument(what), condition_(condition) {}
    int condition() const { return condition_; }

private:
    int condition_;
};

SubalgebraSpec make_subalgebra(const RootSystem& system, const std::vector<Vec>& roots_B);

/// Selector grammar: comma-separated roots, each a signed sum of terms [n]a<i>,
/// e.g. "a1+a2" or "a2,2a1+a2".
SubalgebraSpec parse_subalgebra(const RootSystem& system, const std::string& selector);

/// Evaluations (<mu, beta coroot>)_{beta in B} of every weight, with multiplicity.
using EvaluationMultiset = std::map<std::vector<std::int64_t>, std::int64_t>;

EvaluationMultiset evaluation_multiset(const RootSystem& system, const Weight& highest, const SubalgebraSpec& sub);

struct BranchingResult {
    TargetKind target_kind = TargetKind::Sl2;
    /// One entry per irreducible factor (size 1 for sl2, 2 for sl2+sl2), descending.
    std::vector<std::vector<std::int64_t>> factors;
    std::vector<SignaturePair> signatures;

    std::int64_t dimension() const;
};

BranchingResult restrict_rep(const RootSystem& system, const Weight& highest, const SubalgebraSpec& sub);

/// Peels sl2 or sl2+sl2 strings greedily from the top of an evaluation multiset.
BranchingResult peel_strings(EvaluationMultiset evaluations, TargetKind kind);

/// Evaluation multiset of a list of factors; inverse of peel_strings.
EvaluationMultiset expand_factors(const BranchingResult& result);

struct EvenWitness {
    Weight weight;
    std::vector<Rational> evaluations;
    std::size_t component = 0;
    Rational value;
};

/// A weight with an even nonzero evaluation on some coroot of B, searched in the
/// order highest weight, lowest weight, then by depth.
std::optional<EvenWitness> even_witness(const RootSystem& system, const Weight& highest, const SubalgebraSpec& sub);

}  // namespace tight
