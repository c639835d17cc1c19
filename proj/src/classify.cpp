#include "tight/classify.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace tight {

namespace {

const RootSystem& cached_system(const RootSystemKind& kind)
{
    static std::map<std::string, RootSystem> cache;
    const std::string key = to_string(kind);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_root_system(kind)).first;
    return it->second;
}

const RootSystem& c2() { return cached_system(RootSystemKind::simple(SimpleKind::C2)); }
const RootSystem& a2() { return cached_system(RootSystemKind::simple(SimpleKind::A2)); }

Weight to_weight(const std::vector<std::int64_t>& w)
{
    std::vector<Rational> coords;
    for (auto x : w)
        coords.emplace_back(x);
    return Weight(std::move(coords));
}

bool is_zero(const std::vector<std::int64_t>& w)
{
    return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t as_int(const Rational& r)
{
    if (!is_integer(r))
        throw std::logic_error("expected an integer, got " + to_string(r));
    return r.numerator();
}

bool even_nonzero(std::int64_t x) { return x != 0 && x % 2 == 0; }

std::size_t expected_length(const AlgebraId& algebra)
{
    switch (algebra.kind) {
    case AlgebraKind::Su11: return 1;
    case AlgebraKind::Su11xSu11:
    case AlgebraKind::Sp4R:
    case AlgebraKind::Su21: return 2;
    case AlgebraKind::Sp4RxSu11: return 3;
    default: break;
    }
    throw std::invalid_argument(to_string(algebra) + " has no tightness classification here");
}

void validate_weight(const AlgebraId& algebra, const std::vector<std::int64_t>& weight)
{
    const std::size_t n = expected_length(algebra);
    if (weight.size() != n)
        throw std::invalid_argument("weight for " + to_string(algebra) + " needs " + std::to_string(n) +
                                    " coordinates, got " + std::to_string(weight.size()));
    for (auto x : weight)
        if (x < 0)
            throw std::invalid_argument("weight " + weight_string(weight) + " is not dominant");
}

Rational eval_on(const RootSystem& system, const Weight& w, const std::string& coroot)
{
    return system.eval_on_coroot(w, parse_subalgebra(system, coroot).roots_B.front());
}

TightnessVerdict base_verdict(const AlgebraId& algebra, const std::vector<std::int64_t>& weight)
{
    TightnessVerdict v;
    v.algebra = algebra;
    v.highest_weight = weight;
    return v;
}

Witness zero_witness()
{
    Witness w;
    w.kind = WitnessKind::ZeroClass;
    w.clause = "trivial representation pulls the Kaehler class back to zero";
    return w;
}

Witness pairing_witness(const PairingCheck& check, std::optional<std::string> structure = std::nullopt)
{
    Witness w;
    w.kind = check.tight ? WitnessKind::PairingEquality : WitnessKind::PairingInequality;
    w.pairing_lhs = check.lhs;
    w.pairing_rhs = check.rhs;
    w.structure = std::move(structure);
    return w;
}

struct FactorPair {
    std::int64_t first;
    std::int64_t second;
};

constexpr const char* kDiscSelector = "a1+a2";
constexpr const char* kPolydiscSelector = "a2,2a1+a2";
/// sl2 x sl2 inside sp(4,R) + su(1,1): 2a1+a2 on the first factor, a2 diagonally with su(1,1).
constexpr const char* kProductSelector = "2a1+a2,a2";

std::vector<FactorPair> disc_route_factors(std::int64_t i, std::int64_t j, std::int64_t k)
{
    std::vector<FactorPair> out;
    const auto sub = parse_subalgebra(c2(), kDiscSelector);
    for (const auto& f : restrict_rep(c2(), Weight{i, j}, sub).factors)
        if (f[0] != 0 || k != 0)
            out.push_back({f[0], k});
    return out;
}

std::vector<FactorPair> product_route_factors(std::int64_t i, std::int64_t j, std::int64_t k)
{
    std::vector<FactorPair> out;
    const auto sub = parse_subalgebra(c2(), kPolydiscSelector);
    for (const auto& f : restrict_rep(c2(), Weight{i, j}, sub).factors)
        for (auto m : clebsch_gordan(f[0], k))
            if (f[1] != 0 || m != 0)
                out.push_back({f[1], m});
    return out;
}

Witness tensor_factor_witness(const std::string& selector, FactorPair pair, const TensorPairing& tp)
{
    Witness w;
    w.kind = tp.tight() ? WitnessKind::AllFactorsTight : WitnessKind::TensorFactorNontight;
    w.subalgebra = selector;
    w.factor = std::vector<std::int64_t>{pair.first, pair.second};
    w.pairing_lhs = tp.checks.front().lhs;
    w.pairing_rhs = tp.checks.front().rhs;
    w.structure = to_string(tp.structures.front());
    return w;
}

// ---- proof witnesses ------------------------------------------------------

Witness su11_proof(std::int64_t k)
{
    return pairing_witness(su11_pairing(k));
}

Witness su11xsu11_proof(std::int64_t k, std::int64_t l, bool tight)
{
    const TensorPairing tp = tensor_pairing(k, l);
    if (tight) {
        if (!tp.tight())
            throw std::logic_error("su(1,1)xsu(1,1): stated tight weight fails the pairing");
        return pairing_witness(tp.checks[*tp.tight_structure], to_string(tp.structures[*tp.tight_structure]));
    }
    if ((k + l) % 2 == 0) {
        Witness w;
        w.kind = WitnessKind::ClebschGordanEven;
        w.evaluation = Rational(k + l);
        w.factor = std::vector<std::int64_t>{k + l};
        w.clause = "every diagonal restriction has only even highest weights";
        return w;
    }
    if (tp.tight())
        throw std::logic_error("su(1,1)xsu(1,1): nontight weight passes the pairing");
    return pairing_witness(tp.checks.front(), to_string(tp.structures.front()));
}

/// Chain of the sp(4,R) case split; evaluations on the returned coroot.
std::pair<std::string, std::vector<ChainStep>> sp4_chain(std::int64_t k, std::int64_t l)
{
    const Weight top{k, l};
    std::vector<ChainStep> chain;
    if (k == 0) {
        chain.push_back({top, eval_on(c2(), top, "a1+a2")});
        return {"a1+a2", chain};
    }
    chain.push_back({top, eval_on(c2(), top, "2a1+a2")});
    const Weight next{k, l - 1};
    if (!c2().weight_support(top).count(next))
        throw std::logic_error("sp(4,R): " + to_string(next) + " missing from the representation");
    chain.push_back({next, eval_on(c2(), next, "2a1+a2")});
    return {"2a1+a2", chain};
}

Witness even_from_chain(const std::string& selector, const std::string& coroot, std::vector<ChainStep> chain)
{
    for (const auto& step : chain) {
        if (even_nonzero(as_int(step.evaluation))) {
            Witness w;
            w.kind = WitnessKind::EvenEvaluation;
            w.subalgebra = selector;
            w.coroot = coroot;
            w.weight = step.weight;
            w.evaluation = step.evaluation;
            w.chain = std::move(chain);
            return w;
        }
    }
    throw std::logic_error("proof chain has no even nonzero evaluation");
}

Witness theorem_clause(const std::string& clause)
{
    Witness w;
    w.kind = WitnessKind::TheoremClause;
    w.clause = clause;
    return w;
}

Witness sp4_proof(std::int64_t k, std::int64_t l, bool tight)
{
    if (tight)
        return theorem_clause("rho_10 is holomorphic and tight");
    auto [coroot, chain] = sp4_chain(k, l);
    return even_from_chain(k == 0 ? kDiscSelector : kPolydiscSelector, coroot, std::move(chain));
}

std::vector<ChainStep> su21_chain(std::int64_t k, std::int64_t l)
{
    std::vector<Weight> weights;
    if (l == 0)
        weights = {Weight{k, 0}, Weight{k - 1, -1}};
    else if (k == 0)
        weights = {Weight{-1, l - 1}, Weight{-2, l - 2}};
    else
        weights = {Weight{k, l}, Weight{k + 1, l - 2}};
    const auto support = a2().weight_support(Weight{k, l});
    std::vector<ChainStep> chain;
    for (const auto& w : weights) {
        if (!support.count(w))
            throw std::logic_error("su(2,1): " + to_string(w) + " missing from the representation");
        chain.push_back({w, eval_on(a2(), w, "a1")});
    }
    return chain;
}

Witness su21_proof(std::int64_t k, std::int64_t l, bool tight)
{
    if (tight)
        return theorem_clause("standard representation or its dual: holomorphic and tight");
    return even_from_chain("a1", "a1", su21_chain(k, l));
}

Witness sp4su11_proof(std::int64_t i, std::int64_t j, std::int64_t k, bool tight)
{
    if (tight)
        return theorem_clause(i == 1 ? "rho_10 on sp(4,R), trivial on su(1,1)"
                                     : "trivial on sp(4,R), odd symmetric power on su(1,1)");
    const bool disc_case = i == 0 || (i == 1 && j == 0);
    if (disc_case) {
        // The diagonal disc case; also covers (0,0,k) and (1,0,k), which need no sp(4,R) argument.
        std::optional<Witness> chained;
        if (i == 0 && j > 0)
            chained = sp4_proof(i, j, false);
        for (const auto& pair : disc_route_factors(i, j, k)) {
            if (chained && !(pair.first == as_int(*chained->evaluation)))
                continue;
            const TensorPairing tp = tensor_pairing(pair.first, pair.second);
            if (tp.tight())
                continue;
            Witness w = tensor_factor_witness(kDiscSelector, pair, tp);
            if (chained) {
                w.coroot = chained->coroot;
                w.weight = chained->weight;
                w.evaluation = chained->evaluation;
                w.chain = chained->chain;
            }
            return w;
        }
        throw std::logic_error("sp(4,R)+su(1,1): disc route found no nontight factor");
    }
    const Witness chained = sp4_proof(i, j, false);
    const std::int64_t y = as_int(*chained.evaluation);
    const auto sub = parse_subalgebra(c2(), kPolydiscSelector);
    for (const auto& f : restrict_rep(c2(), Weight{i, j}, sub).factors) {
        if (!even_nonzero(f[1]))
            continue;
        const FactorPair pair{f[1], f[0] + k};
        const TensorPairing tp = tensor_pairing(pair.first, pair.second);
        if (tp.tight())
            throw std::logic_error("sp(4,R)+su(1,1): even factor passes the pairing");
        Witness w = tensor_factor_witness(kProductSelector, pair, tp);
        w.coroot = chained.coroot;
        w.weight = chained.weight;
        w.evaluation = Rational(y);
        w.chain = chained.chain;
        return w;
    }
    throw std::logic_error("sp(4,R)+su(1,1): no even factor in the polydisc restriction");
}

// ---- constructive route ---------------------------------------------------

std::optional<Witness> first_nontight_branch(const RootSystem& system, const Weight& highest,
                                             const std::string& selector)
{
    const auto sub = parse_subalgebra(system, selector);
    for (const auto& f : restrict_rep(system, highest, sub).factors) {
        if (f.size() == 1) {
            if (f[0] == 0)
                continue;
            const PairingCheck pc = su11_pairing(f[0]);
            if (pc.tight)
                continue;
            Witness w = pairing_witness(pc);
            w.kind = WitnessKind::BranchFactorNontight;
            w.subalgebra = selector;
            w.factor = f;
            return w;
        }
        if (f[0] == 0 && f[1] == 0)
            continue;
        const TensorPairing tp = tensor_pairing(f[0], f[1]);
        if (!tp.tight())
            return tensor_factor_witness(selector, {f[0], f[1]}, tp);
    }
    return std::nullopt;
}

Witness all_tight(const std::string& selectors)
{
    Witness w;
    w.kind = WitnessKind::AllFactorsTight;
    w.subalgebra = selectors;
    return w;
}

}  // namespace

AlgebraId AlgebraId::su_n1(std::int64_t n)
{
    if (n < 2)
        throw std::invalid_argument("su(n,1) needs n >= 2");
    return {AlgebraKind::SuN1, n};
}

AlgebraId AlgebraId::so_star(std::int64_t p)
{
    if (p < 4)
        throw std::invalid_argument("so*(2p) needs p >= 4");
    return {AlgebraKind::SoStar, p};
}

AlgebraId parse_algebra(const std::string& text)
{
    static const std::map<std::string, AlgebraKind> names{
        {"su11", AlgebraKind::Su11}, {"su11xsu11", AlgebraKind::Su11xSu11}, {"sp4", AlgebraKind::Sp4R},
        {"sp4su11", AlgebraKind::Sp4RxSu11}, {"su21", AlgebraKind::Su21}};
    auto it = names.find(text);
    if (it == names.end())
        throw std::invalid_argument("unknown algebra '" + text + "'");
    return {it->second, 0};
}

std::string to_string(const AlgebraId& algebra)
{
    switch (algebra.kind) {
    case AlgebraKind::Su11: return "su11";
    case AlgebraKind::Su11xSu11: return "su11xsu11";
    case AlgebraKind::Sp4R: return "sp4";
    case AlgebraKind::Sp4RxSu11: return "sp4su11";
    case AlgebraKind::Su21: return "su21";
    case AlgebraKind::SuN1: return "su(" + std::to_string(algebra.parameter) + ",1)";
    case AlgebraKind::SoStar: return "so*(" + std::to_string(2 * algebra.parameter) + ")";
    }
    return "?";
}

RootSystemKind root_system_kind(const AlgebraId& algebra)
{
    switch (algebra.kind) {
    case AlgebraKind::Su11: return {{SimpleKind::A1}};
    case AlgebraKind::Su11xSu11: return {{SimpleKind::A1, SimpleKind::A1}};
    case AlgebraKind::Sp4R: return {{SimpleKind::C2}};
    case AlgebraKind::Sp4RxSu11: return {{SimpleKind::C2, SimpleKind::A1}};
    case AlgebraKind::Su21: return {{SimpleKind::A2}};
    default: break;
    }
    throw std::invalid_argument(to_string(algebra) + " has no root system model here");
}

bool in_classification_scope(const AlgebraId& algebra)
{
    return algebra.kind != AlgebraKind::SuN1 && algebra.kind != AlgebraKind::SoStar;
}

std::vector<std::int64_t> parse_weight(const std::string& text)
{
    static const std::regex int_re(R"(\s*-?\d+\s*)");
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (!std::regex_match(part, int_re))
            throw std::invalid_argument("bad weight '" + text + "'");
        out.push_back(std::stoll(part));
    }
    if (out.empty() || (!text.empty() && text.back() == ','))
        throw std::invalid_argument("bad weight '" + text + "'");
    return out;
}

std::string weight_string(const std::vector<std::int64_t>& weight)
{
    std::string out;
    for (std::size_t i = 0; i < weight.size(); ++i)
        out += (i ? "," : "") + std::to_string(weight[i]);
    return out;
}

std::string to_string(WitnessKind kind)
{
    switch (kind) {
    case WitnessKind::PairingEquality: return "pairing_equality";
    case WitnessKind::PairingInequality: return "pairing_inequality";
    case WitnessKind::EvenEvaluation: return "even_evaluation";
    case WitnessKind::ClebschGordanEven: return "clebsch_gordan_even";
    case WitnessKind::TensorFactorNontight: return "tensor_factor_nontight";
    case WitnessKind::BranchFactorNontight: return "branch_factor_nontight";
    case WitnessKind::AllFactorsTight: return "all_factors_tight";
    case WitnessKind::ZeroClass: return "zero_class";
    case WitnessKind::TheoremClause: return "theorem_clause";
    }
    return "?";
}

WitnessKind parse_witness_kind(const std::string& text)
{
    for (auto k : {WitnessKind::PairingEquality, WitnessKind::PairingInequality, WitnessKind::EvenEvaluation,
                   WitnessKind::ClebschGordanEven, WitnessKind::TensorFactorNontight,
                   WitnessKind::BranchFactorNontight, WitnessKind::AllFactorsTight, WitnessKind::ZeroClass,
                   WitnessKind::TheoremClause})
        if (to_string(k) == text)
            return k;
    throw std::invalid_argument("unknown witness kind '" + text + "'");
}

bool theorem_rule(const AlgebraId& algebra, const std::vector<std::int64_t>& w)
{
    validate_weight(algebra, w);
    switch (algebra.kind) {
    case AlgebraKind::Su11: return w[0] % 2 == 1;
    case AlgebraKind::Su11xSu11: return (w[0] % 2 == 1 && w[1] == 0) || (w[0] == 0 && w[1] % 2 == 1);
    case AlgebraKind::Sp4R: return w[0] == 1 && w[1] == 0;
    case AlgebraKind::Sp4RxSu11:
        return (w[0] == 1 && w[1] == 0 && w[2] == 0) || (w[0] == 0 && w[1] == 0 && w[2] % 2 == 1);
    case AlgebraKind::Su21: return (w[0] == 1 && w[1] == 0) || (w[0] == 0 && w[1] == 1);
    default: break;
    }
    return false;
}

TightnessVerdict classify(const AlgebraId& algebra, const std::vector<std::int64_t>& w)
{
    TightnessVerdict v = base_verdict(algebra, w);
    v.tight = theorem_rule(algebra, w);
    if (algebra.kind == AlgebraKind::Sp4R)
        v.holomorphic = v.tight;
    if (algebra.kind == AlgebraKind::Su21)
        v.holomorphic = v.tight;
    if (is_zero(w)) {
        v.witness = zero_witness();
        return v;
    }
    switch (algebra.kind) {
    case AlgebraKind::Su11: v.witness = su11_proof(w[0]); break;
    case AlgebraKind::Su11xSu11: v.witness = su11xsu11_proof(w[0], w[1], v.tight); break;
    case AlgebraKind::Sp4R: v.witness = sp4_proof(w[0], w[1], v.tight); break;
    case AlgebraKind::Sp4RxSu11: v.witness = sp4su11_proof(w[0], w[1], w[2], v.tight); break;
    case AlgebraKind::Su21: v.witness = su21_proof(w[0], w[1], v.tight); break;
    default: break;
    }
    const bool witness_tight = v.witness.kind == WitnessKind::PairingEquality ||
                               v.witness.kind == WitnessKind::TheoremClause;
    if (witness_tight != v.tight)
        throw std::logic_error("classify: witness contradicts the verdict for " + weight_string(w));
    return v;
}

TightnessVerdict constructive_verdict(const AlgebraId& algebra, const std::vector<std::int64_t>& w)
{
    validate_weight(algebra, w);
    TightnessVerdict v = base_verdict(algebra, w);
    if (is_zero(w)) {
        v.witness = zero_witness();
        return v;
    }
    switch (algebra.kind) {
    case AlgebraKind::Su11: {
        v.witness = pairing_witness(su11_pairing(w[0]));
        break;
    }
    case AlgebraKind::Su11xSu11: {
        const TensorPairing tp = tensor_pairing(w[0], w[1]);
        const std::size_t s = tp.tight_structure.value_or(0);
        v.witness = pairing_witness(tp.checks[s], to_string(tp.structures[s]));
        break;
    }
    case AlgebraKind::Sp4R:
    case AlgebraKind::Su21: {
        const RootSystem& system = algebra.kind == AlgebraKind::Sp4R ? c2() : a2();
        const std::vector<std::string> selectors =
            algebra.kind == AlgebraKind::Sp4R ? std::vector<std::string>{kDiscSelector, kPolydiscSelector}
                                              : std::vector<std::string>{"a1"};
        std::optional<Witness> found;
        for (const auto& sel : selectors)
            if (!found)
                found = first_nontight_branch(system, to_weight(w), sel);
        v.witness = found ? *found
                          : all_tight(algebra.kind == AlgebraKind::Sp4R
                                          ? std::string(kDiscSelector) + ";" + kPolydiscSelector
                                          : std::string("a1"));
        break;
    }
    case AlgebraKind::Sp4RxSu11: {
        std::optional<Witness> found;
        for (const auto& pair : disc_route_factors(w[0], w[1], w[2])) {
            const TensorPairing tp = tensor_pairing(pair.first, pair.second);
            if (!tp.tight()) {
                found = tensor_factor_witness(kDiscSelector, pair, tp);
                break;
            }
        }
        if (!found)
            for (const auto& pair : product_route_factors(w[0], w[1], w[2])) {
                const TensorPairing tp = tensor_pairing(pair.first, pair.second);
                if (!tp.tight()) {
                    found = tensor_factor_witness(kProductSelector, pair, tp);
                    break;
                }
            }
        v.witness = found ? *found : all_tight(std::string(kDiscSelector) + ";" + kProductSelector);
        break;
    }
    default: break;
    }
    v.tight = v.witness.kind == WitnessKind::PairingEquality || v.witness.kind == WitnessKind::AllFactorsTight;
    return v;
}

CrossCheck cross_check(const AlgebraId& algebra, const std::vector<std::int64_t>& weight, bool allow_disagreement)
{
    if (!in_classification_scope(algebra))
        throw std::invalid_argument("cross_check: " + to_string(algebra) + " is out of scope");
    CrossCheck out{classify(algebra, weight), constructive_verdict(algebra, weight)};
    out.agree = out.theorem.tight == out.constructive.tight;
    if (!out.agree && !allow_disagreement)
        throw std::logic_error("routes disagree on " + to_string(algebra) + " " + weight_string(weight));
    return out;
}

bool replay_witness(const TightnessVerdict& v)
{
    const Witness& w = v.witness;
    const auto& hw = v.highest_weight;
    try {
        validate_weight(v.algebra, hw);
        const bool sp4_family = v.algebra.kind == AlgebraKind::Sp4R || v.algebra.kind == AlgebraKind::Sp4RxSu11;
        const RootSystem* system = sp4_family ? &c2() : v.algebra.kind == AlgebraKind::Su21 ? &a2() : nullptr;
        const Weight top = sp4_family ? Weight{hw[0], hw[1]} : to_weight(hw);

        // Recorded coroot evaluations, wherever present.
        if (w.coroot) {
            if (!system)
                return false;
            const auto support = system->weight_support(top);
            for (const auto& step : w.chain)
                if (!support.count(step.weight) || eval_on(*system, step.weight, *w.coroot) != step.evaluation)
                    return false;
            if (w.weight && (!support.count(*w.weight) || !w.evaluation ||
                             eval_on(*system, *w.weight, *w.coroot) != *w.evaluation))
                return false;
        }

        auto pairing_matches = [&](const PairingCheck& pc) {
            return w.pairing_lhs == pc.lhs && w.pairing_rhs == pc.rhs;
        };
        auto tensor_check = [&](const TensorPairing& tp) -> const PairingCheck* {
            for (std::size_t s = 0; s < tp.structures.size(); ++s)
                if (!w.structure || *w.structure == to_string(tp.structures[s]))
                    return &tp.checks[s];
            return nullptr;
        };

        switch (w.kind) {
        case WitnessKind::ZeroClass: return is_zero(hw) && !v.tight;
        case WitnessKind::TheoremClause: return v.tight && theorem_rule(v.algebra, hw);
        case WitnessKind::PairingEquality:
        case WitnessKind::PairingInequality: {
            const bool want = w.kind == WitnessKind::PairingEquality;
            if (v.tight != want)
                return false;
            if (v.algebra.kind == AlgebraKind::Su11) {
                const PairingCheck pc = su11_pairing(hw[0]);
                return pc.tight == want && pairing_matches(pc);
            }
            if (v.algebra.kind == AlgebraKind::Su11xSu11) {
                const TensorPairing tp = tensor_pairing(hw[0], hw[1]);
                const PairingCheck* pc = tensor_check(tp);
                return pc && pairing_matches(*pc) && tp.tight() == want && pc->tight == want;
            }
            return false;
        }
        case WitnessKind::EvenEvaluation:
            return !v.tight && w.coroot && w.evaluation && even_nonzero(as_int(*w.evaluation));
        case WitnessKind::ClebschGordanEven: {
            if (v.tight || v.algebra.kind != AlgebraKind::Su11xSu11 || !w.factor || w.factor->size() != 1)
                return false;
            const auto cg = clebsch_gordan(hw[0], hw[1]);
            const auto m = w.factor->front();
            return (hw[0] - hw[1]) % 2 == 0 && std::find(cg.begin(), cg.end(), m) != cg.end() &&
                   even_nonzero(m) && w.evaluation == Rational(m);
        }
        case WitnessKind::BranchFactorNontight: {
            if (v.tight || !system || !w.subalgebra || !w.factor || w.factor->size() != 1)
                return false;
            const auto factors = restrict_rep(*system, top, parse_subalgebra(*system, *w.subalgebra)).factors;
            const PairingCheck pc = su11_pairing(w.factor->front());
            return std::find(factors.begin(), factors.end(), *w.factor) != factors.end() && !pc.tight &&
                   pairing_matches(pc);
        }
        case WitnessKind::TensorFactorNontight: {
            if (v.tight || !w.subalgebra || !w.factor || w.factor->size() != 2)
                return false;
            const FactorPair pair{(*w.factor)[0], (*w.factor)[1]};
            bool occurs = false;
            if (v.algebra.kind == AlgebraKind::Sp4R) {
                const auto factors = restrict_rep(c2(), top, parse_subalgebra(c2(), *w.subalgebra)).factors;
                occurs = std::find(factors.begin(), factors.end(), *w.factor) != factors.end();
            } else if (v.algebra.kind == AlgebraKind::Sp4RxSu11) {
                const auto pairs = *w.subalgebra == kDiscSelector ? disc_route_factors(hw[0], hw[1], hw[2])
                                                                  : product_route_factors(hw[0], hw[1], hw[2]);
                occurs = std::any_of(pairs.begin(), pairs.end(), [&](const FactorPair& p) {
                    return p.first == pair.first && p.second == pair.second;
                });
            }
            const TensorPairing tp = tensor_pairing(pair.first, pair.second);
            const PairingCheck* pc = tensor_check(tp);
            return occurs && !tp.tight() && pc && pairing_matches(*pc);
        }
        case WitnessKind::AllFactorsTight: return v.tight && constructive_verdict(v.algebra, hw).tight;
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

SweepResult sweep(const AlgebraId& algebra, std::int64_t bound)
{
    if (bound < 1)
        throw std::invalid_argument("sweep bound must be >= 1");
    SweepResult out;
    out.algebra = algebra;
    out.bound = bound;
    for (const auto& weight : cached_system(root_system_kind(algebra)).dominant_weights_up_to(bound)) {
        std::vector<std::int64_t> w;
        for (const auto& c : weight.coords)
            w.push_back(as_int(c));
        out.rows.push_back(cross_check(algebra, w, true));
        const auto& row = out.rows.back();
        (row.theorem.tight ? out.tight_count : out.nontight_count) += 1;
        out.agreement = out.agreement && row.agree;
    }
    return out;
}

namespace {

/// Restricted factors (one or two highest weights each) of the chain the class map is built along.
struct Restriction {
    std::size_t domain_factors = 1;
    std::vector<std::vector<std::int64_t>> factors;
};

Restriction restriction_for(const TightnessVerdict& v)
{
    const auto& w = v.highest_weight;
    Restriction r;
    auto from = [&](const RootSystem& system, const Weight& top, const std::string& selector) {
        return restrict_rep(system, top, parse_subalgebra(system, selector)).factors;
    };
    switch (v.algebra.kind) {
    case AlgebraKind::Su21: r.factors = from(a2(), to_weight(w), "a1"); break;
    case AlgebraKind::Sp4R:
        if (w[0] == 0 || v.tight) {
            r.factors = from(c2(), to_weight(w), kDiscSelector);
        } else {
            r.domain_factors = 2;
            r.factors = from(c2(), to_weight(w), kPolydiscSelector);
        }
        break;
    case AlgebraKind::Sp4RxSu11: {
        r.domain_factors = 2;
        const bool product_case =
            !v.tight && v.witness.subalgebra && *v.witness.subalgebra == kProductSelector;
        for (const auto& p : product_case ? product_route_factors(w[0], w[1], w[2])
                                          : disc_route_factors(w[0], w[1], w[2]))
            r.factors.push_back({p.first, p.second});
        break;
    }
    default: break;
    }
    return r;
}

}  // namespace

std::optional<HomClassMap> verdict_class_map(const TightnessVerdict& v)
{
    if (is_zero(v.highest_weight))
        return std::nullopt;
    const HermitianFactor disc = HermitianFactor::su(1, 1);
    auto direct = [&](const ExplicitRep& rep) -> std::optional<HomClassMap> {
        if (rep.signature.rank() == 0)
            return std::nullopt;
        const auto lambda = pullback_coefficients(rep);
        std::vector<std::vector<Rational>> m;
        for (const auto& x : lambda)
            m.push_back({x});
        return HomClassMap(FactorProduct(lambda.size(), disc),
                           {HermitianFactor::su(rep.signature.p, rep.signature.q)}, m);
    };
    const auto& w = v.highest_weight;
    if (v.algebra.kind == AlgebraKind::Su11)
        return direct(sym_power_rep(w[0]));
    if (v.algebra.kind == AlgebraKind::Su11xSu11) {
        const TensorPairing tp = tensor_pairing(w[0], w[1]);
        return direct(tensor_rep(w[0], w[1], tp.structures[tp.tight_structure.value_or(0)]));
    }

    // Sum of the restricted factors, then the strictly positive block inclusion into su(P,Q).
    const Restriction r = restriction_for(v);
    const FactorProduct domain(r.domain_factors, disc);
    FactorProduct middle;
    std::vector<std::vector<Rational>> columns;
    SignaturePair total;
    for (const auto& f : r.factors) {
        const ExplicitRep rep = f.size() == 1 ? sym_power_rep(f[0])
                                              : tensor_rep(f[0], f[1], StructureChoice::holomorphic(2));
        if (f.size() != r.domain_factors)
            throw std::logic_error("verdict_class_map: factor width does not match the domain");
        total.p += rep.signature.p;
        total.q += rep.signature.q;
        if (rep.signature.rank() == 0)
            continue;
        middle.push_back(HermitianFactor::su(rep.signature.p, rep.signature.q));
        columns.push_back(pullback_coefficients(rep));
    }
    if (middle.empty() || total.rank() == 0)
        return std::nullopt;
    std::vector<std::vector<Rational>> f_matrix(domain.size(), std::vector<Rational>(middle.size()));
    for (std::size_t i = 0; i < middle.size(); ++i)
        for (std::size_t j = 0; j < domain.size(); ++j)
            f_matrix[j][i] = columns[i][j];
    const HomClassMap sum(domain, middle, f_matrix);
    const HomClassMap inclusion(middle, {HermitianFactor::su(total.p, total.q)},
                                std::vector<std::vector<Rational>>(middle.size(), {Rational(1)}));
    return compose(sum, inclusion);
}

InfeasibilityReport verify_su_n1_to_sostar(std::int64_t p)
{
    if (p < 3)
        throw std::invalid_argument("so*(2p) needs p >= 3");
    if (p % 2 == 0)
        throw ReducedCase("p = " + std::to_string(p) + " is even: compose with so*(" + std::to_string(2 * p) +
                          ") -> so*(" + std::to_string(2 * p + 2) + ") and check p = " + std::to_string(p + 1));
    if (p == 3)
        throw ReducedCase("so*(6) is isomorphic to su(3,1); handled as a rank-one su(n,1) target");
    InfeasibilityReport r;
    r.p = p;
    r.n = p - 1;
    r.l = 2 * p - 3 * r.n;
    r.residual = p - 3 + r.l;
    // rho = k rho_10 + (n-k) rho_01 + l rho_00 has dimension 3k + 3(n-k) + l.
    for (std::int64_t k = 0; k <= r.n; ++k)
        for (std::int64_t l = 0; l <= 2 * p; ++l)
            if (3 * k + 3 * (r.n - k) + l == 2 * p)
                ++r.enumerated_solutions;
    r.infeasible = r.residual == 0 && r.l < 0 && r.enumerated_solutions == 0;
    return r;
}

EmbeddingRow embedding_row(const HermitianFactor& g)
{
    static const std::regex su_re(R"(su\((\d+),(\d+)\))");
    static const std::regex sp_re(R"(sp\((\d+),R\))");
    static const std::regex so_star_re(R"(so\*\((\d+)\))");
    static const std::regex so2_re(R"(so\(2,(\d+)\))");
    auto by_rank = [](std::int64_t rank) { return rank % 2 == 0 ? "sp(4,R)" : "sp(4,R)+su(1,1)"; };
    EmbeddingRow row;
    row.algebra = g;
    std::smatch m;
    const std::string name = g.name;
    if (std::regex_match(name, m, su_re)) {
        const auto a = std::max(std::stoll(m[1]), std::stoll(m[2]));
        const auto b = std::min(std::stoll(m[1]), std::stoll(m[2]));
        row.holomorphic_source = a == 1 ? "" : b == 1 ? "su(2,1)" : by_rank(b);
        row.tube_subalgebra = {HermitianFactor::su(b, b)};
        if (a == b)
            row.tube_target = HermitianFactor::su(a, a);
    } else if (std::regex_match(name, m, sp_re)) {
        const auto n = std::stoll(m[1]) / 2;
        row.holomorphic_source = n == 1 ? "" : by_rank(n);
        row.tube_subalgebra = {g};
        row.tube_target = HermitianFactor::su(n, n);
    } else if (std::regex_match(name, m, so_star_re)) {
        const auto n = std::stoll(m[1]) / 2;
        if (n == 3) {
            row.holomorphic_source = "su(2,1)";
            row.tube_subalgebra = {HermitianFactor::su(1, 1)};
        } else if (n % 2) {
            row.holomorphic_source = by_rank((n - 1) / 2);
            row.tube_subalgebra = {HermitianFactor::so_star(n - 1)};
        } else {
            row.holomorphic_source = by_rank(n / 2);
            row.tube_subalgebra = {g};
            row.tube_target = HermitianFactor::su(n, n);
        }
    } else if (std::regex_match(name, m, so2_re)) {
        const auto n = std::stoll(m[1]);
        row.holomorphic_source = "sp(4,R)";
        row.tube_subalgebra = {g};
        const std::int64_t spin = std::int64_t{1} << ((n + 1) / 2 - 1);
        row.tube_target = HermitianFactor::su(spin, spin);
    } else {
        throw std::invalid_argument("embedding_row: unknown factor " + name);
    }
    if (total_rank(row.tube_subalgebra) != g.rank)
        throw std::logic_error("embedding_row: tube subalgebra of " + name + " has the wrong rank");
    for (const auto& t : row.tube_subalgebra)
        if (!t.tube_type)
            throw std::logic_error("embedding_row: tube subalgebra of " + name + " is not of tube type");
    return row;
}

std::vector<EmbeddingRow> embedding_table()
{
    std::vector<EmbeddingRow> rows;
    for (std::int64_t p = 1; p <= 5; ++p)
        for (std::int64_t q = 1; q <= p; ++q)
            rows.push_back(embedding_row(HermitianFactor::su(p, q)));
    for (std::int64_t n = 1; n <= 5; ++n)
        rows.push_back(embedding_row(HermitianFactor::sp(n)));
    for (std::int64_t n = 3; n <= 10; ++n)
        rows.push_back(embedding_row(HermitianFactor::so_star(n)));
    for (std::int64_t n = 3; n <= 10; ++n)
        rows.push_back(embedding_row(HermitianFactor::so2(n)));
    return rows;
}

}  // namespace tight
