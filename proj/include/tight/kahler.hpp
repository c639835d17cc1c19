#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tight/rational.hpp"

namespace tight {

/// A classical simple Hermitian Lie algebra with its real rank and tube-type flag.
struct HermitianFactor {
    std::string name;
    std::int64_t rank = 0;
    bool tube_type = false;

    static HermitianFactor su(std::int64_t p, std::int64_t q);
    /// sp(2n, R)
    static HermitianFactor sp(std::int64_t n);
    /// so*(2n)
    static HermitianFactor so_star(std::int64_t n);
    /// so(2, n), n >= 3
    static HermitianFactor so2(std::int64_t n);

    bool operator==(const HermitianFactor&) const = default;
};

/// Accepts "su(p,q)", "sp(2n,R)", "so*(2n)", "so(2,n)"; exceptional algebras are rejected.
HermitianFactor parse_hermitian_factor(const std::string& text);

using FactorProduct = std::vector<HermitianFactor>;

std::int64_t total_rank(const FactorProduct& factors);

/// sum_i mu_i kappa_i over a fixed product; norms are rationals understood as multiples of pi.
struct KahlerClass {
    FactorProduct factors;
    std::vector<Rational> coefficients;

    static KahlerClass distinguished(const FactorProduct& factors);
    static KahlerClass zero(const FactorProduct& factors);
    /// Changing J on factor i negates its coefficient.
    KahlerClass flipped(std::size_t factor) const;
};

/// sum_i |mu_i| * rank_i  (coefficient of pi).
Rational norm(const KahlerClass& kappa);
bool is_positive(const KahlerClass& kappa);
bool is_strictly_positive(const KahlerClass& kappa);
bool is_negative(const KahlerClass& kappa);
bool is_strictly_negative(const KahlerClass& kappa);

/// Pullback in degree two: (pulled back)_j = sum_i matrix[j][i] * (target class)_i.
class HomClassMap {
public:
    /// Requires sum_j |matrix[j][i]| rank(source_j) <= rank(target_i) for every target factor.
    HomClassMap(FactorProduct source, FactorProduct target, std::vector<std::vector<Rational>> matrix);

    static HomClassMap identity(const FactorProduct& factors);
    static HomClassMap projection(const FactorProduct& product, std::size_t index);

    const FactorProduct& source() const { return source_; }
    const FactorProduct& target() const { return target_; }
    const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }

    KahlerClass pullback(const KahlerClass& kappa) const;
    KahlerClass pullback_distinguished() const { return pullback(KahlerClass::distinguished(target_)); }

private:
    FactorProduct source_;
    FactorProduct target_;
    std::vector<std::vector<Rational>> matrix_;
};

bool is_tight(const HomClassMap& map);
bool is_positive(const HomClassMap& map);
bool is_strictly_positive(const HomClassMap& map);
bool is_negative(const HomClassMap& map);

/// h o f, pulled back as f^* o h^*.
HomClassMap compose(const HomClassMap& f, const HomClassMap& h);

/// a = ||f^*h^*k_L||, b = sum_ij l_i|m_ij| r_Gj, c = sum_i l_i r_Hi, d = ||k_L||, with a <= b <= c <= d.
struct CompositionChain {
    Rational composite_norm;
    Rational weighted_source_norm;
    Rational weighted_middle_rank;
    Rational target_norm;

    bool ordered() const;
    bool strict() const { return composite_norm < target_norm; }
};

/// Requires h strictly positive.
CompositionChain composition_chain(const HomClassMap& f, const HomClassMap& h);

struct LemmaFixtureReport {
    std::string lemma;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    /// Cases exercising each side of the statement (e.g. tight vs nontight composites).
    std::int64_t positive_cases = 0;
    std::int64_t negative_cases = 0;
    std::vector<std::string> failure_details;

    bool passed() const { return failures == 0 && positive_cases > 0 && negative_cases > 0; }
};

/// Simple middle factor: h o f tight iff both f and h tight.
LemmaFixtureReport check_factor12(std::uint32_t seed, int cases);
/// Map into a product is tight iff all projections tight and uniformly signed.
LemmaFixtureReport check_factor2(std::uint32_t seed, int cases);
/// f nontight and h strictly positive imply h o f nontight.
LemmaFixtureReport check_factor3(std::uint32_t seed, int cases);

std::vector<LemmaFixtureReport> kahler_lemma_fixtures(std::uint32_t seed = 20240601, int cases = 400);

}  // namespace tight
