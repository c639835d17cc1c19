#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tight/rational.hpp"

namespace tight {

enum class SimpleKind { A1, A2, C2 };

std::string to_string(SimpleKind kind);

/// A finite direct sum of simple types; a single entry is a simple system.
struct RootSystemKind {
    std::vector<SimpleKind> factors;

    static RootSystemKind simple(SimpleKind kind) { return {{kind}}; }
    static RootSystemKind product(std::vector<RootSystemKind> parts);

    bool operator==(const RootSystemKind&) const = default;
};

std::string to_string(const RootSystemKind& kind);

/// Parses "A1", "C2", "A1xA1", "C2xA1" (case-insensitive).
RootSystemKind parse_root_system_kind(const std::string& text);

/// Coordinates m_i of the weight sum m_i omega_i in the fundamental-weight basis.
struct Weight {
    std::vector<Rational> coords;

    Weight() = default;
    explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
    Weight(std::initializer_list<std::int64_t> c);

    bool operator==(const Weight& other) const { return coords == other.coords; }
    bool operator<(const Weight& other) const { return coords < other.coords; }
};

std::string to_string(const Weight& weight);

using WeightMultiplicities = std::map<Weight, std::int64_t>;

class RootSystem {
public:
    explicit RootSystem(RootSystemKind kind);

    const RootSystemKind& kind() const { return kind_; }
    std::size_t rank() const { return simple_roots_.size(); }
    std::size_t ambient_dim() const { return ambient_dim_; }

    const std::vector<Vec>& simple_roots() const { return simple_roots_; }
    const std::vector<Vec>& positive_roots() const { return positive_roots_; }
    /// Positive roots followed by their negatives.
    std::vector<Vec> roots() const;
    /// cartan_matrix()[i][j] = <alpha_j, alpha_i coroot>.
    const std::vector<std::vector<Rational>>& cartan_matrix() const { return cartan_; }
    const std::vector<Vec>& fundamental_weights() const { return fundamental_; }
    const std::set<std::size_t>& noncompact_marking() const { return noncompact_; }
    std::int64_t weyl_group_order() const;

    bool is_root(const Vec& v) const;
    /// Root is noncompact iff its coefficient sum over the marked simple roots is odd.
    bool is_noncompact(const Vec& root) const;

    /// Coefficients of v in the simple-root basis; v must lie in their span.
    Vec simple_root_coords(const Vec& v) const;
    Vec root_from_simple_coords(const std::vector<std::int64_t>& coeffs) const;
    /// "a1+a2", "2a1+a2", "-a2"; product systems number simple roots globally.
    std::string root_label(const Vec& root) const;

    Vec to_euclidean(const Weight& weight) const;
    Weight from_euclidean(const Vec& v) const;

    /// 2<lambda, alpha>/<alpha, alpha>; throws if alpha is not a root.
    Rational eval_on_coroot(const Weight& weight, const Vec& root) const;

    Weight reflect(const Weight& weight, std::size_t simple_index) const;
    std::set<Weight> weyl_orbit(const Weight& weight) const;
    bool is_dominant_integral(const Weight& weight) const;
    Weight dominant_conjugate(const Weight& weight) const;

    std::set<Weight> weight_support(const Weight& highest) const;
    WeightMultiplicities weight_multiplicities(const Weight& highest) const;
    std::int64_t dimension(const Weight& highest) const;

    /// Sum of simple-root coefficients of highest - mu; mu must lie in highest - Q.
    Rational depth(const Weight& highest, const Weight& mu) const;
    /// Simple root alpha_i written in the fundamental-weight basis.
    Weight simple_root_as_weight(std::size_t simple_index) const;

    /// All dominant integral weights with coordinate sum <= bound, lexicographic.
    std::vector<Weight> dominant_weights_up_to(std::int64_t bound) const;

private:
    void require_dominant_integral(const Weight& highest) const;
    void validate() const;

    RootSystemKind kind_;
    std::size_t ambient_dim_ = 0;
    std::vector<Vec> simple_roots_;
    std::vector<Vec> positive_roots_;
    std::vector<std::vector<Rational>> cartan_;
    std::vector<std::vector<Rational>> cartan_inverse_;
    std::vector<Vec> fundamental_;
    std::vector<Vec> gram_inverse_;
    std::set<std::size_t> noncompact_;
};

RootSystem build_root_system(const RootSystemKind& kind);

}  // namespace tight
