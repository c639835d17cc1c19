#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tight/rational.hpp"

namespace tight {

/// Signature (p, q) of an invariant indefinite Hermitian form.
struct SignaturePair {
    std::int64_t p = 0;
    std::int64_t q = 0;

    std::int64_t dim() const { return p + q; }
    std::int64_t rank() const { return p < q ? p : q; }
    bool operator==(const SignaturePair&) const = default;
};

std::string to_string(const SignaturePair& sig);

/// A finite-dimensional representation of su(1,1) or su(1,1)+su(1,1) in an
/// orthogonal basis with the positive vectors first. Z-images are stored as the
/// rational d_j of i*diag(d_1, ..., d_n).
struct ExplicitRep {
    std::int64_t dim = 0;
    SignaturePair signature;
    Vec z_diagonal;
    /// Image of the Z-element of each domain factor separately; sums to z_diagonal.
    std::vector<Vec> factor_z;
    std::vector<std::string> basis_labels;
    bool positive_first = true;
};

/// One sign per su(1,1) factor; -1 flips the complex structure on that factor.
struct StructureChoice {
    std::vector<int> signs;

    static StructureChoice holomorphic(std::size_t factors);
    /// One representative of each {J, -J} pair: first sign fixed to +1.
    static std::vector<StructureChoice> representatives(std::size_t factors);
    StructureChoice negated() const;
    bool operator==(const StructureChoice&) const = default;
};

std::string to_string(const StructureChoice& structure);

/// Symmetric power V^k of the standard representation, basis ordered
/// e1^k, e1^{k-2}e2^2, ... (positive) then e1^{k-1}e2, e1^{k-3}e2^3, ... (negative).
ExplicitRep sym_power_rep(std::int64_t k);

/// Z-element of su(p,q): q/(p+q) on the positive block, -p/(p+q) on the negative block.
Vec z_element(std::int64_t p, std::int64_t q);

/// Z-image of the diagonal disc of su(p,q): min(p,q) blocks pairing e_i with e_{p+i}.
Vec diag_disc_z(std::int64_t p, std::int64_t q);

/// tr(X^* Y) restricted to i*diag elements.
Rational pairing(std::span<const Rational> x, std::span<const Rational> y);

/// Both sides of the diagonal-disc criterion for one homomorphism.
struct PairingCheck {
    SignaturePair signature;
    Rational lhs = 0;
    Rational rhs = 0;
    /// Target su(p,0) has no Hermitian structure; the criterion does not apply.
    bool degenerate = false;
    bool tight = false;
};

PairingCheck pairing_check(const ExplicitRep& rep);

PairingCheck su11_pairing(std::int64_t k);
bool tight_su11_by_pairing(std::int64_t k);

/// {k+l, k+l-2, ..., |k-l|}, descending.
std::vector<std::int64_t> clebsch_gordan(std::int64_t k, std::int64_t l);

ExplicitRep tensor_rep(const ExplicitRep& first, const ExplicitRep& second, const StructureChoice& structure);
ExplicitRep tensor_rep(std::int64_t k, std::int64_t l, const StructureChoice& structure);

struct TensorPairing {
    std::int64_t k = 0;
    std::int64_t l = 0;
    std::vector<StructureChoice> structures;
    std::vector<PairingCheck> checks;
    /// Index into structures of the first choice realizing equality, if any.
    std::optional<std::size_t> tight_structure;
    bool tight() const { return tight_structure.has_value(); }
    bool degenerate() const { return !checks.empty() && checks.front().degenerate; }
};

TensorPairing tensor_pairing(std::int64_t k, std::int64_t l);
bool tight_tensor_by_pairing(std::int64_t k, std::int64_t l);

/// Pullback coefficients lambda_i of the target Kaehler class onto each su(1,1)
/// factor: 2 * <rho(Z_i), Z_target>. Empty for degenerate targets.
std::vector<Rational> pullback_coefficients(const ExplicitRep& rep);

}  // namespace tight
