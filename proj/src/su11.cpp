#include "tight/su11.hpp"

#include <stdexcept>

namespace tight {

namespace {

std::string monomial(std::int64_t a, std::int64_t b)
{
    auto factor = [](const char* base, std::int64_t e) -> std::string {
        if (e == 0)
            return "";
        return e == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(e);
    };
    std::string out = factor("e1", a);
    const std::string second = factor("e2", b);
    if (!out.empty() && !second.empty())
        out += " ";
    out += second;
    return out.empty() ? "1" : out;
}

}  // namespace

std::string to_string(const SignaturePair& sig)
{
    return "(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")";
}

StructureChoice StructureChoice::holomorphic(std::size_t factors)
{
    return {std::vector<int>(factors, 1)};
}

std::vector<StructureChoice> StructureChoice::representatives(std::size_t factors)
{
    std::vector<StructureChoice> out;
    if (factors == 0)
        return out;
    const std::size_t free = factors - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
        StructureChoice s = holomorphic(factors);
        for (std::size_t bit = 0; bit < free; ++bit)
            if (mask & (std::size_t{1} << bit))
                s.signs[bit + 1] = -1;
        out.push_back(std::move(s));
    }
    return out;
}

StructureChoice StructureChoice::negated() const
{
    StructureChoice out = *this;
    for (auto& s : out.signs)
        s = -s;
    return out;
}

std::string to_string(const StructureChoice& structure)
{
    std::string out = "(";
    for (std::size_t i = 0; i < structure.signs.size(); ++i) {
        if (i)
            out += ",";
        out += structure.signs[i] > 0 ? "+" : "-";
    }
    return out + ")";
}

ExplicitRep sym_power_rep(std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("sym_power_rep: k must be nonnegative");
    ExplicitRep rep;
    rep.dim = k + 1;
    // e1 is positive and e2 negative, so e1^{k-m} e2^m has sign (-1)^m.
    for (int parity = 0; parity < 2; ++parity)
        for (std::int64_t m = parity; m <= k; m += 2) {
            rep.z_diagonal.push_back(Rational(k - 2 * m, 2));
            rep.basis_labels.push_back(monomial(k - m, m));
        }
    rep.signature = {k / 2 + 1, (k + 1) / 2};
    rep.factor_z = {rep.z_diagonal};
    return rep;
}

Vec z_element(std::int64_t p, std::int64_t q)
{
    if (q < 0 || p < q)
        throw std::invalid_argument("z_element: need p >= q >= 0");
    if (p + q < 2)
        throw std::invalid_argument("z_element: need p + q >= 2");
    Vec z;
    for (std::int64_t i = 0; i < p; ++i)
        z.push_back(Rational(q, p + q));
    for (std::int64_t i = 0; i < q; ++i)
        z.push_back(Rational(-p, p + q));
    return z;
}

Vec diag_disc_z(std::int64_t p, std::int64_t q)
{
    if (p < 0 || q < 0)
        throw std::invalid_argument("diag_disc_z: negative signature");
    const std::int64_t r = p < q ? p : q;
    Vec z(static_cast<std::size_t>(p + q), Rational(0));
    for (std::int64_t i = 0; i < r; ++i) {
        z[static_cast<std::size_t>(i)] = Rational(1, 2);
        z[static_cast<std::size_t>(p + i)] = Rational(-1, 2);
    }
    return z;
}

Rational pairing(std::span<const Rational> x, std::span<const Rational> y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("pairing: length mismatch");
    return dot(x, y);
}

PairingCheck pairing_check(const ExplicitRep& rep)
{
    PairingCheck check;
    check.signature = rep.signature;
    if (rep.signature.rank() == 0) {
        check.degenerate = true;
        return check;
    }
    const Vec ambient = z_element(rep.signature.p, rep.signature.q);
    check.lhs = pairing(rep.z_diagonal, ambient);
    check.rhs = pairing(diag_disc_z(rep.signature.p, rep.signature.q), ambient);
    check.tight = abs(check.lhs) == abs(check.rhs);
    return check;
}

PairingCheck su11_pairing(std::int64_t k)
{
    return pairing_check(sym_power_rep(k));
}

bool tight_su11_by_pairing(std::int64_t k)
{
    return su11_pairing(k).tight;
}

std::vector<std::int64_t> clebsch_gordan(std::int64_t k, std::int64_t l)
{
    if (k < 0 || l < 0)
        throw std::invalid_argument("clebsch_gordan: weights must be nonnegative");
    const std::int64_t low = k > l ? k - l : l - k;
    std::vector<std::int64_t> out;
    for (std::int64_t m = k + l; m >= low; m -= 2)
        out.push_back(m);
    return out;
}

ExplicitRep tensor_rep(const ExplicitRep& first, const ExplicitRep& second, const StructureChoice& structure)
{
    if (structure.signs.size() != 2)
        throw std::invalid_argument("tensor_rep: structure needs exactly two signs");
    if (first.factor_z.size() != 1 || second.factor_z.size() != 1)
        throw std::invalid_argument("tensor_rep: factors must be su(1,1) representations");
    const Rational s1 = structure.signs[0];
    const Rational s2 = structure.signs[1];
    const auto a = static_cast<std::size_t>(first.signature.p);
    const auto b = static_cast<std::size_t>(first.signature.q);
    const auto c = static_cast<std::size_t>(second.signature.p);
    const auto d = static_cast<std::size_t>(second.signature.q);

    struct Range {
        std::size_t begin, end;
    };
    // (+,+) and (-,-) blocks carry the positive vectors, (+,-) and (-,+) the negative ones.
    const std::pair<Range, Range> blocks[] = {
        {{0, a}, {0, c}},
        {{a, a + b}, {c, c + d}},
        {{0, a}, {c, c + d}},
        {{a, a + b}, {0, c}},
    };

    ExplicitRep rep;
    rep.dim = first.dim * second.dim;
    rep.signature = {first.signature.p * second.signature.p + first.signature.q * second.signature.q,
                     first.signature.p * second.signature.q + first.signature.q * second.signature.p};
    rep.factor_z.assign(2, Vec{});
    for (const auto& [outer, inner] : blocks)
        for (std::size_t j = outer.begin; j < outer.end; ++j)
            for (std::size_t i = inner.begin; i < inner.end; ++i) {
                const Rational z1 = s1 * first.z_diagonal[j];
                const Rational z2 = s2 * second.z_diagonal[i];
                rep.factor_z[0].push_back(z1);
                rep.factor_z[1].push_back(z2);
                rep.z_diagonal.push_back(z1 + z2);
                rep.basis_labels.push_back(first.basis_labels[j] + " (x) " + second.basis_labels[i]);
            }
    return rep;
}

ExplicitRep tensor_rep(std::int64_t k, std::int64_t l, const StructureChoice& structure)
{
    return tensor_rep(sym_power_rep(k), sym_power_rep(l), structure);
}

TensorPairing tensor_pairing(std::int64_t k, std::int64_t l)
{
    TensorPairing out;
    out.k = k;
    out.l = l;
    out.structures = StructureChoice::representatives(2);
    for (std::size_t s = 0; s < out.structures.size(); ++s) {
        out.checks.push_back(pairing_check(tensor_rep(k, l, out.structures[s])));
        if (out.checks.back().tight && !out.tight_structure)
            out.tight_structure = s;
    }
    return out;
}

bool tight_tensor_by_pairing(std::int64_t k, std::int64_t l)
{
    return tensor_pairing(k, l).tight();
}

std::vector<Rational> pullback_coefficients(const ExplicitRep& rep)
{
    if (rep.signature.rank() == 0)
        return {};
    const Vec ambient = z_element(rep.signature.p, rep.signature.q);
    std::vector<Rational> out;
    for (const auto& z : rep.factor_z)
        out.push_back(2 * pairing(z, ambient));
    return out;
}

}  // namespace tight
