#include "tight/branching.hpp"

#include <algorithm>
#include <cctype>

namespace tight {

namespace {

std::int64_t as_int(const Rational& r)
{
    if (!is_integer(r))
        throw std::logic_error("non-integral coroot evaluation " + to_string(r));
    return r.numerator();
}

Vec parse_root_term_sum(const RootSystem& system, const std::string& text)
{
    std::vector<std::int64_t> coeffs(system.rank(), 0);
    std::size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (any) {
            throw std::invalid_argument("bad root selector '" + text + "'");
        }
        std::int64_t coeff = 1;
        const std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos > digits)
            coeff = std::stoll(text.substr(digits, pos - digits));
        if (pos >= text.size() || (text[pos] != 'a' && text[pos] != 'A'))
            throw std::invalid_argument("bad root selector '" + text + "'");
        ++pos;
        const std::size_t index_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == index_start)
            throw std::invalid_argument("bad root selector '" + text + "'");
        const auto index = std::stoull(text.substr(index_start, pos - index_start));
        if (index < 1 || index > system.rank())
            throw std::invalid_argument("root selector '" + text + "' names a missing simple root");
        coeffs[index - 1] += sign * coeff;
        any = true;
    }
    if (!any)
        throw std::invalid_argument("empty root selector");
    return system.root_from_simple_coords(coeffs);
}

}  // namespace

std::string SubalgebraSpec::selector() const
{
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i)
            out += ",";
        out += labels[i];
    }
    return out;
}

SubalgebraSpec make_subalgebra(const RootSystem& system, const std::vector<Vec>& roots_B)
{
    if (roots_B.empty())
        throw std::invalid_argument("subalgebra: B must be nonempty");
    SubalgebraSpec spec;
    spec.roots_B = roots_B;
    for (const auto& beta : roots_B) {
        if (!system.is_root(beta))
            throw std::invalid_argument("subalgebra: element of B is not a root");
        spec.labels.push_back(system.root_label(beta));
    }

    for (std::size_t i = 0; i < roots_B.size(); ++i)
        for (std::size_t j = 0; j < roots_B.size(); ++j) {
            if (i == j)
                continue;
            if (system.is_root(roots_B[i] - roots_B[j]))
                throw SubalgebraError(1, "condition (1) violated: " + spec.labels[i] + " - " + spec.labels[j] +
                                             " is a root");
        }

    if (matrix_rank(roots_B) != roots_B.size())
        throw SubalgebraError(2, "condition (2) violated: B is linearly dependent");

    // Dynkin components of B via non-orthogonality.
    std::vector<std::size_t> component(roots_B.size());
    for (std::size_t i = 0; i < component.size(); ++i)
        component[i] = i;
    auto find = [&](std::size_t x) {
        while (component[x] != x)
            x = component[x];
        return x;
    };
    for (std::size_t i = 0; i < roots_B.size(); ++i)
        for (std::size_t j = i + 1; j < roots_B.size(); ++j)
            if (dot(roots_B[i], roots_B[j]) != 0)
                component[find(j)] = find(i);
    std::map<std::size_t, int> noncompact_count;
    for (std::size_t i = 0; i < roots_B.size(); ++i)
        noncompact_count[find(i)] += system.is_noncompact(roots_B[i]) ? 1 : 0;
    for (const auto& [root, count] : noncompact_count)
        if (count != 1)
            throw SubalgebraError(3, "condition (3) violated: Dynkin component containing " + spec.labels[root] +
                                         " has " + std::to_string(count) + " noncompact roots");

    // C = ZB meet A
    const std::size_t n = roots_B.size();
    std::vector<Vec> gram(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram[i][j] = dot(roots_B[i], roots_B[j]);
    const auto gram_inv = inverse(gram);
    for (const auto& gamma : system.roots()) {
        Vec c(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                c[i] += gram_inv[i][j] * dot(gamma, roots_B[j]);
        Vec back(system.ambient_dim(), Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            back = back + c[i] * roots_B[i];
        if (back == gamma && std::all_of(c.begin(), c.end(), [](const Rational& x) { return is_integer(x); }))
            spec.generated_roots_C.push_back(gamma);
    }

    if (n == 1)
        spec.target_kind = TargetKind::Sl2;
    else if (n == 2 && noncompact_count.size() == 2 && spec.generated_roots_C.size() == 4)
        spec.target_kind = TargetKind::Sl2xSl2;
    else
        throw std::invalid_argument("subalgebra " + spec.selector() + " is not of type sl2 or sl2+sl2");
    return spec;
}

SubalgebraSpec parse_subalgebra(const RootSystem& system, const std::string& selector)
{
    std::vector<Vec> roots;
    std::size_t start = 0;
    while (start <= selector.size()) {
        const auto end = std::min(selector.find(',', start), selector.size());
        std::string token;
        for (char c : selector.substr(start, end - start))
            if (!std::isspace(static_cast<unsigned char>(c)))
                token.push_back(c);
        roots.push_back(parse_root_term_sum(system, token));
        start = end + 1;
    }
    return make_subalgebra(system, roots);
}

EvaluationMultiset evaluation_multiset(const RootSystem& system, const Weight& highest, const SubalgebraSpec& sub)
{
    EvaluationMultiset out;
    for (const auto& [mu, mult] : system.weight_multiplicities(highest)) {
        std::vector<std::int64_t> key;
        for (const auto& beta : sub.roots_B)
            key.push_back(as_int(system.eval_on_coroot(mu, beta)));
        out[key] += mult;
    }
    return out;
}

std::int64_t BranchingResult::dimension() const
{
    std::int64_t total = 0;
    for (const auto& f : factors) {
        std::int64_t d = 1;
        for (auto m : f)
            d *= m + 1;
        total += d;
    }
    return total;
}

BranchingResult peel_strings(EvaluationMultiset evaluations, TargetKind kind)
{
    BranchingResult result;
    result.target_kind = kind;
    const std::size_t width = kind == TargetKind::Sl2 ? 1 : 2;
    for (;;) {
        while (!evaluations.empty() && evaluations.rbegin()->second == 0)
            evaluations.erase(std::prev(evaluations.end()));
        if (evaluations.empty())
            break;
        // Lexicographically largest key: maximal first entry, then maximal second.
        const std::vector<std::int64_t> top = evaluations.rbegin()->first;
        if (top.size() != width)
            throw std::invalid_argument("peel_strings: evaluation width does not match target kind");
        for (auto m : top)
            if (m < 0)
                throw std::logic_error("peel_strings: evaluation multiset is not a character");
        std::vector<std::int64_t> key(width);
        auto remove = [&](const std::vector<std::int64_t>& k) {
            auto it = evaluations.find(k);
            if (it == evaluations.end() || it->second <= 0)
                throw std::logic_error("peel_strings: evaluation multiset is not a character");
            it->second -= 1;
        };
        if (width == 1) {
            for (std::int64_t x = top[0]; x >= -top[0]; x -= 2)
                remove({x});
        } else {
            for (std::int64_t x = top[0]; x >= -top[0]; x -= 2)
                for (std::int64_t y = top[1]; y >= -top[1]; y -= 2)
                    remove({x, y});
        }
        result.factors.push_back(top);
        if (width == 1)
            result.signatures.push_back(sym_power_rep(top[0]).signature);
        else
            result.signatures.push_back(
                tensor_rep(top[0], top[1], StructureChoice::holomorphic(2)).signature);
        for (auto it = evaluations.begin(); it != evaluations.end();)
            it = it->second == 0 ? evaluations.erase(it) : std::next(it);
    }
    return result;
}

EvaluationMultiset expand_factors(const BranchingResult& result)
{
    EvaluationMultiset out;
    for (const auto& f : result.factors) {
        if (f.size() == 1) {
            for (std::int64_t x = f[0]; x >= -f[0]; x -= 2)
                out[{x}] += 1;
        } else {
            for (std::int64_t x = f[0]; x >= -f[0]; x -= 2)
                for (std::int64_t y = f[1]; y >= -f[1]; y -= 2)
                    out[{x, y}] += 1;
        }
    }
    return out;
}

BranchingResult restrict_rep(const RootSystem& system, const Weight& highest, const SubalgebraSpec& sub)
{
    BranchingResult result = peel_strings(evaluation_multiset(system, highest, sub), sub.target_kind);
    if (result.dimension() != system.dimension(highest))
        throw std::logic_error("restrict_rep: dimension not conserved");
    return result;
}

std::optional<EvenWitness> even_witness(const RootSystem& system, const Weight& highest, const SubalgebraSpec& sub)
{
    const auto support = system.weight_support(highest);
    std::vector<Weight> order;
    order.push_back(highest);
    for (const auto& w : system.weyl_orbit(highest)) {
        if (std::all_of(w.coords.begin(), w.coords.end(), [](const Rational& c) { return c <= 0; })) {
            if (!(w == highest))
                order.push_back(w);
            break;
        }
    }
    std::vector<Weight> rest;
    for (const auto& w : support)
        if (std::find(order.begin(), order.end(), w) == order.end())
            rest.push_back(w);
    std::stable_sort(rest.begin(), rest.end(), [&](const Weight& a, const Weight& b) {
        return system.depth(highest, a) < system.depth(highest, b);
    });
    order.insert(order.end(), rest.begin(), rest.end());

    for (const auto& mu : order) {
        std::vector<Rational> evals;
        for (const auto& beta : sub.roots_B)
            evals.push_back(system.eval_on_coroot(mu, beta));
        for (std::size_t c = 0; c < evals.size(); ++c) {
            const auto v = as_int(evals[c]);
            if (v != 0 && v % 2 == 0)
                return EvenWitness{mu, evals, c, evals[c]};
        }
    }
    return std::nullopt;
}

}  // namespace tight
