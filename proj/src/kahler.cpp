#include "tight/kahler.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <stdexcept>

namespace tight {

HermitianFactor HermitianFactor::su(std::int64_t p, std::int64_t q)
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("su(p,q) needs p, q >= 1");
    return {"su(" + std::to_string(p) + "," + std::to_string(q) + ")", std::min(p, q), p == q};
}

HermitianFactor HermitianFactor::sp(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("sp(2n,R) needs n >= 1");
    return {"sp(" + std::to_string(2 * n) + ",R)", n, true};
}

HermitianFactor HermitianFactor::so_star(std::int64_t n)
{
    if (n < 3)
        throw std::invalid_argument("so*(2n) needs n >= 3");
    return {"so*(" + std::to_string(2 * n) + ")", n / 2, n % 2 == 0};
}

HermitianFactor HermitianFactor::so2(std::int64_t n)
{
    if (n < 3)
        throw std::invalid_argument("so(2,n) needs n >= 3");
    return {"so(2," + std::to_string(n) + ")", 2, true};
}

HermitianFactor parse_hermitian_factor(const std::string& text)
{
    static const std::regex su_re(R"(su\((\d+),(\d+)\))");
    static const std::regex sp_re(R"(sp\((\d+),R\))");
    static const std::regex so_star_re(R"(so\*\((\d+)\))");
    static const std::regex so2_re(R"(so\(2,(\d+)\))");
    std::smatch m;
    if (std::regex_match(text, m, su_re))
        return HermitianFactor::su(std::stoll(m[1]), std::stoll(m[2]));
    if (std::regex_match(text, m, sp_re)) {
        const auto dim = std::stoll(m[1]);
        if (dim % 2)
            throw std::invalid_argument("sp(2n,R) needs an even dimension");
        return HermitianFactor::sp(dim / 2);
    }
    if (std::regex_match(text, m, so_star_re)) {
        const auto dim = std::stoll(m[1]);
        if (dim % 2)
            throw std::invalid_argument("so*(2n) needs an even dimension");
        return HermitianFactor::so_star(dim / 2);
    }
    if (std::regex_match(text, m, so2_re))
        return HermitianFactor::so2(std::stoll(m[1]));
    if (!text.empty() && text[0] == 'e')
        throw std::invalid_argument("exceptional factor '" + text + "' is not supported");
    throw std::invalid_argument("unknown Hermitian factor '" + text + "'");
}

std::int64_t total_rank(const FactorProduct& factors)
{
    std::int64_t r = 0;
    for (const auto& f : factors)
        r += f.rank;
    return r;
}

KahlerClass KahlerClass::distinguished(const FactorProduct& factors)
{
    return {factors, std::vector<Rational>(factors.size(), Rational(1))};
}

KahlerClass KahlerClass::zero(const FactorProduct& factors)
{
    return {factors, std::vector<Rational>(factors.size(), Rational(0))};
}

KahlerClass KahlerClass::flipped(std::size_t factor) const
{
    KahlerClass out = *this;
    out.coefficients.at(factor) = -out.coefficients.at(factor);
    return out;
}

Rational norm(const KahlerClass& kappa)
{
    if (kappa.coefficients.size() != kappa.factors.size())
        throw std::invalid_argument("Kaehler class: coefficient count does not match factors");
    Rational sum = 0;
    for (std::size_t i = 0; i < kappa.factors.size(); ++i)
        sum += abs(kappa.coefficients[i]) * kappa.factors[i].rank;
    return sum;
}

bool is_positive(const KahlerClass& kappa)
{
    return std::all_of(kappa.coefficients.begin(), kappa.coefficients.end(),
                       [](const Rational& m) { return m >= 0; });
}

bool is_strictly_positive(const KahlerClass& kappa)
{
    return std::all_of(kappa.coefficients.begin(), kappa.coefficients.end(),
                       [](const Rational& m) { return m > 0; });
}

bool is_negative(const KahlerClass& kappa)
{
    return std::all_of(kappa.coefficients.begin(), kappa.coefficients.end(),
                       [](const Rational& m) { return m <= 0; });
}

bool is_strictly_negative(const KahlerClass& kappa)
{
    return std::all_of(kappa.coefficients.begin(), kappa.coefficients.end(),
                       [](const Rational& m) { return m < 0; });
}

HomClassMap::HomClassMap(FactorProduct source, FactorProduct target, std::vector<std::vector<Rational>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.size() != source_.size())
        throw std::invalid_argument("class map: one matrix row per source factor required");
    for (const auto& row : matrix_)
        if (row.size() != target_.size())
            throw std::invalid_argument("class map: one matrix column per target factor required");
    for (std::size_t i = 0; i < target_.size(); ++i) {
        Rational used = 0;
        for (std::size_t j = 0; j < source_.size(); ++j)
            used += abs(matrix_[j][i]) * source_[j].rank;
        if (used > target_[i].rank)
            throw std::invalid_argument("class map: pullback of " + target_[i].name + " exceeds its norm");
    }
}

HomClassMap HomClassMap::identity(const FactorProduct& factors)
{
    std::vector<std::vector<Rational>> m(factors.size(), std::vector<Rational>(factors.size(), Rational(0)));
    for (std::size_t i = 0; i < factors.size(); ++i)
        m[i][i] = 1;
    return HomClassMap(factors, factors, std::move(m));
}

HomClassMap HomClassMap::projection(const FactorProduct& product, std::size_t index)
{
    if (index >= product.size())
        throw std::invalid_argument("projection index out of range");
    std::vector<std::vector<Rational>> m(product.size(), std::vector<Rational>(1, Rational(0)));
    m[index][0] = 1;
    return HomClassMap(product, {product[index]}, std::move(m));
}

KahlerClass HomClassMap::pullback(const KahlerClass& kappa) const
{
    if (kappa.factors != target_)
        throw std::invalid_argument("pullback: class lives on a different product");
    KahlerClass out = KahlerClass::zero(source_);
    for (std::size_t j = 0; j < source_.size(); ++j)
        for (std::size_t i = 0; i < target_.size(); ++i)
            out.coefficients[j] += matrix_[j][i] * kappa.coefficients[i];
    return out;
}

bool is_tight(const HomClassMap& map)
{
    return norm(map.pullback_distinguished()) == total_rank(map.target());
}

bool is_positive(const HomClassMap& map)
{
    return is_positive(map.pullback_distinguished());
}

bool is_strictly_positive(const HomClassMap& map)
{
    return is_strictly_positive(map.pullback_distinguished());
}

bool is_negative(const HomClassMap& map)
{
    return is_negative(map.pullback_distinguished());
}

HomClassMap compose(const HomClassMap& f, const HomClassMap& h)
{
    if (f.target() != h.source())
        throw std::invalid_argument("compose: target of f is not the source of h");
    const auto& a = f.matrix();
    const auto& b = h.matrix();
    std::vector<std::vector<Rational>> m(f.source().size(), std::vector<Rational>(h.target().size(), Rational(0)));
    for (std::size_t j = 0; j < f.source().size(); ++j)
        for (std::size_t k = 0; k < h.target().size(); ++k)
            for (std::size_t i = 0; i < f.target().size(); ++i)
                m[j][k] += a[j][i] * b[i][k];
    HomClassMap out(f.source(), h.target(), std::move(m));
    if (norm(out.pullback_distinguished()) > total_rank(h.target()))
        throw std::logic_error("compose: pullback increased the norm");
    return out;
}

bool CompositionChain::ordered() const
{
    return composite_norm <= weighted_source_norm && weighted_source_norm <= weighted_middle_rank &&
           weighted_middle_rank <= target_norm;
}

CompositionChain composition_chain(const HomClassMap& f, const HomClassMap& h)
{
    if (f.target() != h.source())
        throw std::invalid_argument("composition_chain: target of f is not the source of h");
    const KahlerClass lambda = h.pullback_distinguished();
    if (!is_strictly_positive(lambda))
        throw std::invalid_argument("composition_chain: h must be strictly positive");
    CompositionChain chain;
    chain.composite_norm = norm(compose(f, h).pullback_distinguished());
    for (std::size_t i = 0; i < f.target().size(); ++i) {
        chain.weighted_middle_rank += lambda.coefficients[i] * f.target()[i].rank;
        for (std::size_t j = 0; j < f.source().size(); ++j)
            chain.weighted_source_norm += lambda.coefficients[i] * abs(f.matrix()[j][i]) * f.source()[j].rank;
    }
    chain.target_norm = total_rank(h.target());
    return chain;
}

namespace {

class FixtureRng {
public:
    explicit FixtureRng(std::uint32_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin() { return uniform(0, 1) == 1; }
    int sign() { return coin() ? 1 : -1; }
    /// Strictly inside (0, 1).
    Rational fraction()
    {
        const int den = uniform(2, 9);
        return Rational(uniform(1, den - 1), den);
    }
    HermitianFactor factor()
    {
        switch (uniform(0, 3)) {
        case 0: {
            const int p = uniform(1, 5);
            return HermitianFactor::su(p + uniform(0, 2), p);
        }
        case 1: return HermitianFactor::sp(uniform(1, 4));
        case 2: return HermitianFactor::so_star(uniform(3, 8));
        default: return HermitianFactor::so2(uniform(3, 7));
        }
    }
    FactorProduct product(int lo, int hi)
    {
        FactorProduct out;
        const int n = uniform(lo, hi);
        for (int i = 0; i < n; ++i)
            out.push_back(factor());
        return out;
    }
    /// n positive rationals summing to 1.
    std::vector<Rational> partition(std::size_t n)
    {
        std::vector<Rational> w;
        Rational rest = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            w.push_back(rest * fraction());
            rest -= w.back();
        }
        w.push_back(rest);
        return w;
    }

private:
    std::mt19937 engine_;
};

void record(LemmaFixtureReport& report, bool ok, const std::string& detail)
{
    ++report.cases;
    if (!ok) {
        ++report.failures;
        if (report.failure_details.size() < 10)
            report.failure_details.push_back(detail);
    }
}

}  // namespace

LemmaFixtureReport check_factor12(std::uint32_t seed, int cases)
{
    FixtureRng rng(seed);
    LemmaFixtureReport report;
    report.lemma = "factor12";
    for (int n = 0; n < cases; ++n) {
        const FactorProduct g1 = rng.product(1, 3);
        const FactorProduct g2{rng.factor()};
        const FactorProduct g3 = rng.product(1, 2);
        const bool want_f = rng.coin();
        const bool want_h = rng.coin();
        const Rational r2 = g2[0].rank;

        std::vector<std::vector<Rational>> mh(1, std::vector<Rational>(g3.size()));
        const int eps = rng.sign();
        for (std::size_t m = 0; m < g3.size(); ++m)
            mh[0][m] = Rational(eps) * Rational(g3[m].rank) / r2;
        if (!want_h) {
            const std::size_t m = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(g3.size()) - 1));
            if (g3.size() > 1 && rng.coin())
                mh[0][m] = -mh[0][m];
            else
                mh[0][m] *= rng.fraction();
        }

        const auto w = rng.partition(g1.size());
        std::vector<std::vector<Rational>> mf(g1.size(), std::vector<Rational>(1));
        const std::size_t shrink = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(g1.size()) - 1));
        for (std::size_t j = 0; j < g1.size(); ++j) {
            Rational s = (!want_f && j == shrink) ? rng.fraction() : Rational(1);
            mf[j][0] = Rational(rng.sign()) * w[j] * s * r2 / Rational(g1[j].rank);
        }

        const HomClassMap f(g1, g2, mf);
        const HomClassMap h(g2, g3, mh);
        const bool composite = is_tight(compose(f, h));
        const bool both = is_tight(f) && is_tight(h);
        if (composite)
            ++report.positive_cases;
        else
            ++report.negative_cases;
        record(report, composite == both && is_tight(f) == want_f && is_tight(h) == want_h,
               "case " + std::to_string(n) + ": composite tight=" + std::to_string(composite) +
                   " but f,h tight=" + std::to_string(is_tight(f)) + "," + std::to_string(is_tight(h)));
    }
    return report;
}

LemmaFixtureReport check_factor2(std::uint32_t seed, int cases)
{
    FixtureRng rng(seed);
    LemmaFixtureReport report;
    report.lemma = "factor2";
    for (int n = 0; n < cases; ++n) {
        const FactorProduct source{rng.factor()};
        const FactorProduct target = rng.product(1, 3);
        const bool all_full = rng.coin();
        const bool uniform_sign = rng.coin();
        const int base_sign = rng.sign();
        std::vector<std::vector<Rational>> m(1, std::vector<Rational>(target.size()));
        for (std::size_t i = 0; i < target.size(); ++i) {
            const int s = uniform_sign ? base_sign : rng.sign();
            const Rational scale = (all_full || rng.coin()) ? Rational(1) : rng.fraction();
            m[0][i] = Rational(s) * scale * Rational(target[i].rank, source[0].rank);
        }
        const HomClassMap f(source, target, m);

        bool all_tight = true;
        bool all_pos = true;
        bool all_neg = true;
        for (std::size_t i = 0; i < target.size(); ++i) {
            const HomClassMap proj = compose(f, HomClassMap::projection(target, i));
            all_tight = all_tight && is_tight(proj);
            all_pos = all_pos && is_positive(proj);
            all_neg = all_neg && is_negative(proj);
        }
        const bool predicted = all_tight && (all_pos || all_neg);
        const bool tight = is_tight(f);
        if (tight)
            ++report.positive_cases;
        else
            ++report.negative_cases;
        record(report, tight == predicted,
               "case " + std::to_string(n) + ": tight=" + std::to_string(tight) +
                   " predicted=" + std::to_string(predicted));
    }
    return report;
}

LemmaFixtureReport check_factor3(std::uint32_t seed, int cases)
{
    FixtureRng rng(seed);
    LemmaFixtureReport report;
    report.lemma = "factor3";
    for (int n = 0; n < cases; ++n) {
        const FactorProduct g = rng.product(1, 2);
        const FactorProduct middle = rng.product(1, 3);
        const std::int64_t extra = rng.uniform(0, 2);
        const std::int64_t r = total_rank(middle) + extra;
        const FactorProduct l{HermitianFactor::su(r, r)};

        std::vector<std::vector<Rational>> mh(middle.size(), std::vector<Rational>(1));
        for (auto& row : mh)
            row[0] = rng.coin() ? Rational(1) : rng.fraction();

        // mode 0: f tight; mode 1: some column below its budget; mode 2: sign cancellation.
        const int mode = rng.uniform(0, 2);
        std::vector<int> row_sign(g.size());
        for (auto& s : row_sign)
            s = rng.sign();
        const std::size_t short_col = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(middle.size()) - 1));
        std::vector<std::vector<Rational>> mf(g.size(), std::vector<Rational>(middle.size()));
        for (std::size_t i = 0; i < middle.size(); ++i) {
            const auto w = rng.partition(g.size());
            const Rational s = (mode == 1 && i == short_col) ? rng.fraction() : Rational(1);
            const int flip = (mode == 2 && i == short_col && middle.size() > 1) ? -1 : 1;
            for (std::size_t j = 0; j < g.size(); ++j)
                mf[j][i] = Rational(row_sign[j] * flip) * w[j] * s * Rational(middle[i].rank) /
                           Rational(g[j].rank);
        }

        const HomClassMap f(g, middle, mf);
        const HomClassMap h(middle, l, mh);
        const CompositionChain chain = composition_chain(f, h);
        const bool f_tight = is_tight(f);
        const bool composite_tight = is_tight(compose(f, h));
        bool ok = chain.ordered() && composite_tight == !chain.strict();
        if (!f_tight) {
            ++report.positive_cases;
            ok = ok && !composite_tight;
        } else {
            ++report.negative_cases;
        }
        record(report, ok,
               "case " + std::to_string(n) + ": chain " + to_string(chain.composite_norm) + " <= " +
                   to_string(chain.weighted_source_norm) + " <= " + to_string(chain.weighted_middle_rank) +
                   " <= " + to_string(chain.target_norm));
    }
    return report;
}

std::vector<LemmaFixtureReport> kahler_lemma_fixtures(std::uint32_t seed, int cases)
{
    return {check_factor12(seed, cases), check_factor2(seed + 1, cases), check_factor3(seed + 2, cases)};
}

}  // namespace tight
