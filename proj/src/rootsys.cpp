#include "tight/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace tight {

namespace {

struct SimpleData {
    std::size_t ambient_dim;
    std::vector<Vec> simple_roots;
    std::vector<std::vector<Rational>> cartan;
    std::set<std::size_t> noncompact;
    std::int64_t weyl_order;
};

Vec ints(std::initializer_list<std::int64_t> values)
{
    Vec out;
    for (auto v : values)
        out.emplace_back(v);
    return out;
}

// A1 sits in Q^2 as (1,-1) so that <alpha,alpha> = 2, A2 in the sum-zero plane of Q^3,
// and C2 with alpha_1 = (1,-1) short and alpha_2 = (0,2) long.
SimpleData simple_data(SimpleKind kind)
{
    switch (kind) {
    case SimpleKind::A1:
        return {2, {ints({1, -1})}, {ints({2})}, {0}, 2};
    case SimpleKind::A2:
        return {3, {ints({1, -1, 0}), ints({0, 1, -1})}, {ints({2, -1}), ints({-1, 2})}, {0}, 6};
    case SimpleKind::C2:
        return {2, {ints({1, -1}), ints({0, 2})}, {ints({2, -2}), ints({-1, 2})}, {1}, 8};
    }
    throw std::invalid_argument("unsupported root system kind");
}

Rational norm2(const Vec& v)
{
    return dot(v, v);
}

}  // namespace

std::string to_string(SimpleKind kind)
{
    switch (kind) {
    case SimpleKind::A1: return "A1";
    case SimpleKind::A2: return "A2";
    case SimpleKind::C2: return "C2";
    }
    return "?";
}

RootSystemKind RootSystemKind::product(std::vector<RootSystemKind> parts)
{
    RootSystemKind out;
    for (const auto& p : parts)
        out.factors.insert(out.factors.end(), p.factors.begin(), p.factors.end());
    return out;
}

std::string to_string(const RootSystemKind& kind)
{
    std::string out;
    for (std::size_t i = 0; i < kind.factors.size(); ++i) {
        if (i)
            out += "x";
        out += to_string(kind.factors[i]);
    }
    return out;
}

RootSystemKind parse_root_system_kind(const std::string& text)
{
    std::string upper;
    for (char c : text)
        upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    RootSystemKind out;
    std::size_t start = 0;
    while (start <= upper.size()) {
        const auto end = std::min(upper.find('X', start), upper.size());
        const std::string token = upper.substr(start, end - start);
        if (token == "A1")
            out.factors.push_back(SimpleKind::A1);
        else if (token == "A2")
            out.factors.push_back(SimpleKind::A2);
        else if (token == "C2")
            out.factors.push_back(SimpleKind::C2);
        else
            throw std::invalid_argument("unsupported root system kind: '" + text + "'");
        start = end + 1;
    }
    return out;
}

Weight::Weight(std::initializer_list<std::int64_t> c)
{
    for (auto v : c)
        coords.emplace_back(v);
}

std::string to_string(const Weight& weight)
{
    std::string out = "(";
    for (std::size_t i = 0; i < weight.coords.size(); ++i) {
        if (i)
            out += ",";
        const auto& c = weight.coords[i];
        out += is_integer(c) ? std::to_string(c.numerator()) : to_string(c);
    }
    return out + ")";
}

RootSystem::RootSystem(RootSystemKind kind) : kind_(std::move(kind))
{
    if (kind_.factors.empty())
        throw std::invalid_argument("root system needs at least one simple factor");

    std::size_t offset_rank = 0;
    std::vector<SimpleData> blocks;
    for (auto f : kind_.factors) {
        blocks.push_back(simple_data(f));
        ambient_dim_ += blocks.back().ambient_dim;
    }
    const std::size_t total_rank = std::accumulate(
        blocks.begin(), blocks.end(), std::size_t{0},
        [](std::size_t acc, const SimpleData& b) { return acc + b.simple_roots.size(); });
    cartan_.assign(total_rank, std::vector<Rational>(total_rank, Rational(0)));

    std::size_t offset_dim = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.simple_roots.size(); ++i) {
            Vec root(ambient_dim_, Rational(0));
            std::copy(b.simple_roots[i].begin(), b.simple_roots[i].end(),
                      root.begin() + static_cast<std::ptrdiff_t>(offset_dim));
            simple_roots_.push_back(std::move(root));
            for (std::size_t j = 0; j < b.simple_roots.size(); ++j)
                cartan_[offset_rank + i][offset_rank + j] = b.cartan[i][j];
        }
        for (auto n : b.noncompact)
            noncompact_.insert(offset_rank + n);
        offset_rank += b.simple_roots.size();
        offset_dim += b.ambient_dim;
    }

    std::vector<Vec> gram(total_rank, Vec(total_rank));
    for (std::size_t i = 0; i < total_rank; ++i)
        for (std::size_t j = 0; j < total_rank; ++j)
            gram[i][j] = dot(simple_roots_[i], simple_roots_[j]);
    gram_inverse_ = inverse(gram);
    cartan_inverse_ = inverse(cartan_);

    // omega_i = sum_j M_ij alpha_j with M = (C^T)^{-1}
    std::vector<Vec> cartan_t(total_rank, Vec(total_rank));
    for (std::size_t i = 0; i < total_rank; ++i)
        for (std::size_t j = 0; j < total_rank; ++j)
            cartan_t[i][j] = cartan_[j][i];
    const auto m = inverse(cartan_t);
    for (std::size_t i = 0; i < total_rank; ++i) {
        Vec w(ambient_dim_, Rational(0));
        for (std::size_t j = 0; j < total_rank; ++j)
            w = w + m[i][j] * simple_roots_[j];
        fundamental_.push_back(std::move(w));
    }

    // All roots are the Weyl orbit of the simple roots.
    std::set<Vec> all(simple_roots_.begin(), simple_roots_.end());
    std::deque<Vec> queue(simple_roots_.begin(), simple_roots_.end());
    while (!queue.empty()) {
        const Vec beta = queue.front();
        queue.pop_front();
        for (const auto& alpha : simple_roots_) {
            const Rational c = 2 * dot(beta, alpha) / norm2(alpha);
            Vec image = beta - c * alpha;
            if (all.insert(image).second)
                queue.push_back(std::move(image));
        }
    }
    for (const auto& beta : all) {
        const Vec c = simple_root_coords(beta);
        if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; }))
            positive_roots_.push_back(beta);
    }
    std::sort(positive_roots_.begin(), positive_roots_.end(), [this](const Vec& a, const Vec& b) {
        const Vec ca = simple_root_coords(a);
        const Vec cb = simple_root_coords(b);
        const Rational ha = std::accumulate(ca.begin(), ca.end(), Rational(0));
        const Rational hb = std::accumulate(cb.begin(), cb.end(), Rational(0));
        if (ha != hb)
            return ha < hb;
        return ca > cb;
    });

    validate();
}

void RootSystem::validate() const
{
    const std::size_t n = rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational entry = 2 * dot(simple_roots_[j], simple_roots_[i]) / norm2(simple_roots_[i]);
            if (entry != cartan_[i][j])
                throw std::logic_error("root system: Cartan matrix does not match realization");
            const Rational pairing = 2 * dot(fundamental_[i], simple_roots_[j]) / norm2(simple_roots_[j]);
            if (pairing != (i == j ? 1 : 0))
                throw std::logic_error("root system: fundamental weights are not dual to coroots");
        }
    std::size_t offset = 0;
    for (auto f : kind_.factors) {
        if (f == SimpleKind::C2 && !(norm2(simple_roots_[offset + 1]) > norm2(simple_roots_[offset])))
            throw std::logic_error("root system: C2 second simple root must be long");
        offset += (f == SimpleKind::A1) ? 1 : 2;
    }
    for (const auto& beta : positive_roots_) {
        for (const auto& c : simple_root_coords(beta))
            if (!is_integer(c) || c < 0)
                throw std::logic_error("root system: positive root is not a nonnegative integer combination");
    }
}

std::vector<Vec> RootSystem::roots() const
{
    std::vector<Vec> out = positive_roots_;
    for (const auto& beta : positive_roots_)
        out.push_back(Rational(-1) * beta);
    return out;
}

std::int64_t RootSystem::weyl_group_order() const
{
    std::int64_t order = 1;
    for (auto f : kind_.factors)
        order *= simple_data(f).weyl_order;
    return order;
}

bool RootSystem::is_root(const Vec& v) const
{
    if (v.size() != ambient_dim_)
        return false;
    const Vec neg = Rational(-1) * v;
    return std::any_of(positive_roots_.begin(), positive_roots_.end(),
                       [&](const Vec& beta) { return beta == v || beta == neg; });
}

bool RootSystem::is_noncompact(const Vec& root) const
{
    if (!is_root(root))
        throw std::invalid_argument("is_noncompact: not a root");
    const Vec c = simple_root_coords(root);
    Rational sum = 0;
    for (auto i : noncompact_)
        sum += c[i];
    return sum.numerator() % 2 != 0;
}

Vec RootSystem::simple_root_coords(const Vec& v) const
{
    const std::size_t n = rank();
    Vec rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        rhs[i] = dot(v, simple_roots_[i]);
    Vec c(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c[i] += gram_inverse_[i][j] * rhs[j];
    Vec back(ambient_dim_, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        back = back + c[i] * simple_roots_[i];
    if (back != v)
        throw std::invalid_argument("vector is not in the span of the simple roots");
    return c;
}

Vec RootSystem::root_from_simple_coords(const std::vector<std::int64_t>& coeffs) const
{
    if (coeffs.size() != rank())
        throw std::invalid_argument("root coefficients: wrong length");
    Vec v(ambient_dim_, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        v = v + Rational(coeffs[i]) * simple_roots_[i];
    return v;
}

std::string RootSystem::root_label(const Vec& root) const
{
    const Vec c = simple_root_coords(root);
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        const auto num = c[i].numerator();
        if (num < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        const auto mag = num < 0 ? -num : num;
        if (mag != 1)
            out += std::to_string(mag);
        out += "a" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

Vec RootSystem::to_euclidean(const Weight& weight) const
{
    if (weight.coords.size() != rank())
        throw std::invalid_argument("weight has wrong number of coordinates for " + to_string(kind_));
    Vec v(ambient_dim_, Rational(0));
    for (std::size_t i = 0; i < rank(); ++i)
        v = v + weight.coords[i] * fundamental_[i];
    return v;
}

Weight RootSystem::from_euclidean(const Vec& v) const
{
    if (v.size() != ambient_dim_)
        throw std::invalid_argument("vector has wrong ambient dimension");
    std::vector<Rational> m(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        m[i] = 2 * dot(v, simple_roots_[i]) / norm2(simple_roots_[i]);
    Weight w(std::move(m));
    if (to_euclidean(w) != v)
        throw std::invalid_argument("vector is not in the span of the weights");
    return w;
}

Rational RootSystem::eval_on_coroot(const Weight& weight, const Vec& root) const
{
    if (!is_root(root))
        throw std::invalid_argument("eval_on_coroot: not a root of " + to_string(kind_));
    return 2 * dot(to_euclidean(weight), root) / norm2(root);
}

Weight RootSystem::reflect(const Weight& weight, std::size_t i) const
{
    if (weight.coords.size() != rank() || i >= rank())
        throw std::invalid_argument("reflect: index or weight shape out of range");
    Weight out = weight;
    const Rational mi = weight.coords[i];
    for (std::size_t j = 0; j < rank(); ++j)
        out.coords[j] -= mi * cartan_[j][i];
    return out;
}

std::set<Weight> RootSystem::weyl_orbit(const Weight& weight) const
{
    std::set<Weight> orbit{weight};
    std::deque<Weight> queue{weight};
    while (!queue.empty()) {
        const Weight w = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < rank(); ++i) {
            Weight image = reflect(w, i);
            if (orbit.insert(image).second)
                queue.push_back(std::move(image));
        }
    }
    return orbit;
}

bool RootSystem::is_dominant_integral(const Weight& weight) const
{
    if (weight.coords.size() != rank())
        return false;
    return std::all_of(weight.coords.begin(), weight.coords.end(),
                       [](const Rational& c) { return is_integer(c) && c >= 0; });
}

void RootSystem::require_dominant_integral(const Weight& highest) const
{
    if (highest.coords.size() != rank())
        throw std::invalid_argument("highest weight " + to_string(highest) + " has wrong length for " +
                                    to_string(kind_));
    if (!is_dominant_integral(highest))
        throw std::invalid_argument("highest weight " + to_string(highest) + " is not dominant integral");
}

Weight RootSystem::dominant_conjugate(const Weight& weight) const
{
    Weight w = weight;
    for (;;) {
        std::size_t i = 0;
        while (i < rank() && w.coords[i] >= 0)
            ++i;
        if (i == rank())
            return w;
        w = reflect(w, i);
    }
}

Weight RootSystem::simple_root_as_weight(std::size_t i) const
{
    std::vector<Rational> c(rank());
    for (std::size_t j = 0; j < rank(); ++j)
        c[j] = cartan_[j][i];
    return Weight(std::move(c));
}

Rational RootSystem::depth(const Weight& highest, const Weight& mu) const
{
    Rational sum = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            sum += cartan_inverse_[i][j] * (highest.coords[j] - mu.coords[j]);
    return sum;
}

std::set<Weight> RootSystem::weight_support(const Weight& highest) const
{
    require_dominant_integral(highest);
    // mu is a weight iff its dominant conjugate lies below highest in the root order.
    auto below = [&](const Weight& mu) {
        const Weight dom = dominant_conjugate(mu);
        for (std::size_t i = 0; i < rank(); ++i) {
            Rational c = 0;
            for (std::size_t j = 0; j < rank(); ++j)
                c += cartan_inverse_[i][j] * (highest.coords[j] - dom.coords[j]);
            if (!is_integer(c) || c < 0)
                return false;
        }
        return true;
    };
    std::set<Weight> support{highest};
    std::deque<Weight> queue{highest};
    while (!queue.empty()) {
        const Weight mu = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < rank(); ++i) {
            Weight next = mu;
            const Weight alpha = simple_root_as_weight(i);
            for (std::size_t j = 0; j < rank(); ++j)
                next.coords[j] -= alpha.coords[j];
            if (!support.count(next) && below(next)) {
                support.insert(next);
                queue.push_back(std::move(next));
            }
        }
    }
    return support;
}

WeightMultiplicities RootSystem::weight_multiplicities(const Weight& highest) const
{
    const auto support = weight_support(highest);
    std::vector<Weight> ordered(support.begin(), support.end());
    std::stable_sort(ordered.begin(), ordered.end(), [&](const Weight& a, const Weight& b) {
        return depth(highest, a) < depth(highest, b);
    });

    Vec rho(ambient_dim_, Rational(0));
    for (const auto& w : fundamental_)
        rho = rho + w;
    const Vec top = to_euclidean(highest) + rho;
    const Rational top_norm = norm2(top);

    std::map<Weight, Vec> euclid;
    for (const auto& mu : ordered)
        euclid.emplace(mu, to_euclidean(mu));
    std::vector<Weight> positive_as_weights;
    for (const auto& beta : positive_roots_)
        positive_as_weights.push_back(from_euclidean(beta));

    WeightMultiplicities mult;
    for (const auto& mu : ordered) {
        if (mu == highest) {
            mult[mu] = 1;
            continue;
        }
        Rational numerator = 0;
        for (std::size_t r = 0; r < positive_roots_.size(); ++r) {
            Weight shifted = mu;
            for (;;) {
                for (std::size_t j = 0; j < rank(); ++j)
                    shifted.coords[j] += positive_as_weights[r].coords[j];
                const auto it = mult.find(shifted);
                if (it == mult.end())
                    break;
                numerator += dot(euclid.at(shifted), positive_roots_[r]) * it->second;
            }
        }
        const Rational denominator = top_norm - norm2(euclid.at(mu) + rho);
        const Rational m = 2 * numerator / denominator;
        if (!is_integer(m) || m <= 0)
            throw std::logic_error("Freudenthal recursion produced a non-positive multiplicity");
        mult[mu] = m.numerator();
    }
    return mult;
}

std::int64_t RootSystem::dimension(const Weight& highest) const
{
    require_dominant_integral(highest);
    Vec rho(ambient_dim_, Rational(0));
    for (const auto& w : fundamental_)
        rho = rho + w;
    const Vec shifted = to_euclidean(highest) + rho;
    Rational product = 1;
    for (const auto& beta : positive_roots_)
        product *= dot(shifted, beta) / dot(rho, beta);
    if (!is_integer(product))
        throw std::logic_error("Weyl dimension formula produced a non-integer");
    return product.numerator();
}

std::vector<Weight> RootSystem::dominant_weights_up_to(std::int64_t bound) const
{
    std::vector<Weight> out;
    std::vector<std::int64_t> current(rank(), 0);
    auto recurse = [&](auto&& self, std::size_t index, std::int64_t remaining) -> void {
        if (index == rank()) {
            std::vector<Rational> c(current.begin(), current.end());
            out.emplace_back(std::move(c));
            return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
            current[index] = v;
            self(self, index + 1, remaining - v);
        }
    };
    if (bound >= 0)
        recurse(recurse, 0, bound);
    return out;
}

RootSystem build_root_system(const RootSystemKind& kind)
{
    return RootSystem(kind);
}

}  // namespace tight
