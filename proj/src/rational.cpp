#include "tight/rational.hpp"

#include <stdexcept>

namespace tight {

std::string to_string(const Rational& value)
{
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

Rational parse_rational(const std::string& text)
{
    try {
        std::size_t used = 0;
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            const auto num = std::stoll(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return Rational(num);
        }
        const std::string num_text = text.substr(0, slash);
        const std::string den_text = text.substr(slash + 1);
        const auto num = std::stoll(num_text, &used);
        if (used != num_text.size())
            throw std::invalid_argument(text);
        const auto den = std::stoll(den_text, &used);
        if (used != den_text.size() || den == 0)
            throw std::invalid_argument(text);
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

bool is_integer(const Rational& value)
{
    return value.denominator() == 1;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += a[i] * b[i];
    return sum;
}

Vec operator+(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector add: length mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector sub: length mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Vec operator*(const Rational& s, const Vec& a)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = s * a[i];
    return out;
}

std::vector<Vec> inverse(const std::vector<Vec>& matrix)
{
    const std::size_t n = matrix.size();
    std::vector<Vec> work = matrix;
    std::vector<Vec> inv(n, Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (work[i].size() != n)
            throw std::invalid_argument("inverse: matrix is not square");
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw std::domain_error("inverse: singular matrix");
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = work[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            work[col][j] /= scale;
            inv[col][j] /= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || work[row][col] == 0)
                continue;
            const Rational factor = work[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                work[row][j] -= factor * work[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

std::size_t matrix_rank(std::vector<Vec> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t row = 0; row < rows.size(); ++row) {
            if (row == rank || rows[row][col] == 0)
                continue;
            const Rational factor = rows[row][col] / rows[rank][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[row][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace tight
