#include "passoc/linalg.hpp"

#include "passoc/errors.hpp"

#include <utility>

namespace passoc {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Multiplies each row (including the optional right-hand side column) by the
// lcm of its denominators.
IntegerMatrix to_integer_rows(const RationalMatrix& a, const std::vector<Rational>* b)
{
    IntegerMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer scale = 1;
        for (const auto& q : a[i])
            scale = boost::multiprecision::lcm(scale, Integer(denominator(q)));
        if (b)
            scale = boost::multiprecision::lcm(scale, Integer(denominator((*b)[i])));
        auto& row = out[i];
        row.reserve(a[i].size() + 1);
        for (const auto& q : a[i])
            row.push_back(Integer(numerator(q)) * (scale / Integer(denominator(q))));
        if (b)
            row.push_back(Integer(numerator((*b)[i])) * (scale / Integer(denominator((*b)[i]))));
    }
    return out;
}

// In-place Bareiss elimination on the first n columns. Returns the signed
// determinant of the leading n x n block (0 if singular).
Integer bareiss(IntegerMatrix& m, std::size_t n)
{
    Integer previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m[i].size(); ++j) {
                // Exact by Sylvester's identity.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            }
            m[i][k] = 0;
        }
        previous = m[k][k];
    }
    return sign < 0 ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

} // namespace

std::optional<std::vector<Rational>> solve_fraction_free(const RationalMatrix& a, const std::vector<Rational>& b)
{
    const std::size_t n = a.size();
    if (b.size() != n)
        throw InvalidInputError("right-hand side length does not match the matrix");
    for (const auto& row : a)
        if (row.size() != n)
            throw InvalidInputError("solve_fraction_free needs a square matrix");
    if (n == 0)
        return std::vector<Rational>{};

    auto m = to_integer_rows(a, &b);
    if (bareiss(m, n) == 0)
        return std::nullopt;

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= Rational(m[i][j]) * x[j];
        x[i] = acc / Rational(m[i][i]);
    }
    return x;
}

Rational determinant_fraction_free(const RationalMatrix& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Rational row_scale = 1;
    for (const auto& row : a) {
        if (row.size() != n)
            throw InvalidInputError("determinant needs a square matrix");
        Integer scale = 1;
        for (const auto& q : row)
            scale = boost::multiprecision::lcm(scale, Integer(denominator(q)));
        row_scale *= Rational(scale);
    }
    auto m = to_integer_rows(a, nullptr);
    return Rational(bareiss(m, n)) / row_scale;
}

} // namespace passoc
