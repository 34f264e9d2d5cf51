#pragma once

#include "smae/expr/scalar.hpp"

#include <optional>
#include <vector>

namespace smae {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline bool field_is_zero(const expr::Scalar& s) { return s.is_zero(); }
inline bool field_is_zero(const mpq_class& q) { return sgn(q) == 0; }
inline std::size_t field_cost(const expr::Scalar& s) { return s.complexity(); }
inline std::size_t field_cost(const mpq_class& q)
{
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

} // namespace detail

/// Reduced row echelon form in place; returns the pivot columns. Pivots are
/// chosen as the cheapest nonzero entry in each column.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_cost = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (detail::field_is_zero(m[i][c]))
                continue;
            std::size_t cost = detail::field_cost(m[i][c]);
            if (best == rows || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == rows)
            continue;
        std::swap(m[r], m[best]);
        T inv = T(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            if (!detail::field_is_zero(m[r][j]))
                m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || detail::field_is_zero(m[i][c]))
                continue;
            T f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!detail::field_is_zero(m[r][j]))
                    m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Row echelon rank (no back substitution).
template <class T>
std::size_t rank(Matrix<T> m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows, best_cost = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (detail::field_is_zero(m[i][c]))
                continue;
            std::size_t cost = detail::field_cost(m[i][c]);
            if (best == rows || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == rows)
            continue;
        std::swap(m[r], m[best]);
        T inv = T(1) / m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (detail::field_is_zero(m[i][c]))
                continue;
            T f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                if (!detail::field_is_zero(m[r][j]))
                    m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Basis of {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, std::size_t cols)
{
    std::vector<std::vector<T>> basis;
    if (m.empty()) {
        for (std::size_t f = 0; f < cols; ++f) {
            std::vector<T> v(cols, T(0));
            v[f] = T(1);
            basis.push_back(v);
        }
        return basis;
    }
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
T determinant(Matrix<T> m)
{
    const std::size_t n = m.size();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n, best_cost = 0;
        for (std::size_t i = c; i < n; ++i) {
            if (detail::field_is_zero(m[i][c]))
                continue;
            std::size_t cost = detail::field_cost(m[i][c]);
            if (best == n || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == n)
            return T(0);
        if (best != c) {
            std::swap(m[c], m[best]);
            det = -det;
        }
        det = det * m[c][c];
        T inv = T(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (detail::field_is_zero(m[i][c]))
                continue;
            T f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!detail::field_is_zero(m[c][j]))
                    m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

/// Some solution of m x = b, if one exists.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b)
{
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    Matrix<T> aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i)
        aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;
    std::vector<T> x(cols, T(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug[i][cols];
    return x;
}

} // namespace smae
