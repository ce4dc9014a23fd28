#pragma once

#include "gtbrion/rational.hpp"

#include <optional>
#include <vector>

namespace gtbrion::linalg {

using IntVector = std::vector<long long>;
using Matrix = std::vector<std::vector<Rational>>;

inline Matrix to_matrix(const std::vector<IntVector>& rows) {
    Matrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> row;
        row.reserve(r.size());
        for (long long v : r) row.emplace_back(static_cast<long>(v));
        m.push_back(std::move(row));
    }
    return m;
}

/// Row-reduce in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k == r || m[k][c] == 0) continue;
            Rational f = m[k][c];
            for (std::size_t j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }
inline std::size_t rank(const std::vector<IntVector>& rows) { return rank(to_matrix(rows)); }

/// Column indices of a maximal set of coordinates on which the given vectors
/// stay independent (projecting onto them is injective on their span).
inline std::vector<std::size_t> independent_coordinates(const std::vector<IntVector>& vectors) {
    Matrix m = to_matrix(vectors);
    return row_reduce(m);
}

inline Rational determinant(Matrix m) {
    std::size_t d = m.size();
    Rational det(1);
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && m[p][c] == 0) ++p;
        if (p == d) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = 1 / m[c][c];
        for (std::size_t k = c + 1; k < d; ++k) {
            if (m[k][c] == 0) continue;
            Rational f = m[k][c] * inv;
            for (std::size_t j = c; j < d; ++j) m[k][j] -= f * m[c][j];
        }
    }
    return det;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& a) {
    std::size_t d = a.size();
    Matrix aug(d, std::vector<Rational>(2 * d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug[i][j] = a[i][j];
        aug[i][d + i] = 1;
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < d || pivots[d - 1] >= d) return std::nullopt;
    Matrix inv(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) inv[i][j] = aug[i][d + j];
    return inv;
}

inline std::vector<Rational> multiply(const Matrix& a, const std::vector<Rational>& v) {
    std::vector<Rational> out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0) out[i] += a[i][j] * v[j];
    return out;
}

}  // namespace gtbrion::linalg
