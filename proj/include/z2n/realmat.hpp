#pragma once

#include <cstddef>
#include <vector>

#include "z2n/errors.hpp"
#include "z2n/rational.hpp"

namespace z2n {

// Dense matrices over exact rationals (the "real" matrices of the kernel).
using RatMat = std::vector<std::vector<Rational>>;

inline RatMat rm_zero(std::size_t r, std::size_t c) {
    return RatMat(r, std::vector<Rational>(c, Rational(0)));
}

inline RatMat rm_identity(std::size_t k) {
    RatMat m = rm_zero(k, k);
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

inline RatMat rm_mul(const RatMat& a, const RatMat& b) {
    const std::size_t r = a.size();
    const std::size_t k = a.empty() ? 0 : a[0].size();
    const std::size_t c = b.empty() ? 0 : b[0].size();
    if (b.size() != k) throw ShapeMismatch("rational matrix product shape mismatch");
    RatMat out = rm_zero(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

// Determinant by fraction-free-ish Gaussian elimination (exact rationals).
inline Rational rm_det(RatMat m) {
    const std::size_t k = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rational inv = Rational(1) / m[col][col];
        for (std::size_t row = col + 1; row < k; ++row) {
            if (m[row][col] == 0) continue;
            const Rational f = m[row][col] * inv;
            for (std::size_t j = col; j < k; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

inline bool rm_is_invertible(const RatMat& m) { return rm_det(m) != 0; }

// Gauss-Jordan inverse; throws NotInvertible on a singular matrix.
inline RatMat rm_inverse(RatMat m) {
    const std::size_t k = m.size();
    RatMat inv = rm_identity(k);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) throw NotInvertible("singular rational matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rational f = Rational(1) / m[col][col];
        for (std::size_t j = 0; j < k; ++j) {
            m[col][j] *= f;
            inv[col][j] *= f;
        }
        for (std::size_t row = 0; row < k; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational g = m[row][col];
            for (std::size_t j = 0; j < k; ++j) {
                m[row][j] -= g * m[col][j];
                inv[row][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace z2n
