#pragma once

// Brute-force references used by the unit and acceptance suites. Nothing here calls the
// library's matrix or Newton-identity code.

#include <cstdint>
#include <random>
#include <vector>

#include "hwzeta/exactnum/polynomial.hpp"

namespace oracle {

using hwzeta::Polynomial;
using hwzeta::Rational;
using Mat = std::vector<std::vector<Rational>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<Rational>(n)); }

inline Mat mul(const Mat& x, const Mat& y) {
    const std::size_t n = x.size();
    Mat z = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (x[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
        }
    return z;
}

/// Companion matrix whose eigenvalues are the inverse roots of P (P(0) = 1):
/// the roots of t^d P(1/t) = t^d + c_1 t^{d-1} + ... + c_d.
inline Mat companion(const Polynomial& p) {
    const auto d = static_cast<std::size_t>(p.degree());
    Mat m = zeros(d);
    for (std::size_t i = 0; i + 1 < d; ++i) m[i][i + 1] = 1;
    for (std::size_t j = 0; j < d; ++j) m[d - 1][j] = -p.coeff(d - j);
    return m;
}

inline Mat kron(const Mat& x, const Mat& y) {
    const std::size_t n = x.size(), m = y.size();
    Mat k = zeros(n * m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < m; ++d) k[a * m + c][b * m + d] = x[a][b] * y[c][d];
    return k;
}

/// trace(C^n) for n = 1..m.
inline std::vector<Rational> trace_powers(const Polynomial& p, std::size_t m) {
    std::vector<Rational> out(m);
    if (p.degree() <= 0) return out;
    const Mat c = companion(p);
    Mat power = c;
    for (std::size_t n = 0; n < m; ++n) {
        for (std::size_t i = 0; i < c.size(); ++i) out[n] += power[i][i];
        power = mul(power, c);
    }
    return out;
}

/// Determinant by fraction-exact Gaussian elimination.
inline Rational det(Mat a) {
    const std::size_t n = a.size();
    Rational d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    return d;
}

/// Polynomial through the points (xs[i], ys[i]) by Lagrange interpolation.
inline Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    Polynomial out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial basis{1};
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial{-xs[j], 1};
            denom *= xs[i] - xs[j];
        }
        basis = basis * Polynomial{ys[i] / denom};
        out += basis;
    }
    return out;
}

/// det(1 - t (C_P (x) C_Q)) sampled at deg+1 points and interpolated.
inline Polynomial tensor_by_interpolation(const Polynomial& p, const Polynomial& q) {
    if (p.degree() <= 0 || q.degree() <= 0) return Polynomial{1};
    const Mat k = kron(companion(p), companion(q));
    const std::size_t n = k.size();
    std::vector<Rational> xs, ys;
    for (std::size_t s = 0; s <= n; ++s) {
        const Rational x(static_cast<long>(s));
        Mat m = zeros(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? Rational(1) : Rational(0)) - x * k[i][j];
        xs.push_back(x);
        ys.push_back(det(std::move(m)));
    }
    return interpolate(xs, ys);
}

/// Normalized polynomial of degree <= max_deg with integer coefficients in [lo, hi].
inline Polynomial random_poly(std::mt19937_64& rng, int max_deg, int lo, int hi) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(lo, hi);
    const int d = deg(rng);
    std::vector<Rational> c{1};
    for (int k = 1; k <= d; ++k) c.emplace_back(coef(rng));
    return Polynomial(std::move(c));
}

}  // namespace oracle
