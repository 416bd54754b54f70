#pragma once

#include <cstddef>
#include <vector>

#include "hwzeta/exactnum/rational.hpp"

namespace hwzeta {

/// Dense square matrix over Q, row-major.
class Matrix {
public:
    explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    Rational trace() const {
        Rational t;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix z(x.n_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t k = 0; k < x.n_; ++k) {
                const Rational& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < x.n_; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t n_;
    std::vector<Rational> a_;
};

inline Matrix kronecker(const Matrix& x, const Matrix& y) {
    const std::size_t n = x.size(), m = y.size();
    Matrix k(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (x(i, j).is_zero()) continue;
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t s = 0; s < m; ++s) k(i * m + r, j * m + s) = x(i, j) * y(r, s);
        }
    return k;
}

/// Coefficients b_0 = 1, b_1, ..., b_n of det(1 - t*A) = sum b_k t^k (Faddeev-LeVerrier).
inline std::vector<Rational> reversed_charpoly(const Matrix& a) {
    const std::size_t n = a.size();
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    Matrix m(n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += b[k - 1];
        b[k] = -(a * m).trace() / Rational(static_cast<long long>(k));
    }
    return b;
}

}  // namespace hwzeta
