#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hwzeta/exactnum/matrix.hpp"
#include "hwzeta/exactnum/rational.hpp"

namespace hwzeta {

/// Polynomial in t over Q; coefficient k multiplies t^k.
///
/// Frobenius data is carried in the normalized form det(1 - F t) = prod (1 - a_i t),
/// whose constant term is 1. Intermediate values need not be normalized; callers that
/// require it check is_normalized().
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial one() { return Polynomial{1}; }

    /// 1 - v t
    static Polynomial linear_factor(const Rational& v) { return Polynomial{1, -v}; }

    /// Degree of the zero polynomial is -1.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_normalized() const { return !c_.empty() && c_[0] == 1; }

    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial&) const = default;

    /// Human-readable form, e.g. `1 + 3t + 5t^2` or `1 - 1/5t`.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Rational& x = c_[k];
            if (x.is_zero()) continue;
            bool neg = x.sign() < 0;
            Rational mag = neg ? -x : x;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (k == 0 || mag != 1) s += mag.to_string();
            if (k >= 1) s += "t";
            if (k >= 2) s += "^" + std::to_string(k);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Polynomial ipow(const Polynomial& p, unsigned e) {
    Polynomial r = Polynomial::one();
    for (unsigned k = 0; k < e; ++k) r *= p;
    return r;
}

/// Exact Horner evaluation.
inline Rational eval_at(const Polynomial& p, const Rational& x) {
    Rational acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace detail {
/// Divides by (1 - v t) if exact; returns false (and leaves `p` untouched) otherwise.
inline bool try_divide_linear(Polynomial& p, const Rational& v) {
    const auto& c = p.coefficients();
    if (c.size() < 2) return false;
    // p = (1 - v t) q  <=>  q_0 = c_0, q_k = c_k + v q_{k-1}, and c_n + v q_{n-1} = 0.
    std::vector<Rational> q(c.size() - 1);
    q[0] = c[0];
    for (std::size_t k = 1; k < q.size(); ++k) q[k] = c[k] + v * q[k - 1];
    if (!(c.back() + v * q.back()).is_zero()) return false;
    p = Polynomial(std::move(q));
    return true;
}
}  // namespace detail

/// Largest m with (1 - v t)^m dividing p over Q.
inline int inverse_root_multiplicity(const Polynomial& p, const Rational& v) {
    if (v.is_zero()) throw std::invalid_argument("inverse_root_multiplicity: v must be nonzero");
    Polynomial work = p;
    int m = 0;
    while (detail::try_divide_linear(work, v)) ++m;
    return m;
}

/// p / (1 - v t)^m, exactly.
inline Polynomial deflate(const Polynomial& p, const Rational& v, int m) {
    Polynomial work = p;
    for (int k = 0; k < m; ++k)
        if (!detail::try_divide_linear(work, v))
            throw NotDivisible("(1 - " + v.to_string() + "t)^" + std::to_string(m) + " does not divide " +
                               p.to_string());
    return work;
}

/// p(c t): every inverse root multiplied by c.
inline Polynomial scale_roots(const Polynomial& p, const Rational& c) {
    std::vector<Rational> out = p.coefficients();
    Rational ck = 1;
    for (auto& x : out) {
        x *= ck;
        ck *= c;
    }
    return Polynomial(std::move(out));
}

/// The polynomial whose inverse roots are c / a_i for the inverse roots a_i of p.
inline Polynomial reciprocal_twist(const Polynomial& p, const Rational& c) {
    if (c.is_zero()) throw std::invalid_argument("reciprocal_twist: c must be nonzero");
    if (p.is_zero() || p.coeff(0).is_zero()) throw ZeroRoot("reciprocal_twist: inverse root 0 in " + p.to_string());
    if (!p.is_normalized()) throw NotNormalized("reciprocal_twist: constant term must be 1: " + p.to_string());
    // e_k(c/a) = c^k e_{d-k}(a) / e_d(a), and coefficient k is (-1)^k e_k, so out_k = c^k c_{d-k} / c_d.
    const auto d = static_cast<std::size_t>(p.degree());
    std::vector<Rational> out(d + 1);
    Rational ck = 1;
    for (std::size_t k = 0; k <= d; ++k) {
        out[k] = ck * p.coeff(d - k) / p.leading();
        ck *= c;
    }
    return Polynomial(std::move(out));
}

/// Power sums s_1..s_m of the inverse roots, by Newton's identities.
inline std::vector<Rational> power_sums(const Polynomial& p, std::size_t m) {
    if (!p.is_normalized()) throw NotNormalized("power_sums: constant term must be 1: " + p.to_string());
    // s_n + c_1 s_{n-1} + ... + c_{n-1} s_1 + n c_n = 0
    std::vector<Rational> s(m + 1);
    for (std::size_t n = 1; n <= m; ++n) {
        Rational acc = Rational(static_cast<long long>(n)) * p.coeff(n);
        for (std::size_t i = 1; i < n; ++i) acc += p.coeff(i) * s[n - i];
        s[n] = -acc;
    }
    s.erase(s.begin());
    return s;
}

/// Companion matrix whose eigenvalues are the inverse roots of a normalized p.
inline Matrix inverse_root_companion(const Polynomial& p) {
    const auto d = static_cast<std::size_t>(std::max(p.degree(), 0));
    Matrix m(d);
    // x^d + c_1 x^{d-1} + ... + c_d: subdiagonal ones, last column -c_{d-i}.
    for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -p.coeff(d - i);
    return m;
}

/// Polynomial whose inverse roots are the pairwise products a_i b_j.
inline Polynomial tensor_poly(const Polynomial& p, const Polynomial& q) {
    if (!p.is_normalized() || !q.is_normalized())
        throw NotNormalized("tensor_poly: constant terms must be 1: " + p.to_string() + ", " + q.to_string());
    if (p.degree() == 0 || q.degree() == 0) return Polynomial::one();
    return Polynomial(reversed_charpoly(kronecker(inverse_root_companion(p), inverse_root_companion(q))));
}

/// Newton-polygon slopes (ord_q of the inverse roots), as slope -> multiplicity.
inline std::map<Rational, int> slope_multiplicities(const Polynomial& p, const ValuationContext& ctx) {
    std::map<Rational, int> out;
    if (p.degree() <= 0) return out;
    if (p.coeff(0).is_zero()) throw ZeroRoot("newton_slopes: inverse root 0 in " + p.to_string());

    struct Point {
        long long x;
        long long y;
    };
    std::vector<Point> pts;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        if (auto v = ctx.ord_p(p.coeff(k))) pts.push_back({static_cast<long long>(k), *v});

    // Lower convex hull, monotone chain.
    std::vector<Point> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const Point& o = hull[hull.size() - 2];
            const Point& a = hull.back();
            // Drop `a` unless it lies strictly below the segment o -> pt.
            if ((a.x - o.x) * (pt.y - o.y) - (a.y - o.y) * (pt.x - o.x) <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    for (std::size_t k = 1; k < hull.size(); ++k) {
        const long long dx = hull[k].x - hull[k - 1].x;
        const long long dy = hull[k].y - hull[k - 1].y;
        out[Rational(Integer(dy), Integer(dx * ctx.a()))] += static_cast<int>(dx);
    }
    return out;
}

/// Multiset of slopes in ascending order; its size is deg p.
inline std::vector<Rational> newton_slopes(const Polynomial& p, const ValuationContext& ctx) {
    std::vector<Rational> out;
    for (const auto& [slope, mult] : slope_multiplicities(p, ctx)) out.insert(out.end(), mult, slope);
    return out;
}

}  // namespace hwzeta
