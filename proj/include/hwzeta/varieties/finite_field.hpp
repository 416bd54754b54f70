#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwzeta/errors.hpp"
#include "hwzeta/exactnum/rational.hpp"

namespace hwzeta {

/// F_{p^e} as F_p[x]/(f), f the least monic irreducible of degree e.
///
/// Monic candidates x^e + c_{e-1}x^{e-1} + ... + c_0 are ordered lexicographically on
/// (c_{e-1}, ..., c_0), which is numeric order of the element code below. Elements are coded as
/// integers sum_k d_k p^k over their coefficient digits d_0..d_{e-1}.
class SmallFiniteField {
public:
    using Element = std::uint32_t;
    static constexpr std::uint64_t enumeration_bound = 1'000'000;

    SmallFiniteField(std::uint64_t p, int e) : p_(p), e_(e) {
        if (!is_prime(p)) throw std::invalid_argument("SmallFiniteField: p not prime: " + std::to_string(p));
        if (e < 1) throw std::invalid_argument("SmallFiniteField: degree must be positive");
        std::uint64_t size = 1;
        for (int k = 0; k < e; ++k) {
            size *= p;
            if (size > enumeration_bound)
                throw BoundExceeded("F_" + std::to_string(p) + "^" + std::to_string(e) + " exceeds the enumeration bound " +
                                    std::to_string(enumeration_bound));
        }
        size_ = static_cast<std::uint32_t>(size);
        modulus_ = least_irreducible(p, e);
    }

    std::uint64_t characteristic() const noexcept { return p_; }
    int degree() const noexcept { return e_; }
    std::uint32_t size() const noexcept { return size_; }

    /// Monic modulus, coefficients from degree 0 up to e (the last is 1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    /// Image of an integer in the prime field.
    Element from_int(std::int64_t n) const {
        auto pp = static_cast<std::int64_t>(p_);
        return static_cast<Element>(((n % pp) + pp) % pp);
    }

    Element add(Element x, Element y) const { return encode(add_digits(decode(x), decode(y))); }

    Element mul(Element x, Element y) const {
        const auto dx = decode(x), dy = decode(y);
        std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
        for (int i = 0; i < e_; ++i) {
            if (!dx[i]) continue;
            for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
        }
        reduce(prod, modulus_, p_);
        prod.resize(e_);
        return encode(prod);
    }

    /// Exhaustive check: no monic factor of degree 1..deg/2.
    static bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint64_t p) {
        const int deg = static_cast<int>(f.size()) - 1;
        if (deg < 1) return false;
        for (int d = 1; 2 * d <= deg; ++d) {
            std::uint64_t count = 1;
            for (int k = 0; k < d; ++k) count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> g(d + 1);
                std::uint64_t c = code;
                for (int k = 0; k < d; ++k) {
                    g[k] = static_cast<std::uint32_t>(c % p);
                    c /= p;
                }
                g[d] = 1;
                std::vector<std::uint64_t> r(f.begin(), f.end());
                reduce(r, g, p);
                bool zero = true;
                for (int k = 0; k < d; ++k) zero = zero && r[k] == 0;
                if (zero) return false;
            }
        }
        return true;
    }

    static std::vector<std::uint32_t> least_irreducible(std::uint64_t p, int e) {
        std::uint64_t count = 1;
        for (int k = 0; k < e; ++k) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> f(e + 1);
            std::uint64_t c = code;
            for (int k = 0; k < e; ++k) {
                f[k] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            f[e] = 1;
            if (is_irreducible(f, p)) return f;
        }
        throw Error("no irreducible polynomial found");  // unreachable for prime p
    }

private:
    std::vector<std::uint64_t> decode(Element x) const {
        std::vector<std::uint64_t> d(e_);
        for (int k = 0; k < e_; ++k) {
            d[k] = x % p_;
            x = static_cast<Element>(x / p_);
        }
        return d;
    }

    Element encode(const std::vector<std::uint64_t>& d) const {
        std::uint64_t x = 0;
        for (int k = e_ - 1; k >= 0; --k) x = x * p_ + d[k];
        return static_cast<Element>(x);
    }

    std::vector<std::uint64_t> add_digits(std::vector<std::uint64_t> x, const std::vector<std::uint64_t>& y) const {
        for (int k = 0; k < e_; ++k) x[k] = (x[k] + y[k]) % p_;
        return x;
    }

    /// r <- r mod g for monic g; r keeps its length, high entries become 0.
    template <class Coeffs>
    static void reduce(std::vector<std::uint64_t>& r, const Coeffs& g, std::uint64_t p) {
        const int dg = static_cast<int>(g.size()) - 1;
        for (int k = static_cast<int>(r.size()) - 1; k >= dg; --k) {
            const std::uint64_t lead = r[k] % p;
            if (!lead) continue;
            for (int i = 0; i <= dg; ++i) r[k - dg + i] = (r[k - dg + i] + (p - lead) * g[i]) % p;
        }
    }

    std::uint64_t p_;
    int e_;
    std::uint32_t size_ = 0;
    std::vector<std::uint32_t> modulus_;
};

}  // namespace hwzeta
