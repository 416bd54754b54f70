#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "hwzeta/errors.hpp"

namespace hwzeta {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DivisionByZero();
        v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
    }

    /// Accepts `n` or `n/d` with an optional leading sign.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_integer(text));
        Integer num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
            throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
        Integer den = parse_integer(den_text);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        return Rational(num, den);
    }

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    /// Greatest integer not exceeding the value.
    Integer floor() const {
        Integer n = numerator();
        Integer d = denominator();
        Integer q = n / d;  // truncates toward zero
        if (n < 0 && q * d != n) q -= 1;
        return q;
    }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    static Integer parse_integer(std::string_view s) {
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
        if (digits.empty()) throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
        for (char c : digits)
            if (c < '0' || c > '9') throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
        Integer n{std::string(digits)};
        return (!s.empty() && s.front() == '-') ? Integer(-n) : n;
    }

    boost::multiprecision::cpp_rational v_;
};

inline Integer ipow(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

/// x^e for any integer e; 0^e with e < 0 throws DivisionByZero.
inline Rational pow(const Rational& x, long e) {
    if (e >= 0)
        return Rational(ipow(x.numerator(), static_cast<unsigned>(e)),
                        ipow(x.denominator(), static_cast<unsigned>(e)));
    if (x.is_zero()) throw DivisionByZero();
    auto k = static_cast<unsigned>(-e);
    return Rational(ipow(x.denominator(), k), ipow(x.numerator(), k));
}

inline std::int64_t to_int64(const Integer& n) {
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + n.str());
    return n.convert_to<std::int64_t>();
}

inline std::int64_t to_int64(const Rational& x) {
    if (!x.is_integer()) throw std::domain_error("not an integer: " + x.to_string());
    return to_int64(x.numerator());
}

/// Trial division; inputs are small.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {
inline std::int64_t multiplicity_of(Integer n, std::uint64_t p) {
    if (n < 0) n = -n;
    std::int64_t k = 0;
    const Integer pp(p);
    while (n % pp == 0) {
        n /= pp;
        ++k;
    }
    return k;
}
}  // namespace detail

/// Exponent of p in x; std::nullopt stands for +infinity (x = 0).
inline std::optional<std::int64_t> ord_p(const Rational& x, std::uint64_t p) {
    if (x.is_zero()) return std::nullopt;
    return detail::multiplicity_of(x.numerator(), p) - detail::multiplicity_of(x.denominator(), p);
}

/// The finite field F_q, q = p^a, as seen by valuations: ord_q = ord_p / a.
class ValuationContext {
public:
    ValuationContext(std::uint64_t p, int a) : p_(p), a_(a) {
        if (!is_prime(p)) throw std::invalid_argument("p not prime: " + std::to_string(p));
        if (a < 1) throw std::invalid_argument("a must be positive: " + std::to_string(a));
    }

    std::uint64_t p() const noexcept { return p_; }
    int a() const noexcept { return a_; }
    Integer q() const { return ipow(Integer(p_), static_cast<unsigned>(a_)); }

    /// q^r for any integer r.
    Rational q_pow(long r) const { return pow(Rational(q()), r); }

    std::optional<std::int64_t> ord_p(const Rational& x) const { return hwzeta::ord_p(x, p_); }

    std::optional<Rational> ord_q(const Rational& x) const {
        auto v = ord_p(x);
        if (!v) return std::nullopt;
        return Rational(Integer(*v), Integer(a_));
    }

    bool operator==(const ValuationContext&) const = default;

private:
    std::uint64_t p_;
    int a_;
};

}  // namespace hwzeta
