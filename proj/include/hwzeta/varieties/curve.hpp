#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hwzeta/errors.hpp"
#include "hwzeta/rmodel/complex.hpp"
#include "hwzeta/rmodel/io.hpp"
#include "hwzeta/varieties/finite_field.hpp"

namespace hwzeta {

/// y^2 = x^3 + A x + B over F_q with p >= 5; A and B live in the prime field.
class WeierstrassCurve {
public:
    WeierstrassCurve(BaseField base, std::int64_t A, std::int64_t B) : base_(base) {
        const auto p = static_cast<std::int64_t>(base.p());
        if (p < 5) throw std::invalid_argument("short Weierstrass curves need p >= 5");
        A_ = ((A % p) + p) % p;
        B_ = ((B % p) + p) % p;
        // -16 (4A^3 + 27B^2) with p >= 5 vanishes iff 4A^3 + 27B^2 does.
        const Integer disc = Integer(4) * A_ * A_ * A_ + Integer(27) * B_ * B_;
        if (disc % p == 0) throw std::invalid_argument("singular curve: 4A^3 + 27B^2 = 0 mod p");
    }

    const BaseField& base() const noexcept { return base_; }
    std::int64_t A() const noexcept { return A_; }
    std::int64_t B() const noexcept { return B_; }

private:
    BaseField base_;
    std::int64_t A_ = 0;
    std::int64_t B_ = 0;
};

/// Number of projective points over F_{q^m}, by enumeration (affine solutions plus infinity).
inline std::uint64_t count_points_curve(const WeierstrassCurve& curve, int m) {
    if (m < 1) throw std::invalid_argument("count_points_curve: m must be positive");
    const SmallFiniteField field(curve.base().p(), curve.base().a() * m);
    const std::uint32_t n = field.size();

    std::vector<std::uint32_t> square_count(n, 0);
    for (std::uint32_t y = 0; y < n; ++y) ++square_count[field.mul(y, y)];

    const auto A = field.from_int(curve.A());
    const auto B = field.from_int(curve.B());
    std::uint64_t affine = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
        const auto x2 = field.mul(x, x);
        const auto rhs = field.add(field.add(field.mul(x2, x), field.mul(A, x)), B);
        affine += square_count[rhs];
    }
    return affine + 1;
}

/// Parses `curve p 5 a 1 A 1 B 1` (keys in any order, `a` defaults to 1, '#' comments).
inline WeierstrassCurve parse_curve(std::string_view text) {
    std::map<std::string, std::int64_t> kv;
    bool header = false;
    std::size_t line_no = 0, pos = 0;
    std::optional<std::size_t> curve_line;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto toks = detail::tokenize(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (toks.empty()) continue;
        if (header) throw SyntaxError(line_no, toks[0].column, "unexpected content after curve line");
        if (toks[0].text != "curve") throw SyntaxError(line_no, toks[0].column, "expected 'curve'");
        header = true;
        curve_line = line_no;
        if (toks.size() % 2 != 1) throw SyntaxError(line_no, toks.back().column, "expected key/value pairs");
        for (std::size_t k = 1; k < toks.size(); k += 2) {
            std::string key(toks[k].text);
            if (key != "p" && key != "a" && key != "A" && key != "B")
                throw SyntaxError(line_no, toks[k].column, "unknown curve key '" + key + "'");
            if (kv.count(key)) throw SemanticError(line_no, "duplicate key '" + key + "'");
            kv[key] = detail::parse_int<std::int64_t>(toks[k + 1], line_no);
        }
    }
    if (!header) throw SyntaxError(1, 1, "empty input, expected 'curve'");
    for (const char* key : {"p", "A", "B"})
        if (!kv.count(key)) throw SemanticError(*curve_line, std::string("missing curve key '") + key + "'");
    if (kv["p"] < 2 || !is_prime(static_cast<std::uint64_t>(kv["p"])))
        throw SemanticError(*curve_line, "p not prime: " + std::to_string(kv["p"]));
    const int a = kv.count("a") ? static_cast<int>(kv["a"]) : 1;
    if (a < 1) throw SemanticError(*curve_line, "a must be positive");
    try {
        return WeierstrassCurve(BaseField(static_cast<std::uint64_t>(kv["p"]), a), kv["A"], kv["B"]);
    } catch (const std::invalid_argument& e) {
        throw SemanticError(*curve_line, e.what());
    }
}

inline bool looks_like_curve(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto toks = detail::tokenize(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (!toks.empty()) return toks[0].text == "curve";
    }
    return false;
}

}  // namespace hwzeta
