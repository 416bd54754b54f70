#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hwzeta/errors.hpp"
#include "hwzeta/rmodel/complex.hpp"

namespace hwzeta {

using AnyComplex = std::variant<SlotComplex, CrysComplex>;

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
        std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
        if (k > start) out.push_back({line.substr(start, k - start), start + 1});
    }
    return out;
}

template <class Int>
Int parse_int(const Token& t, std::size_t line) {
    Int v{};
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw SyntaxError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
    return v;
}

inline Polynomial parse_coeffs(const std::vector<Token>& toks, std::size_t from, std::size_t line) {
    if (from >= toks.size()) throw SyntaxError(line, toks.back().column, "expected at least one coefficient");
    std::vector<Rational> c;
    for (std::size_t k = from; k < toks.size(); ++k) {
        try {
            c.push_back(Rational::parse(toks[k].text));
        } catch (const std::invalid_argument&) {
            throw SyntaxError(line, toks[k].column, "expected a rational, got '" + std::string(toks[k].text) + "'");
        }
    }
    return Polynomial(std::move(c));
}

inline void expect_arity(const std::vector<Token>& toks, std::size_t n, std::size_t line, const char* form) {
    if (toks.size() != n) {
        std::size_t col = toks.size() > n ? toks[n].column : toks.back().column;
        throw SyntaxError(line, col, std::string("expected '") + form + "'");
    }
}

inline int slot_kind_rank(const Slot& s) { return static_cast<int>(s.index()); }

inline Bidegree slot_bidegree(const Slot& s) {
    return std::visit([](const auto& x) { return Bidegree{x.i, x.j}; }, s);
}

inline std::string join_coeffs(const Polynomial& p) {
    std::string s;
    for (const auto& c : p.coefficients()) s += " " + c.to_string();
    return s.empty() ? " 0" : s;
}

}  // namespace detail

/// Parses the line-oriented complex format. Throws SyntaxError / SemanticError.
inline AnyComplex parse_complex(std::string_view text) {
    std::optional<std::uint64_t> p;
    std::optional<int> a;
    bool header = false;
    std::size_t first_crys_line = 0, first_slot_line = 0;
    std::vector<std::pair<int, Polynomial>> hs;
    std::vector<std::pair<Bidegree, std::int64_t>> dominoes;
    std::vector<Slot> slots;
    std::size_t last_line = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        last_line = line_no;
        const std::string_view kw = toks[0].text;

        if (!header) {
            if (kw != "complex" || toks.size() != 1)
                throw SyntaxError(line_no, toks[0].column, "expected 'complex' header");
            header = true;
            continue;
        }
        if (kw == "p" || kw == "a") {
            detail::expect_arity(toks, 2, line_no, kw == "p" ? "p <prime>" : "a <positive integer>");
            if (kw == "p") {
                if (p) throw SemanticError(line_no, "duplicate 'p' line");
                p = detail::parse_int<std::uint64_t>(toks[1], line_no);
                if (!is_prime(*p)) throw SemanticError(line_no, "p not prime: " + std::to_string(*p));
            } else {
                if (a) throw SemanticError(line_no, "duplicate 'a' line");
                a = detail::parse_int<int>(toks[1], line_no);
                if (*a < 1) throw SemanticError(line_no, "a must be positive");
            }
        } else if (kw == "H") {
            if (toks.size() < 3) throw SyntaxError(line_no, toks.back().column, "expected 'H <degree> <c0> <c1> ...'");
            int n = detail::parse_int<int>(toks[1], line_no);
            Polynomial poly = detail::parse_coeffs(toks, 2, line_no);
            for (const auto& [m, _] : hs)
                if (m == n) throw SemanticError(line_no, "duplicate H line for degree " + std::to_string(n));
            hs.emplace_back(n, std::move(poly));
            if (!first_crys_line) first_crys_line = line_no;
        } else if (kw == "domino") {
            detail::expect_arity(toks, 4, line_no, "domino <i> <j> <count>");
            int i = detail::parse_int<int>(toks[1], line_no);
            int j = detail::parse_int<int>(toks[2], line_no);
            auto count = detail::parse_int<std::int64_t>(toks[3], line_no);
            dominoes.push_back({{i, j}, count});
            if (!first_crys_line) first_crys_line = line_no;
        } else if (kw == "slot") {
            if (toks.size() < 2) throw SyntaxError(line_no, toks[0].column, "expected slot kind I, II or T");
            const std::string_view kind = toks[1].text;
            if (kind == "I") {
                if (toks.size() < 5)
                    throw SyntaxError(line_no, toks.back().column, "expected 'slot I <i> <j> <c0> <c1> ...'");
                slots.push_back(TypeISlot{detail::parse_int<int>(toks[2], line_no),
                                          detail::parse_int<int>(toks[3], line_no),
                                          detail::parse_coeffs(toks, 4, line_no)});
            } else if (kind == "II") {
                detail::expect_arity(toks, 6, line_no, "slot II <i> <j> <l> <count>");
                slots.push_back(TypeIISlot{detail::parse_int<int>(toks[2], line_no),
                                           detail::parse_int<int>(toks[3], line_no),
                                           detail::parse_int<int>(toks[4], line_no),
                                           detail::parse_int<std::int64_t>(toks[5], line_no)});
            } else if (kind == "T") {
                detail::expect_arity(toks, 5, line_no, "slot T <i> <j> <length>");
                slots.push_back(TorsionSlot{detail::parse_int<int>(toks[2], line_no),
                                            detail::parse_int<int>(toks[3], line_no),
                                            detail::parse_int<std::int64_t>(toks[4], line_no)});
            } else {
                throw SyntaxError(line_no, toks[1].column, "unknown slot kind '" + std::string(kind) + "'");
            }
            if (!first_slot_line) first_slot_line = line_no;
        } else {
            throw SyntaxError(line_no, toks[0].column, "unknown directive '" + std::string(kw) + "'");
        }
    }

    if (!header) throw SyntaxError(std::max<std::size_t>(line_no, 1), 1, "empty input, expected 'complex' header");
    if (!p) throw SemanticError(last_line, "missing 'p' line");
    if (first_crys_line && first_slot_line)
        throw SemanticError(std::max(first_crys_line, first_slot_line),
                            "a file holds either H/domino lines or slot lines, not both");
    BaseField base(*p, a.value_or(1));

    if (first_slot_line) return SlotComplex{base, std::move(slots)};
    CrysComplex c(base);
    for (auto& [n, poly] : hs) c.set_poly(n, std::move(poly));
    for (const auto& [ij, count] : dominoes) c.add_domino(ij.first, ij.second, count);
    return c;
}

inline AnyComplex parse_complex(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_complex(ss.str());
}

/// Canonical order: by bidegree, then kind (I, II, T).
inline SlotComplex normalize(SlotComplex c) {
    std::stable_sort(c.slots.begin(), c.slots.end(), [](const Slot& x, const Slot& y) {
        auto kx = std::pair(detail::slot_bidegree(x), detail::slot_kind_rank(x));
        auto ky = std::pair(detail::slot_bidegree(y), detail::slot_kind_rank(y));
        return kx < ky;
    });
    return c;
}

inline std::string serialize(const CrysComplex& c) {
    std::ostringstream os;
    os << "complex\n";
    os << "p " << c.base().p() << "\n";
    os << "a " << c.base().a() << "\n";
    for (const auto& note : c.notes()) os << "# " << note << "\n";
    for (const auto& [n, poly] : c.polys()) os << "H " << n << detail::join_coeffs(poly) << "\n";
    for (const auto& [ij, count] : c.dominoes()) os << "domino " << ij.first << " " << ij.second << " " << count << "\n";
    return os.str();
}

inline std::string serialize(const SlotComplex& c) {
    std::ostringstream os;
    os << "complex\n";
    os << "p " << c.base.p() << "\n";
    os << "a " << c.base.a() << "\n";
    for (const auto& slot : normalize(c).slots) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, TypeISlot>)
                    os << "slot I " << s.i << " " << s.j << detail::join_coeffs(s.frob) << "\n";
                else if constexpr (std::is_same_v<T, TypeIISlot>)
                    os << "slot II " << s.i << " " << s.j << " " << s.l << " " << s.count << "\n";
                else
                    os << "slot T " << s.i << " " << s.j << " " << s.length << "\n";
            },
            slot);
    }
    return os.str();
}

inline std::string serialize(const AnyComplex& c) {
    return std::visit([](const auto& x) { return serialize(x); }, c);
}

}  // namespace hwzeta
