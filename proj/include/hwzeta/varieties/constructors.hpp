#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwzeta/errors.hpp"
#include "hwzeta/rmodel/complex.hpp"
#include "hwzeta/rmodel/validate.hpp"

namespace hwzeta {

/// P^n: P_{2i} = 1 - q^i t for 0 <= i <= n.
inline CrysComplex projective_space(int n, const BaseField& base) {
    if (n < 0) throw std::invalid_argument("projective_space: n must be >= 0");
    CrysComplex c(base);
    for (int i = 0; i <= n; ++i) c.set_poly(2 * i, Polynomial::linear_factor(base.q_pow(i)));
    return c;
}

/// Smooth complete curve with H^1 polynomial `p1`.
inline CrysComplex curve_from_weil(const Polynomial& p1, const BaseField& base) {
    if (!p1.is_normalized()) throw NotNormalized("curve_from_weil: constant term must be 1: " + p1.to_string());
    if (p1.degree() % 2 != 0)
        throw FunctionalEquationViolated("curve_from_weil: degree " + std::to_string(p1.degree()) + " is odd");
    const Rational q(base.q());
    if (reciprocal_twist(p1, q) != p1)
        throw FunctionalEquationViolated("inverse roots of " + p1.to_string() + " are not stable under a -> q/a");
    for (const auto& [slope, mult] : slope_multiplicities(p1, base))
        if (slope < 0 || slope > 1)
            throw SlopeOutOfRange("slope " + slope.to_string() + " of " + p1.to_string() + " outside [0,1]");

    CrysComplex c(base);
    c.set_poly(0, Polynomial::linear_factor(1));
    c.set_poly(1, p1);
    c.set_poly(2, Polynomial::linear_factor(q));
    require_valid(c);
    return c;
}

/// Product variety: P_n = prod_{n1+n2=n} P_{n1} (x) P_{n2}. Domino tables must be empty.
inline CrysComplex kunneth(const CrysComplex& x, const CrysComplex& y) {
    if (!(x.base() == y.base())) throw BaseMismatch("kunneth: complexes live over different base fields");
    if (!x.dominoes().empty() || !y.dominoes().empty())
        throw DominoKunnethUnsupported("kunneth: no formula for the domino table of a product");
    CrysComplex out(x.base());
    for (const auto& [n1, p1] : x.polys())
        for (const auto& [n2, p2] : y.polys()) out.multiply_poly(n1 + n2, tensor_poly(p1, p2));
    return out;
}

/// Compactly supported counterpart of a complex of dimension `dim`:
/// P^c_n = reciprocal_twist(P_{2 dim - n}, q^dim). Dominoes are dropped with a note.
inline CrysComplex compact_support_dual(const CrysComplex& c, int dim) {
    require_valid(c);
    if (dim < 0) throw std::invalid_argument("compact_support_dual: dim must be >= 0");
    CrysComplex out(c.base());
    const Rational qd = c.base().q_pow(dim);
    for (const auto& [n, p] : c.polys()) out.set_poly(2 * dim - n, reciprocal_twist(p, qd));
    if (!c.dominoes().empty())
        out.add_note("warning: compact_support_dual dropped " + std::to_string(c.dominoes().size()) +
                     " domino entries (no duality formula for dominoes)");
    return out;
}

/// N_n = sum_j (-1)^j s_n(P_j), n = 1..m.
inline std::vector<Integer> zeta_point_counts(const CrysComplex& c, std::size_t m) {
    require_valid(c);
    std::vector<Rational> acc(m);
    for (const auto& [j, p] : c.polys()) {
        const auto s = power_sums(p, m);
        for (std::size_t n = 0; n < m; ++n) acc[n] += (j % 2 == 0) ? s[n] : -s[n];
    }
    std::vector<Integer> out;
    out.reserve(m);
    for (std::size_t n = 0; n < m; ++n) {
        if (!acc[n].is_integer())
            throw NonIntegralCount("N_" + std::to_string(n + 1) + " = " + acc[n].to_string() + " is not an integer");
        out.push_back(acc[n].numerator());
    }
    return out;
}

/// Degree-2g Weil polynomial of a curve with point counts N_1, N_2, ...: s_n = 1 + q^n - N_n,
/// c_1..c_g by Newton's identities, c_{2g-k} = q^{g-k} c_k. Counts beyond N_g are checked.
inline Polynomial weil_from_counts(const std::vector<Integer>& counts, int g, const BaseField& base) {
    if (g < 1) throw std::invalid_argument("weil_from_counts: genus must be >= 1");
    if (counts.size() < static_cast<std::size_t>(g))
        throw Inconsistent("weil_from_counts: need at least " + std::to_string(g) + " counts, got " +
                           std::to_string(counts.size()));
    const Integer q = base.q();
    auto power_sum = [&](std::size_t n) {
        return Rational(Integer(1) + ipow(q, static_cast<unsigned>(n)) - counts[n - 1]);
    };

    std::vector<Rational> c(2 * g + 1);
    c[0] = 1;
    for (int k = 1; k <= g; ++k) {
        // k c_k = -(s_k + c_1 s_{k-1} + ... + c_{k-1} s_1)
        Rational acc = power_sum(k);
        for (int i = 1; i < k; ++i) acc += c[i] * power_sum(k - i);
        c[k] = -acc / Rational(k);
    }
    for (int k = 0; k < g; ++k) c[2 * g - k] = Rational(ipow(q, static_cast<unsigned>(g - k))) * c[k];
    Polynomial p1(std::move(c));

    const auto s = power_sums(p1, counts.size());
    for (std::size_t n = static_cast<std::size_t>(g) + 1; n <= counts.size(); ++n)
        if (s[n - 1] != power_sum(n))
            throw Inconsistent("weil_from_counts: N_" + std::to_string(n) + " = " + counts[n - 1].str() +
                               " contradicts the functional-equation completion");
    return p1;
}

}  // namespace hwzeta
