#pragma once

#include <cstdint>
#include <map>

#include "hwzeta/rmodel/complex.hpp"
#include "hwzeta/rmodel/validate.hpp"

namespace hwzeta {

/// Finitely supported table (i, j) -> value; zero entries are never stored.
class InvariantTable {
public:
    Rational at(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? Rational() : it->second;
    }

    void add(int i, int j, const Rational& v) {
        if (v.is_zero()) return;
        Rational& x = entries_[{i, j}];
        x += v;
        if (x.is_zero()) entries_.erase({i, j});
    }

    const std::map<Bidegree, Rational>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    bool all_integral() const {
        for (const auto& [_, v] : entries_)
            if (!v.is_integer()) return false;
        return true;
    }

    bool operator==(const InvariantTable&) const = default;

private:
    std::map<Bidegree, Rational> entries_;
};

/// T^{i,j}: the domino dimensions.
inline InvariantTable domino_table(const CrysComplex& c) {
    InvariantTable t;
    for (const auto& [ij, count] : c.dominoes()) t.add(ij.first, ij.second, Rational(count));
    return t;
}

/// m^{i,j} from the slopes of the P_n. A slope mu of P_n with multiplicity h sits in column
/// i = floor(mu) and splits as h(i+1-mu) at (i, n-i) and h(mu-i) at (i+1, n-i-1).
inline InvariantTable slope_numbers(const CrysComplex& c) {
    InvariantTable t;
    for (const auto& [n, p] : c.polys()) {
        for (const auto& [mu, h] : slope_multiplicities(p, c.base())) {
            const int i = static_cast<int>(to_int64(mu.floor()));
            const Rational frac = mu - Rational(i);
            t.add(i, n - i, Rational(h) * (Rational(1) - frac));
            t.add(i + 1, n - i - 1, Rational(h) * frac);
        }
    }
    if (!t.all_integral()) throw NonIntegralInvariant("slope numbers are not integral; the slope data is not realizable");
    return t;
}

/// h_W^{i,j} = m^{i,j} + T^{i,j} - 2 T^{i-1,j+1} + T^{i-2,j+2}.
inline InvariantTable hodge_witt(const CrysComplex& c) {
    InvariantTable t = slope_numbers(c);
    for (const auto& [ij, count] : c.dominoes()) {
        const auto [i, j] = ij;
        t.add(i, j, Rational(count));
        t.add(i + 1, j - 1, Rational(-2 * count));
        t.add(i + 2, j - 2, Rational(count));
    }
    return t;
}

/// e_r: domino term sum_j (-1)^{j-1} T^{r-1,j-r} plus the slope term
/// sum_n sum_{mu <= r} (-1)^n (r - mu) mult(mu).
inline std::int64_t e_r(const CrysComplex& c, int r) {
    Rational total;
    for (const auto& [ij, count] : c.dominoes()) {
        const auto [i, jj] = ij;
        if (i != r - 1) continue;
        const int j = jj + r;
        total += Rational(((j - 1) % 2 == 0) ? count : -count);
    }
    for (const auto& [n, p] : c.polys()) {
        const int sign = (n % 2 == 0) ? 1 : -1;
        for (const auto& [mu, h] : slope_multiplicities(p, c.base()))
            if (mu <= Rational(r)) total += Rational(sign * h) * (Rational(r) - mu);
    }
    if (!total.is_integer()) throw NonIntegralInvariant("e_" + std::to_string(r) + " = " + total.to_string());
    return to_int64(total);
}

/// sum over i <= r of (-1)^{i+j} (r - i) h_W^{i,j}.
inline Rational weighted_hw(const CrysComplex& c, int r) {
    Rational total;
    const InvariantTable hw = hodge_witt(c);
    for (const auto& [ij, v] : hw.entries()) {
        const auto [i, j] = ij;
        if (i > r) continue;
        const Rational term = Rational(r - i) * v;
        total += ((i + j) % 2 == 0) ? term : -term;
    }
    return total;
}

/// Per-column alternating sums sum_j (-1)^j h_W^{i,j}; zero columns omitted.
inline std::map<int, std::int64_t> euler_column_sums(const CrysComplex& c) {
    std::map<int, Rational> acc;
    const InvariantTable hw = hodge_witt(c);
    for (const auto& [ij, v] : hw.entries()) acc[ij.first] += (ij.second % 2 == 0) ? v : -v;
    std::map<int, std::int64_t> out;
    for (const auto& [i, v] : acc)
        if (!v.is_zero()) out[i] = to_int64(v);
    return out;
}

}  // namespace hwzeta
