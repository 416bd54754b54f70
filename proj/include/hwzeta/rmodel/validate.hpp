#pragma once

#include <string>
#include <vector>

#include "hwzeta/errors.hpp"
#include "hwzeta/rmodel/complex.hpp"

namespace hwzeta {

namespace detail {

inline std::string slot_location(std::size_t index, const char* kind, int i, int j) {
    return "slot " + std::to_string(index) + " (" + kind + " at " + std::to_string(i) + "," + std::to_string(j) + ")";
}

/// Normalization and realizability of a Frobenius polynomial; optionally the [0,1) slope window.
inline void check_frobenius(const Polynomial& p, const BaseField& base, const std::string& where, bool type_one,
                            std::vector<Diagnostic>& out) {
    if (!p.is_normalized()) {
        out.push_back({where, "normalization", "constant term " + p.coeff(0).to_string() + " is not 1"});
        return;
    }
    for (const auto& [slope, mult] : slope_multiplicities(p, base)) {
        if (type_one && (slope < 0 || slope >= 1))
            out.push_back({where, "slope-range", "slope " + slope.to_string() + " outside [0,1)"});
        if (!(slope * Rational(mult)).is_integer())
            out.push_back({where, "realizability", "non-realizable slope " + slope.to_string() + " with multiplicity " +
                                                       std::to_string(mult)});
    }
}

}  // namespace detail

/// Empty iff every data-model rule holds.
inline std::vector<Diagnostic> validate(const SlotComplex& c) {
    std::vector<Diagnostic> out;
    for (std::size_t k = 0; k < c.slots.size(); ++k) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, TypeISlot>) {
                    detail::check_frobenius(s.frob, c.base, detail::slot_location(k, "I", s.i, s.j), true, out);
                } else if constexpr (std::is_same_v<T, TypeIISlot>) {
                    if (s.count < 1)
                        out.push_back({detail::slot_location(k, "II", s.i, s.j), "domino-count",
                                       "count " + std::to_string(s.count) + " is not positive"});
                } else {
                    if (s.length < 1)
                        out.push_back({detail::slot_location(k, "torsion", s.i, s.j), "torsion-length",
                                       "length " + std::to_string(s.length) + " is not positive"});
                }
            },
            c.slots[k]);
    }
    return out;
}

inline std::vector<Diagnostic> validate(const CrysComplex& c) {
    std::vector<Diagnostic> out;
    for (const auto& [n, p] : c.polys())
        detail::check_frobenius(p, c.base(), "H " + std::to_string(n), false, out);
    for (const auto& [ij, count] : c.dominoes())
        if (count < 0)
            out.push_back({"domino " + std::to_string(ij.first) + "," + std::to_string(ij.second), "domino-count",
                           "count " + std::to_string(count) + " is negative"});
    return out;
}

template <class C>
void require_valid(const C& c) {
    auto ds = validate(c);
    if (!ds.empty()) throw ValidationError(std::move(ds));
}

}  // namespace hwzeta
