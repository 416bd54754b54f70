#pragma once

#include "hwzeta/rmodel/complex.hpp"
#include "hwzeta/rmodel/validate.hpp"

namespace hwzeta {

/// Column i of H^j(M) contributes its Frobenius twisted by p^i to H^{i+j}(sM): inverse roots
/// scale by q^i. Dominoes are counted; torsion is dropped.
inline CrysComplex to_crys(const SlotComplex& c) {
    require_valid(c);
    CrysComplex out(c.base);
    for (const auto& slot : c.slots) {
        if (const auto* s = std::get_if<TypeISlot>(&slot))
            out.multiply_poly(s->i + s->j, scale_roots(s->frob, c.base.q_pow(s->i)));
        else if (const auto* d = std::get_if<TypeIISlot>(&slot))
            out.add_domino(d->i, d->j, d->count);
    }
    return out;
}

/// M{m}[n], with (M{m}[n])^{i,j} = M^{i+m,j+n}.
inline CrysComplex shift(const CrysComplex& c, int m, int n) {
    CrysComplex out(c.base());
    const Rational scale = c.base().q_pow(-m);
    for (const auto& [deg, p] : c.polys()) out.set_poly(deg - m - n, scale_roots(p, scale));
    for (const auto& [ij, count] : c.dominoes()) out.add_domino(ij.first - m, ij.second - n, count);
    for (const auto& note : c.notes()) out.add_note(note);
    return out;
}

/// M(r) = M{r}[-r]: degrees stay put, inverse roots are divided by q^r.
inline CrysComplex tate_twist(const CrysComplex& c, int r) { return shift(c, r, -r); }

}  // namespace hwzeta
