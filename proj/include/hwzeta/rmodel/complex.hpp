#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hwzeta/exactnum/polynomial.hpp"
#include "hwzeta/exactnum/rational.hpp"

namespace hwzeta {

/// Base field F_q, q = p^a. Same data and invariants as the valuation context.
using BaseField = ValuationContext;

/// Bidegree (i, j): i is the first (column) degree, j the cohomological degree.
using Bidegree = std::pair<int, int>;

/// Type-I elementary piece at (i, j): frob = det(1 - F^a t) on H^j(M)^i tensored with K.
struct TypeISlot {
    int i = 0;
    int j = 0;
    Polynomial frob = Polynomial::one();

    bool operator==(const TypeISlot&) const = default;
};

/// `count` domino quotients U_l{-i} at (i, j). `l` is carried along but no invariant reads it.
struct TypeIISlot {
    int i = 0;
    int j = 0;
    int l = 0;
    std::int64_t count = 1;

    bool operator==(const TypeIISlot&) const = default;
};

/// Finite-length piece; invisible to every invariant.
struct TorsionSlot {
    int i = 0;
    int j = 0;
    std::int64_t length = 1;

    bool operator==(const TorsionSlot&) const = default;
};

using Slot = std::variant<TypeISlot, TypeIISlot, TorsionSlot>;

/// Column-resolved description: a list of elementary pieces.
struct SlotComplex {
    BaseField base;
    std::vector<Slot> slots;

    bool operator==(const SlotComplex&) const = default;
};

/// Simple-complex level description: P_n = det(1 - F^a t | H^n(sM)_K) per degree plus the
/// domino table T^{i,j}.
///
/// Stored form is normalized: degrees with P_n = 1 and zero domino counts are dropped, so
/// equality is semantic. `notes` records provenance remarks and is ignored by equality.
class CrysComplex {
public:
    explicit CrysComplex(BaseField base) : base_(base) {}

    const BaseField& base() const noexcept { return base_; }
    const std::map<int, Polynomial>& polys() const noexcept { return polys_; }
    const std::map<Bidegree, std::int64_t>& dominoes() const noexcept { return dominoes_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

    /// P_n, or 1 when degree n carries nothing.
    Polynomial poly(int n) const {
        auto it = polys_.find(n);
        return it == polys_.end() ? Polynomial::one() : it->second;
    }

    std::int64_t domino(int i, int j) const {
        auto it = dominoes_.find({i, j});
        return it == dominoes_.end() ? 0 : it->second;
    }

    void set_poly(int n, Polynomial p) {
        if (p.is_one())
            polys_.erase(n);
        else
            polys_[n] = std::move(p);
    }

    /// P_n *= p
    void multiply_poly(int n, const Polynomial& p) { set_poly(n, poly(n) * p); }

    void add_domino(int i, int j, std::int64_t count) {
        std::int64_t& v = dominoes_[{i, j}];
        v += count;
        if (v == 0) dominoes_.erase({i, j});
    }

    void add_note(std::string note) { notes_.push_back(std::move(note)); }

    bool empty() const noexcept { return polys_.empty() && dominoes_.empty(); }

    friend bool operator==(const CrysComplex& x, const CrysComplex& y) {
        return x.base_ == y.base_ && x.polys_ == y.polys_ && x.dominoes_ == y.dominoes_;
    }

private:
    BaseField base_;
    std::map<int, Polynomial> polys_;
    std::map<Bidegree, std::int64_t> dominoes_;
    std::vector<std::string> notes_;
};

}  // namespace hwzeta
