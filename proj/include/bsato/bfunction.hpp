#pragma once

#include <optional>

#include "bsato/groebner.hpp"
#include "bsato/unipoly.hpp"

namespace bsato {

/// A rational number extended with +infinity (infinity compares greater
/// than every finite value; adding an integer keeps infinity fixed).
struct ExtRat {
    bool infinite = false;
    Rat value = 0;

    static ExtRat inf() { return ExtRat{true, Rat(0)}; }
    static ExtRat finite(const Rat& v) { return ExtRat{false, v}; }

    bool operator==(const ExtRat& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator<(const ExtRat& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
    bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }
    bool operator>(const ExtRat& o) const { return o < *this; }
    bool operator>=(const ExtRat& o) const { return o <= *this; }

    ExtRat operator+(const Rat& m) const {
        return infinite ? *this : ExtRat::finite(value + m);
    }
    friend ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

    std::string to_string() const;
};

/// Monic b-function with its rational-root multiset (sorted descending)
/// and the rational-root-free residual, which is 1 for a genuine
/// Bernstein-Sato polynomial.
struct BFunction {
    UniPoly poly;
    std::vector<std::pair<Rat, int>> roots;
    UniPoly residual;

    static BFunction from_poly(const UniPoly& p);

    bool is_one() const { return poly.is_one(); }
    /// Largest root; requires at least one root.
    Rat largest_root() const;
    bool has_root(const Rat& r) const;
    /// Divides out one factor (s - r); throws internal_inconsistency when
    /// r is not a root.
    BFunction divided_by_root(const Rat& r) const;
};

/// Generators of Ann_{D[s]} f^s, computed through the graph ideal
/// <t - u f, d_i + u f_{x_i} d_t, uv - 1> with commutative auxiliaries u, v,
/// a block elimination of {u, v}, weight normalization in (t, d_t) and the
/// substitution s = -d_t t. Every returned generator is checked to
/// annihilate f^s exactly. The returned ideal lives over weyl_over(f.ring()).
DIdeal ann_fs(const MPoly& f, const Budget& budget = {}, BudgetUse* use = nullptr);

/// The Bernstein-Sato polynomial of a nonconstant f: the monic generator of
/// (Ann f^s + D[s] f) ∩ Q[s], by block elimination of all x_i, d_i above s.
/// Raises internal_inconsistency if the result has a non-rational factor or
/// a non-negative root.
BFunction bfunction(const MPoly& f, const Budget& budget = {}, BudgetUse* use = nullptr);

/// b-function together with an operator P satisfying P f^{s+1} = b(s) f^s,
/// re-derived by division tracking through the Groebner basis and verified
/// exactly via apply_to_power.
struct CertifiedBFunction {
    BFunction b;
    WeylElem P;  // over weyl_over(f.ring())
};

CertifiedBFunction bfunction_certified(const MPoly& f, const Budget& budget = {},
                                       BudgetUse* use = nullptr);

/// b_f(s) / (s+1).
BFunction reduced_bfunction(const MPoly& f, const Budget& budget = {}, BudgetUse* use = nullptr);
BFunction reduce_by_s_plus_1(const BFunction& b);

/// Minimal exponent of the hypersurface f = 0: infinity when the reduced
/// b-function is 1, else the negative of its largest root.
ExtRat min_exponent_hyp(const MPoly& f, const Budget& budget = {}, BudgetUse* use = nullptr);
ExtRat min_exponent_of(const BFunction& b);  // from a full b-function

/// Log canonical threshold min{alpha~, 1}.
Rat lct_hyp(const MPoly& f, const Budget& budget = {}, BudgetUse* use = nullptr);

}  // namespace bsato
