#pragma once

#include <map>

#include "bsato/mpoly.hpp"
#include "bsato/weyl.hpp"

namespace bsato {

/// Finite sum  sum_m q_m(x, s) * f^{s+m}  with exact polynomial
/// coefficients; the carrier for operator applications to symbolic powers.
/// q_m lives in the ring of f's variables with s appended. Equality is
/// decided exactly by clearing to a common f-power and comparing
/// polynomials in (x, s).
class FsExpr {
public:
    FsExpr() = default;
    FsExpr(MPoly f, PolyRingPtr xs_ring);

    /// The expression 1 * f^{s+k}.
    static FsExpr power(const MPoly& f, long k);

    const MPoly& f() const { return f_; }
    const PolyRingPtr& xs_ring() const { return xs_ring_; }
    const std::map<long, MPoly>& terms() const { return terms_; }

    void add_term(long m, const MPoly& q);

    FsExpr operator+(const FsExpr& o) const;
    FsExpr operator-(const FsExpr& o) const;
    FsExpr scaled(const MPoly& q) const;  // multiply every coefficient by q(x,s)

    /// True iff the expression is identically zero as an element of
    /// Q[x, 1/f, s] f^s (decided by clearing f-powers).
    bool is_zero() const;
    bool equals(const FsExpr& o) const;

    /// Cleared polynomial form: returns (p, m0) with *this = p(x,s) * f^{s+m0}
    /// and m0 the least exponent offset present (0 when empty).
    std::pair<MPoly, long> cleared() const;

    std::string to_string() const;

private:
    MPoly f_;               // over the x-ring
    PolyRingPtr xs_ring_;   // x-ring plus trailing "s"
    std::map<long, MPoly> terms_;
};

/// Ring of f's variables with "s" appended; the coefficient ring of FsExpr.
PolyRingPtr xs_ring_of(const PolyRingPtr& x_ring);

/// Applies a Weyl operator P (over f's variables, with central parameter s)
/// to f^{s+k}, k an integer shift of the symbolic exponent. Exact; uses the
/// chain rule d_i f^{s+m} = (s+m) (d_i f) f^{s+m-1}.
/// Throws std::invalid_argument on ring mismatch.
FsExpr apply_to_power(const WeylElem& P, const MPoly& f, long k);

/// Applies P to an existing expression (composition consistency:
/// apply(P, apply_to_power(Q, f, k)) == apply_to_power(weyl_mul(P, Q), f, k)).
FsExpr apply_operator(const WeylElem& P, const FsExpr& e);

}  // namespace bsato
