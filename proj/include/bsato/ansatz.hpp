#pragma once

#include <optional>

#include "bsato/fs_expr.hpp"
#include "bsato/unipoly.hpp"

namespace bsato {

/// Search space bounds for the functional-equation ansatz.
struct AnsatzBounds {
    int max_derivation_order = 1;
    int max_coeff_degree = 0;
    int max_s_degree = 1;
};

/// A pair (b, P) with P f^{s+1} = b(s) f^s; b monic.
struct Certificate {
    UniPoly b;
    WeylElem P;  // over weyl_over(f.ring())
};

/// Exact check of the functional equation by clearing f-powers and
/// comparing polynomials in (x, s).
bool verify_certificate(const MPoly& f, const Certificate& cert);

/// b(s) * f^s as an FsExpr (the right-hand side of the equation).
FsExpr b_times_fs(const MPoly& f, const UniPoly& b);

/// Bounded linear-algebra search for the functional equation
/// P f^{s+1} = b(s) f^s, entirely Groebner-free: one exact sparse
/// elimination over Q. Returns the certificate whose b has minimal degree
/// among all solutions within the bounds (monic), or nothing when only
/// b = 0 fits. Any returned b is a polynomial multiple of the true b_f.
///
/// When f is invariant under sign flips x_i -> -x_i the search restricts to
/// the flip-invariant subspace: averaging a certificate over the flip group
/// fixes b and stays within the bounds, so the minimal b is unchanged.
std::optional<Certificate> search(const MPoly& f, const AnsatzBounds& bounds);

/// Iterative-deepening driver: grows the bounds one notch at a time
/// (round-robin) until a certificate appears or the wall clock expires.
/// A semidecision procedure: absence within a budget proves nothing.
std::optional<Certificate> search_deepening(const MPoly& f, const AnsatzBounds& start,
                                            long wall_ms);

}  // namespace bsato
